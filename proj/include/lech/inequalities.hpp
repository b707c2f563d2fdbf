#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lech/monomial_ideal.hpp"
#include "lech/numeric.hpp"

namespace lech {

enum class BoundKind { Lech, LechStrict, HanesC, Dim2MFull, DimDGenerators, ColengthBound, UniformLechEpsilon };

/// CLI/report name: lech, lech_strict, hanes, mfull2, dimd, colength, uniform.
std::string_view bound_name(BoundKind kind);
/// Accepts the CLI names; "lech" resolves to Lech (strictness decided by d).
std::optional<BoundKind> parse_bound_name(std::string_view name);

/// e, l, mu of one ideal plus e(R); computed once and shared by every bound.
struct IdealInvariants {
  std::size_t dim = 0;
  BigInt e;
  std::uint64_t colength = 0;
  std::size_t mu = 0;
  BigInt ring_e;
  Rational ratio;  // e / (d! l)
};

IdealInvariants compute_invariants(const MonomialIdeal& ideal, const BigInt& ring_e);

struct BoundEntry {
  BoundKind kind = BoundKind::Lech;
  Rational constant;  // c in e <= d! c e(R) l, when the bound has that shape
  Rational value;     // right-hand side
  bool hypothesis_met = false;
  bool satisfied = false;
  bool tight = false;
  bool strict = false;
  std::string note;
};

struct RatioReport {
  MonomialIdeal ideal;
  IdealInvariants inv;
  std::vector<BoundEntry> bounds;

  bool all_pass() const;
  bool any_violation() const;
  bool any_rejected() const;
};

/// Smallest k / denominator with (k / denominator)^power >= n.
Rational rational_root_upper(std::uint64_t n, unsigned power, std::uint64_t denominator = 1'000'000);
/// (1 - 1/N^{1/(d-1)})^{d-1}, exact for d = 2; for d > 2 the root is rounded
/// up to a multiple of 10^-6, which can only enlarge the constant.
Rational hanes_constant(std::uint64_t n, std::size_t d);

// Each check throws HypothesisNotMet / DimensionUnsupported when its
// hypotheses fail; evaluate() records those as rejected entries instead.
BoundEntry check_lech(const IdealInvariants& inv);
BoundEntry check_hanes(const IdealInvariants& inv, std::optional<std::size_t> n = std::nullopt);
BoundEntry check_dim2_mfull(const MonomialIdeal& ideal, const IdealInvariants& inv);
BoundEntry check_dimd_generators(const MonomialIdeal& ideal, const IdealInvariants& inv);
BoundEntry check_colength_bound(const IdealInvariants& inv);
BoundEntry check_uniform(const IdealInvariants& inv, const Rational& epsilon);

RatioReport evaluate(const MonomialIdeal& ideal, const std::vector<BoundKind>& bounds, const BigInt& ring_e);

/// Sort by colength, then generator list.
void sort_reports(std::vector<RatioReport>& reports);

struct CurvePoint {
  std::uint64_t colength = 0;
  Rational max_ratio;
};

struct UniformEpsilonReport {
  BigInt ring_e;
  Rational max_ratio;
  Rational epsilon;  // e(R) - max ratio
  std::optional<MonomialIdeal> argmax;
  std::vector<CurvePoint> curve;  // per colength
  bool epsilon_positive = false;
  bool all_within_uniform_bound = false;
};

/// Throws HypothesisNotMet when e(R) <= 1.
UniformEpsilonReport uniform_epsilon_report(const Ring& ring, const std::vector<MonomialIdeal>& ideals,
                                            unsigned jobs = 1);

struct PowerFamilyPoint {
  unsigned n = 0;
  BigInt e;
  std::uint64_t colength = 0;
  Rational ratio;
};

/// ratio(m^n) for n = 1..n_max.
std::vector<PowerFamilyPoint> power_family_curve(const Ring& ring, unsigned n_max);

}  // namespace lech
