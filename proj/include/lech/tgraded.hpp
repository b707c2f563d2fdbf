#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lech/monomial_ideal.hpp"
#include "lech/numeric.hpp"

namespace lech {

/// I_0 + I_1 T + ... + I_{K-1} T^{K-1} + T^K in R[T], with
/// I_0 ⊆ I_1 ⊆ ... ⊆ I_{K-1} ⊊ R and I_0 m-primary. Components of index
/// >= K are the unit ideal.
class TGradedIdeal {
 public:
  /// Throws BaseMismatch or InvalidChain.
  TGradedIdeal(Ring base, std::vector<MonomialIdeal> components);

  const Ring& base() const noexcept { return base_; }
  std::size_t base_dim() const noexcept { return base_->dim(); }
  std::size_t k() const noexcept { return components_.size(); }
  const std::vector<MonomialIdeal>& components() const noexcept { return components_; }
  /// I_k, or the unit ideal for k >= K.
  MonomialIdeal component(std::size_t k) const;

  /// The same ideal as a monomial ideal of R[T] (last coordinate is T).
  MonomialIdeal flatten() const;

  friend bool operator==(const TGradedIdeal& a, const TGradedIdeal& b) {
    return same_ring(a.base_, b.base_) && a.components_ == b.components_;
  }

 private:
  Ring base_;
  std::vector<MonomialIdeal> components_;
};

/// Homogeneous generator a * T^j of an ideal in R[T].
struct TGenerator {
  ExponentVector base;
  std::int64_t t_degree = 0;
};

/// Ideal generated by the given homogeneous monomials; a pure power of T
/// must be present. Throws BadGeneratorChoice otherwise.
TGradedIdeal t_ideal_from_generators(const Ring& base, const std::vector<TGenerator>& gens);

/// Minimal homogeneous generators u T^k: u a minimal generator of I_k not in I_{k-1}, plus T^K.
std::vector<TGenerator> t_minimal_generators(const TGradedIdeal& ideal);

std::uint64_t t_length(const TGradedIdeal& ideal);
TGradedIdeal t_product(const TGradedIdeal& a, const TGradedIdeal& b);
TGradedIdeal t_power(const TGradedIdeal& a, unsigned n);

struct GeneratorCountReport {
  std::size_t mu = 0;
  std::size_t bound = 0;  // mu(I_0) + l(R/I_0)
  bool within_bound = false;
  bool tight = false;
};

GeneratorCountReport t_min_gens(const TGradedIdeal& ideal);

/// Finite differences of order d_base + 1 on n -> t_length(I^n).
BigInt t_multiplicity(const TGradedIdeal& ideal, unsigned n_max = 0);

struct DoubleGradedReport {
  std::uint64_t t_length = 0;
  std::uint64_t component_sum = 0;
  std::uint64_t flat_colength = 0;
  bool lengths_match = false;
  BigInt e_original;
  BigInt e_closed;
  std::uint64_t closed_length = 0;
  bool e_equal = false;
  bool length_nonincreasing = false;
  bool holds = false;
};

DoubleGradedReport double_graded_decomposition_check(const TGradedIdeal& ideal, unsigned n_max = 0);

struct MumfordReport {
  BigInt e;
  std::uint64_t length = 0;
  std::vector<BigInt> component_e;
  std::vector<std::uint64_t> component_lengths;
  Rational lhs;  // e(I) / ((d+1)! l(R[T]/I))
  Rational mid;  // sum e(I_k) / (d! sum l(R/I_k))
  Rational rhs;  // max_k e(I_k) / (d! l(R/I_k))
  bool holds = false;
};

MumfordReport mumford_chain_check(const TGradedIdeal& ideal, unsigned n_max = 0);

struct BracketStep {
  std::uint64_t q = 0;
  std::uint64_t length = 0;            // direct component lengths of J^[q]
  std::uint64_t component_formula = 0; // q * sum_i l(R/J_i^[q])
  bool identity_holds = false;
  std::uint64_t s = 0;                 // ceil(q / (2N - 3))
  BigInt surjection_rhs;               // l(J^{q+s}) - 2(N-1) l(J^s)
  bool surjection_holds = false;
  Rational ratio;                      // length / q^2
};

struct BracketPowerTrace {
  std::vector<TGenerator> generators;
  std::size_t n_generators = 0;
  std::vector<BracketStep> steps;
  Rational limit_estimate;  // ratio at the largest q
  BigInt target;            // sum_i e(J_i)
  BigInt e_j;
  Rational lower_bound;     // (e(J)/2)(1 + 1/(2N-3))
  bool lower_bound_holds = false;
  bool limit_matches_target = false;
  std::string note;
};

/// Bracket powers J^[q] = (a^q T^{jq}) over a one-dimensional base. An empty
/// generator list means the minimal generators of J.
BracketPowerTrace bracket_power_experiment(const TGradedIdeal& ideal, std::vector<TGenerator> generators,
                                           const std::vector<std::uint64_t>& q_values);

}  // namespace lech
