#include "lech/inequalities.hpp"

#include <algorithm>
#include <map>

#include "lech/closure.hpp"
#include "lech/errors.hpp"
#include "lech/multiplicity.hpp"
#include "lech/parallel.hpp"

namespace lech {

std::string_view bound_name(BoundKind kind) {
  switch (kind) {
    case BoundKind::Lech: return "lech";
    case BoundKind::LechStrict: return "lech_strict";
    case BoundKind::HanesC: return "hanes";
    case BoundKind::Dim2MFull: return "mfull2";
    case BoundKind::DimDGenerators: return "dimd";
    case BoundKind::ColengthBound: return "colength";
    case BoundKind::UniformLechEpsilon: return "uniform";
  }
  return "unknown";
}

std::optional<BoundKind> parse_bound_name(std::string_view name) {
  for (auto kind : {BoundKind::Lech, BoundKind::LechStrict, BoundKind::HanesC, BoundKind::Dim2MFull,
                    BoundKind::DimDGenerators, BoundKind::ColengthBound, BoundKind::UniformLechEpsilon}) {
    if (bound_name(kind) == name) return kind;
  }
  return std::nullopt;
}

IdealInvariants compute_invariants(const MonomialIdeal& ideal, const BigInt& ring_e) {
  IdealInvariants inv;
  inv.dim = ideal.dim();
  inv.e = multiplicity(ideal);
  inv.colength = colength(ideal);
  inv.mu = ideal.min_gens_count();
  inv.ring_e = ring_e;
  inv.ratio = Rational(inv.e, factorial(static_cast<unsigned>(inv.dim)) * inv.colength);
  return inv;
}

namespace {

// e <= d! c e(R) l.
BoundEntry shaped_bound(BoundKind kind, const IdealInvariants& inv, const Rational& c) {
  BoundEntry entry;
  entry.kind = kind;
  entry.constant = c;
  entry.value = Rational(factorial(static_cast<unsigned>(inv.dim))) * c * Rational(inv.ring_e) *
                Rational(BigInt(inv.colength));
  entry.hypothesis_met = true;
  const Rational e(inv.e);
  entry.satisfied = e <= entry.value;
  entry.tight = e == entry.value;
  entry.strict = e < entry.value;
  return entry;
}

BigInt pow_big(const BigInt& base, unsigned exp) {
  BigInt out = 1;
  for (unsigned i = 0; i < exp; ++i) out *= base;
  return out;
}

}  // namespace

Rational rational_root_upper(std::uint64_t n, unsigned power, std::uint64_t denominator) {
  // Smallest k with k^power >= n * denominator^power.
  const BigInt target = BigInt(n) * pow_big(BigInt(denominator), power);
  BigInt lo = 0;
  BigInt hi = BigInt(n) * denominator;
  if (hi == 0) hi = 1;
  while (lo < hi) {
    BigInt mid = (lo + hi) / 2;
    if (pow_big(mid, power) >= target) hi = mid;
    else lo = mid + 1;
  }
  return Rational(lo, BigInt(denominator));
}

Rational hanes_constant(std::uint64_t n, std::size_t d) {
  const unsigned power = static_cast<unsigned>(d - 1);
  const Rational root = power == 1 ? Rational(BigInt(n)) : rational_root_upper(n, power);
  const Rational base = Rational(1) - Rational(1) / root;
  Rational c = 1;
  for (unsigned i = 0; i < power; ++i) c *= base;
  return c;
}

BoundEntry check_lech(const IdealInvariants& inv) {
  BoundEntry entry = shaped_bound(inv.dim >= 2 ? BoundKind::LechStrict : BoundKind::Lech, inv, Rational(1));
  if (inv.dim >= 2) {
    entry.satisfied = entry.strict;
    entry.note = "strict: equality is impossible for d >= 2";
  }
  return entry;
}

BoundEntry check_hanes(const IdealInvariants& inv, std::optional<std::size_t> n) {
  const std::size_t gens = n.value_or(inv.mu);
  if (inv.dim < 2) fail(ErrorKind::DimensionUnsupported, "Hanes bound needs d >= 2");
  if (gens < inv.dim) fail(ErrorKind::HypothesisNotMet, "Hanes bound needs N >= d");
  if (gens < inv.mu) fail(ErrorKind::HypothesisNotMet, "N is below mu(I)");
  auto entry = shaped_bound(BoundKind::HanesC, inv, hanes_constant(gens, inv.dim));
  if (inv.dim > 2) entry.note = "N^(1/(d-1)) replaced by a rational upper bound";
  return entry;
}

BoundEntry check_dim2_mfull(const MonomialIdeal& ideal, const IdealInvariants& inv) {
  if (inv.dim != 2) fail(ErrorKind::DimensionUnsupported, "mfull2 bound is for d = 2");
  if (m_full_certificate(ideal).status != FullnessStatus::MFullByClosure) {
    fail(ErrorKind::HypothesisNotMet, "ideal is not certified m-full (not integrally closed)");
  }
  const auto n = static_cast<std::int64_t>(inv.mu);
  return shaped_bound(BoundKind::Dim2MFull, inv, Rational(1) - Rational(1, 2 * n - 2));
}

BoundEntry check_dimd_generators(const MonomialIdeal& ideal, const IdealInvariants& inv) {
  if (inv.dim <= 2) fail(ErrorKind::DimensionUnsupported, "dimd bound is for d > 2");
  if (m_full_certificate(ideal).status != FullnessStatus::MFullByClosure) {
    fail(ErrorKind::HypothesisNotMet, "ideal is not certified m-full (not integrally closed)");
  }
  if (inv.mu < inv.dim) fail(ErrorKind::HypothesisNotMet, "dimd bound needs N >= d");
  const BigInt denom = factorial(static_cast<unsigned>(inv.dim - 1)) * inv.mu;
  return shaped_bound(BoundKind::DimDGenerators, inv, Rational(1) - Rational(BigInt(1), denom));
}

BoundEntry check_colength_bound(const IdealInvariants& inv) {
  if (inv.dim < 2) fail(ErrorKind::DimensionUnsupported, "colength bound needs d >= 2");
  const BigInt denom = factorial(static_cast<unsigned>(inv.dim)) * inv.colength;
  return shaped_bound(BoundKind::ColengthBound, inv, Rational(1) - Rational(BigInt(1), denom));
}

BoundEntry check_uniform(const IdealInvariants& inv, const Rational& epsilon) {
  if (inv.ring_e <= 1) fail(ErrorKind::HypothesisNotMet, "uniform Lech needs e(R) > 1");
  // d! (e(R) - eps) l  ==  d! c e(R) l  with  c = 1 - eps / e(R).
  return shaped_bound(BoundKind::UniformLechEpsilon, inv, Rational(1) - epsilon / Rational(inv.ring_e));
}

bool RatioReport::all_pass() const {
  return std::all_of(bounds.begin(), bounds.end(), [](const auto& b) { return b.hypothesis_met && b.satisfied; });
}

bool RatioReport::any_violation() const {
  return std::any_of(bounds.begin(), bounds.end(), [](const auto& b) { return b.hypothesis_met && !b.satisfied; });
}

bool RatioReport::any_rejected() const {
  return std::any_of(bounds.begin(), bounds.end(), [](const auto& b) { return !b.hypothesis_met; });
}

RatioReport evaluate(const MonomialIdeal& ideal, const std::vector<BoundKind>& bounds, const BigInt& ring_e) {
  RatioReport report{ideal, compute_invariants(ideal, ring_e), {}};
  for (auto kind : bounds) {
    try {
      switch (kind) {
        case BoundKind::Lech:
        case BoundKind::LechStrict: report.bounds.push_back(check_lech(report.inv)); break;
        case BoundKind::HanesC: report.bounds.push_back(check_hanes(report.inv)); break;
        case BoundKind::Dim2MFull: report.bounds.push_back(check_dim2_mfull(ideal, report.inv)); break;
        case BoundKind::DimDGenerators: report.bounds.push_back(check_dimd_generators(ideal, report.inv)); break;
        case BoundKind::ColengthBound: report.bounds.push_back(check_colength_bound(report.inv)); break;
        case BoundKind::UniformLechEpsilon:
          fail(ErrorKind::HypothesisNotMet, "uniform bound needs an epsilon; use uniform_epsilon_report");
      }
    } catch (const LechError& err) {
      if (err.kind() != ErrorKind::HypothesisNotMet && err.kind() != ErrorKind::DimensionUnsupported) throw;
      BoundEntry rejected;
      rejected.kind = kind;
      rejected.note = std::string(error_kind_name(err.kind())) + ": " + err.what();
      report.bounds.push_back(std::move(rejected));
    }
  }
  return report;
}

void sort_reports(std::vector<RatioReport>& reports) {
  std::stable_sort(reports.begin(), reports.end(), [](const auto& a, const auto& b) {
    if (a.inv.colength != b.inv.colength) return a.inv.colength < b.inv.colength;
    return a.ideal.generators() < b.ideal.generators();
  });
}

UniformEpsilonReport uniform_epsilon_report(const Ring& ring, const std::vector<MonomialIdeal>& ideals,
                                            unsigned jobs) {
  UniformEpsilonReport report;
  report.ring_e = ring_multiplicity(ring);
  if (report.ring_e <= 1) {
    fail(ErrorKind::HypothesisNotMet, "uniform Lech needs e(R) > 1; regular rings have sup ratio -> 1");
  }
  auto invariants = parallel_map<IdealInvariants>(
      ideals.size(), jobs, [&](std::size_t i) { return compute_invariants(ideals[i], report.ring_e); });
  std::map<std::uint64_t, Rational> per_colength;
  for (std::size_t i = 0; i < ideals.size(); ++i) {
    const auto& inv = invariants[i];
    if (!report.argmax || inv.ratio > report.max_ratio) {
      report.max_ratio = inv.ratio;
      report.argmax = ideals[i];
    }
    auto [it, inserted] = per_colength.emplace(inv.colength, inv.ratio);
    if (!inserted && inv.ratio > it->second) it->second = inv.ratio;
  }
  for (const auto& [len, ratio] : per_colength) report.curve.push_back({len, ratio});
  report.epsilon = Rational(report.ring_e) - report.max_ratio;
  report.epsilon_positive = report.epsilon > 0;
  report.all_within_uniform_bound = std::all_of(invariants.begin(), invariants.end(), [&](const auto& inv) {
    return check_uniform(inv, report.epsilon).satisfied;
  });
  return report;
}

std::vector<PowerFamilyPoint> power_family_curve(const Ring& ring, unsigned n_max) {
  std::vector<PowerFamilyPoint> out;
  const auto m = MonomialIdeal::maximal(ring);
  const BigInt d_fact = factorial(static_cast<unsigned>(ring->dim()));
  MonomialIdeal current = m;
  for (unsigned n = 1; n <= n_max; ++n) {
    if (n > 1) current = product(current, m);
    PowerFamilyPoint p;
    p.n = n;
    p.e = multiplicity(current);
    p.colength = colength(current);
    p.ratio = Rational(p.e, d_fact * p.colength);
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace lech
