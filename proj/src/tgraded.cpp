#include "lech/tgraded.hpp"

#include <algorithm>
#include <map>

#include "lech/closure.hpp"
#include "lech/errors.hpp"
#include "lech/multiplicity.hpp"

namespace lech {

TGradedIdeal::TGradedIdeal(Ring base, std::vector<MonomialIdeal> components)
    : base_(std::move(base)), components_(std::move(components)) {
  if (components_.empty()) fail(ErrorKind::InvalidChain, "T-graded ideal needs K >= 1");
  for (const auto& c : components_) {
    if (!same_ring(c.ambient(), base_)) fail(ErrorKind::BaseMismatch, "component lives in a different ring");
  }
  if (components_.front().is_zero() || !components_.front().is_m_primary()) {
    fail(ErrorKind::InvalidChain, "I_0 must be m-primary");
  }
  if (components_.back().is_unit()) fail(ErrorKind::InvalidChain, "I_{K-1} must be a proper ideal");
  for (std::size_t k = 0; k + 1 < components_.size(); ++k) {
    if (!components_[k + 1].contains(components_[k])) {
      fail(ErrorKind::InvalidChain, "components are not an ascending chain at k = " + std::to_string(k));
    }
  }
}

MonomialIdeal TGradedIdeal::component(std::size_t k) const {
  return k < components_.size() ? components_[k] : MonomialIdeal::unit(base_);
}

MonomialIdeal TGradedIdeal::flatten() const {
  Ring flat = base_->with_t_variable();
  std::vector<ExponentVector> gens;
  for (std::size_t k = 0; k < components_.size(); ++k) {
    for (const auto& u : components_[k].generators()) gens.push_back(u.extended(static_cast<std::int64_t>(k)));
  }
  gens.push_back(ExponentVector(base_->dim()).extended(static_cast<std::int64_t>(components_.size())));
  return minimalize(std::move(gens), flat);
}

TGradedIdeal t_ideal_from_generators(const Ring& base, const std::vector<TGenerator>& gens) {
  std::int64_t k = -1;
  for (const auto& g : gens) {
    if (g.base.dim() != base->dim() || g.t_degree < 0) fail(ErrorKind::BadGeneratorChoice, "malformed generator");
    if (g.base.is_zero() && (k < 0 || g.t_degree < k)) k = g.t_degree;
  }
  if (k <= 0) fail(ErrorKind::BadGeneratorChoice, "generators need a pure power T^K with K >= 1");
  std::vector<MonomialIdeal> components;
  for (std::int64_t level = 0; level < k; ++level) {
    std::vector<ExponentVector> level_gens;
    for (const auto& g : gens) {
      if (g.t_degree <= level) level_gens.push_back(g.base);
    }
    components.push_back(minimalize(std::move(level_gens), base));
  }
  try {
    return TGradedIdeal(base, std::move(components));
  } catch (const LechError& err) {
    throw LechError(ErrorKind::BadGeneratorChoice, std::string("generators do not give a valid chain: ") + err.what());
  }
}

std::vector<TGenerator> t_minimal_generators(const TGradedIdeal& ideal) {
  std::vector<TGenerator> out;
  for (std::size_t k = 0; k < ideal.k(); ++k) {
    for (const auto& u : ideal.components()[k].generators()) {
      if (k == 0 || !ideal.components()[k - 1].contains(u)) out.push_back({u, static_cast<std::int64_t>(k)});
    }
  }
  out.push_back({ExponentVector(ideal.base_dim()), static_cast<std::int64_t>(ideal.k())});
  return out;
}

std::uint64_t t_length(const TGradedIdeal& ideal) {
  std::uint64_t total = 0;
  for (const auto& c : ideal.components()) total += colength(c);
  return total;
}

TGradedIdeal t_product(const TGradedIdeal& a, const TGradedIdeal& b) {
  if (!same_ring(a.base(), b.base())) fail(ErrorKind::BaseMismatch, "T-graded ideals over different bases");
  const std::size_t k_total = a.k() + b.k();
  std::vector<MonomialIdeal> components;
  components.reserve(k_total);
  for (std::size_t k = 0; k < k_total; ++k) {
    std::vector<ExponentVector> gens;
    for (std::size_t i = 0; i <= k; ++i) {
      const std::size_t j = k - i;
      if (i >= a.k() && j >= b.k()) continue;
      MonomialIdeal term = i >= a.k()   ? b.components()[j]
                           : j >= b.k() ? a.components()[i]
                                        : product(a.components()[i], b.components()[j]);
      gens.insert(gens.end(), term.generators().begin(), term.generators().end());
    }
    components.push_back(minimalize(std::move(gens), a.base()));
  }
  while (components.size() > 1 && components.back().is_unit()) components.pop_back();
  return TGradedIdeal(a.base(), std::move(components));
}

TGradedIdeal t_power(const TGradedIdeal& a, unsigned n) {
  if (n == 0) fail(ErrorKind::InvalidChain, "t_power needs n >= 1");
  TGradedIdeal result = a;
  for (unsigned i = 1; i < n; ++i) result = t_product(result, a);
  return result;
}

GeneratorCountReport t_min_gens(const TGradedIdeal& ideal) {
  GeneratorCountReport report;
  report.mu = t_minimal_generators(ideal).size();
  report.bound = ideal.components().front().min_gens_count() + colength(ideal.components().front());
  report.within_bound = report.mu <= report.bound;
  report.tight = report.mu == report.bound;
  return report;
}

namespace {

BigInt t_multiplicity_at(const TGradedIdeal& ideal, unsigned n_max) {
  std::vector<std::uint64_t> lengths;
  TGradedIdeal current = ideal;
  for (unsigned n = 1; n <= n_max; ++n) {
    if (n > 1) current = t_product(current, ideal);
    lengths.push_back(t_length(current));
  }
  auto trace = analyze_lengths(std::move(lengths), ideal.base_dim() + 1);
  if (!trace.e_value) {
    fail(ErrorKind::NotStabilized, "T-graded top difference not constant by n_max = " + std::to_string(n_max));
  }
  return *trace.e_value;
}

// e of each distinct component, in order.
std::vector<BigInt> component_multiplicities(const TGradedIdeal& ideal) {
  std::vector<BigInt> out;
  for (std::size_t k = 0; k < ideal.k(); ++k) {
    if (k > 0 && ideal.components()[k] == ideal.components()[k - 1]) out.push_back(out.back());
    else out.push_back(multiplicity(ideal.components()[k]));
  }
  return out;
}

}  // namespace

BigInt t_multiplicity(const TGradedIdeal& ideal, unsigned n_max) {
  const std::size_t dim = ideal.base_dim() + 1;
  if (n_max != 0) {
    if (n_max < dim + kStabilizationWindow) fail(ErrorKind::NotStabilized, "n_max must be at least d + 3");
    return t_multiplicity_at(ideal, n_max);
  }
  n_max = default_n_max(dim);
  for (int attempt = 0;; ++attempt) {
    try {
      return t_multiplicity_at(ideal, n_max);
    } catch (const LechError& err) {
      if (err.kind() != ErrorKind::NotStabilized || attempt >= 2) throw;
      n_max *= 2;
    }
  }
}

DoubleGradedReport double_graded_decomposition_check(const TGradedIdeal& ideal, unsigned n_max) {
  DoubleGradedReport r;
  r.t_length = t_length(ideal);
  for (const auto& c : ideal.components()) r.component_sum += colength(c);
  r.flat_colength = colength(ideal.flatten());
  r.lengths_match = r.t_length == r.flat_colength && r.component_sum == r.t_length;

  std::vector<MonomialIdeal> closed;
  for (const auto& c : ideal.components()) closed.push_back(integral_closure(c));
  TGradedIdeal closed_ideal(ideal.base(), std::move(closed));
  r.e_original = t_multiplicity(ideal, n_max);
  r.e_closed = t_multiplicity(closed_ideal, n_max);
  r.closed_length = t_length(closed_ideal);
  r.e_equal = r.e_original == r.e_closed;
  r.length_nonincreasing = r.closed_length <= r.t_length;
  r.holds = r.lengths_match && r.e_equal && r.length_nonincreasing;
  return r;
}

MumfordReport mumford_chain_check(const TGradedIdeal& ideal, unsigned n_max) {
  MumfordReport r;
  const unsigned d = static_cast<unsigned>(ideal.base_dim());
  r.e = t_multiplicity(ideal, n_max);
  r.length = t_length(ideal);
  r.component_e = component_multiplicities(ideal);
  BigInt e_sum = 0;
  std::uint64_t len_sum = 0;
  const BigInt d_fact = factorial(d);
  for (std::size_t k = 0; k < ideal.k(); ++k) {
    const std::uint64_t len = colength(ideal.components()[k]);
    r.component_lengths.push_back(len);
    e_sum += r.component_e[k];
    len_sum += len;
    Rational ratio(r.component_e[k], d_fact * len);
    if (k == 0 || ratio > r.rhs) r.rhs = ratio;
  }
  r.lhs = Rational(r.e, factorial(d + 1) * r.length);
  r.mid = Rational(e_sum, d_fact * len_sum);
  r.holds = r.lhs <= r.mid && r.mid <= r.rhs;
  return r;
}

BracketPowerTrace bracket_power_experiment(const TGradedIdeal& ideal, std::vector<TGenerator> generators,
                                           const std::vector<std::uint64_t>& q_values) {
  if (ideal.base_dim() != 1) fail(ErrorKind::DimensionUnsupported, "bracket powers need a one-dimensional base");
  if (generators.empty()) generators = t_minimal_generators(ideal);
  if (!(t_ideal_from_generators(ideal.base(), generators) == ideal)) {
    fail(ErrorKind::BadGeneratorChoice, "chosen generators do not generate J");
  }
  const std::size_t n = generators.size();
  if (n < 2) fail(ErrorKind::BadGeneratorChoice, "bracket experiment needs at least two generators");

  BracketPowerTrace trace;
  trace.generators = generators;
  trace.n_generators = n;
  trace.note =
      "one-dimensional monomial base stands in for a hypersurface section; validates the combinatorial identities only";
  const std::uint64_t slope = 2 * n - 3;

  for (auto q : q_values) {
    if (q == 0) fail(ErrorKind::BadGeneratorChoice, "q must be positive");
    BracketStep step;
    step.q = q;
    std::vector<TGenerator> scaled;
    for (const auto& g : generators) {
      scaled.push_back({g.base.scaled(static_cast<std::int64_t>(q)),
                        checked_mul(g.t_degree, static_cast<std::int64_t>(q))});
    }
    step.length = t_length(t_ideal_from_generators(ideal.base(), scaled));

    std::uint64_t component_sum = 0;
    for (std::size_t i = 0; i < ideal.k(); ++i) {
      std::vector<ExponentVector> gens;
      for (const auto& g : generators) {
        if (g.t_degree <= static_cast<std::int64_t>(i)) gens.push_back(g.base.scaled(static_cast<std::int64_t>(q)));
      }
      component_sum += colength(minimalize(std::move(gens), ideal.base()));
    }
    step.component_formula = q * component_sum;
    step.identity_holds = step.length == step.component_formula;

    step.s = (q + slope - 1) / slope;
    const auto big = t_length(t_power(ideal, static_cast<unsigned>(q + step.s)));
    const auto small = t_length(t_power(ideal, static_cast<unsigned>(step.s)));
    step.surjection_rhs = BigInt(big) - BigInt(2 * (n - 1)) * BigInt(small);
    step.surjection_holds = BigInt(step.length) >= step.surjection_rhs;
    step.ratio = Rational(BigInt(step.length), BigInt(q) * BigInt(q));
    trace.steps.push_back(std::move(step));
  }

  for (const auto& e : component_multiplicities(ideal)) trace.target += e;
  trace.e_j = t_multiplicity(ideal);
  trace.lower_bound = Rational(trace.e_j, 2) * (Rational(1) + Rational(1, slope));
  if (!trace.steps.empty()) {
    const auto largest = std::max_element(trace.steps.begin(), trace.steps.end(),
                                          [](const auto& a, const auto& b) { return a.q < b.q; });
    trace.limit_estimate = largest->ratio;
  }
  trace.limit_matches_target = trace.limit_estimate == Rational(trace.target);
  trace.lower_bound_holds = trace.lower_bound <= trace.limit_estimate;
  return trace;
}

}  // namespace lech
