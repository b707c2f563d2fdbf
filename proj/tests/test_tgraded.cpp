#include <doctest.h>

#include "lech/errors.hpp"
#include "lech/multiplicity.hpp"
#include "lech/tgraded.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace lech;

namespace {

ErrorKind error_of(auto&& f) {
  try {
    f();
  } catch (const LechError& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::InvalidConfig;
}

// J = (x^2) + (x)T + T^2 over k[x].
TGradedIdeal example_j() {
  auto base = AmbientRing::polynomial(1);
  return TGradedIdeal(base, {MonomialIdeal(base, {{2}}), MonomialIdeal(base, {{1}})});
}

}  // namespace

TEST_CASE("flattening preserves colength") {
  SplitMix64 rng(41);
  for (int trial = 0; trial < 100; ++trial) {
    auto base = AmbientRing::polynomial(1 + rng.below(2));
    auto i = gen::tgraded(base, rng);
    const auto flat = i.flatten();
    const auto expected = oracle::colength(gen::to_points(flat), base->dim() + 1);
    CHECK(t_length(i) == expected);
    CHECK(colength(flat) == expected);
  }
}

TEST_CASE("T-graded products match products in R[T]") {
  SplitMix64 rng(42);
  for (int trial = 0; trial < 40; ++trial) {
    auto base = AmbientRing::polynomial(1 + rng.below(2));
    auto a = gen::tgraded(base, rng);
    auto b = gen::tgraded(base, rng);
    CHECK(t_product(a, b).flatten() == product(a.flatten(), b.flatten()));
    CHECK(t_power(a, 3).flatten() == power(a.flatten(), 3));
  }
}

TEST_CASE("homogeneous minimal generators are the minimal generators of the flat ideal") {
  SplitMix64 rng(43);
  for (int trial = 0; trial < 100; ++trial) {
    auto base = AmbientRing::polynomial(1 + rng.below(2));
    auto i = gen::tgraded(base, rng);
    const auto report = t_min_gens(i);
    CHECK(report.mu == i.flatten().min_gens_count());
    CHECK(report.mu == t_minimal_generators(i).size());
    CHECK(report.bound == i.component(0).min_gens_count() + colength(i.component(0)));
    CHECK(report.within_bound);
    CHECK(report.mu <= report.bound);
  }
}

TEST_CASE("generator bound is an equality for J = (x^2) + (x)T + T^2") {
  const auto r = t_min_gens(example_j());
  CHECK(r.mu == 3);
  CHECK(r.bound == 3);
  CHECK(r.tight);
}

TEST_CASE("T-multiplicity matches the flat multiplicity") {
  SplitMix64 rng(44);
  for (int trial = 0; trial < 20; ++trial) {
    auto base = AmbientRing::polynomial(1 + rng.below(2));
    auto i = gen::tgraded(base, rng, 3, 3);
    CHECK(t_multiplicity(i) == multiplicity(i.flatten()));
  }
  CHECK(t_multiplicity(example_j()) == 4);
}

TEST_CASE("Mumford chain on a hand-checked case") {
  auto base = AmbientRing::polynomial(2);
  auto m = MonomialIdeal::maximal(base);
  const auto r = mumford_chain_check(TGradedIdeal(base, {m, m}));
  CHECK(r.e == 2);
  CHECK(r.length == 2);
  CHECK(r.lhs == Rational(1, 6));
  CHECK(r.mid == Rational(1, 2));
  CHECK(r.rhs == Rational(1, 2));
  CHECK(r.holds);
}

TEST_CASE("Mumford chain on random T-graded ideals") {
  SplitMix64 rng(45);
  for (int trial = 0; trial < 30; ++trial) {
    auto base = AmbientRing::polynomial(1 + trial % 2);
    auto i = gen::tgraded(base, rng, 3, 3);
    const auto r = mumford_chain_check(i);
    CHECK(r.lhs <= r.mid);
    CHECK(r.mid <= r.rhs);
    CHECK(r.holds);
  }
}

TEST_CASE("double-graded decomposition") {
  SplitMix64 rng(46);
  for (int trial = 0; trial < 20; ++trial) {
    auto base = AmbientRing::polynomial(1 + rng.below(2));
    const auto r = double_graded_decomposition_check(gen::tgraded(base, rng, 3, 3));
    CHECK(r.lengths_match);
    CHECK(r.e_equal);
    CHECK(r.length_nonincreasing);
  }
}

TEST_CASE("bracket powers of J") {
  const auto trace = bracket_power_experiment(example_j(), {}, {2, 4, 8, 16, 32});
  CHECK(trace.n_generators == 3);
  for (const auto& s : trace.steps) {
    CHECK(s.length == 3 * s.q * s.q);
    CHECK(s.identity_holds);
    CHECK(s.surjection_holds);
    CHECK(s.ratio == 3);
  }
  // At q = 4: s = 2, l(J^6) - 4 l(J^2) with l(J^n) = n(2n + 1).
  CHECK(trace.steps[1].surjection_rhs == 6 * 13 - 4 * 2 * 5);
  CHECK(trace.target == 3);
  CHECK(trace.e_j == 4);
  CHECK(trace.lower_bound == Rational(8, 3));
  CHECK(trace.lower_bound_holds);
  CHECK(trace.limit_matches_target);
}

TEST_CASE("l(J^n) = n(2n + 1)") {
  auto j = example_j();
  for (unsigned n = 1; n <= 6; ++n) CHECK(t_length(t_power(j, n)) == n * (2 * n + 1));
}

TEST_CASE("explicit generators") {
  auto base = AmbientRing::polynomial(1);
  auto j = t_ideal_from_generators(base, {{{2}, 0}, {{1}, 1}, {{0}, 2}});
  CHECK(j == example_j());
  CHECK(error_of([&] { t_ideal_from_generators(base, {{{2}, 0}, {{1}, 1}}); }) == ErrorKind::BadGeneratorChoice);
}

TEST_CASE("chain validation") {
  auto base = AmbientRing::polynomial(1);
  auto x = MonomialIdeal(base, {{1}});
  auto x2 = MonomialIdeal(base, {{2}});
  CHECK(error_of([&] { TGradedIdeal(base, {x, x2}); }) == ErrorKind::InvalidChain);
  CHECK(error_of([&] { TGradedIdeal(base, {x, MonomialIdeal::unit(base)}); }) == ErrorKind::InvalidChain);
  CHECK(error_of([&] { TGradedIdeal(base, {}); }) == ErrorKind::InvalidChain);
  auto other = AmbientRing::polynomial(2);
  CHECK(error_of([&] { TGradedIdeal(base, {MonomialIdeal::maximal(other)}); }) == ErrorKind::BaseMismatch);
}
