#include <doctest.h>

#include <set>

#include "lech/closure.hpp"
#include "lech/enumerate.hpp"
#include "lech/errors.hpp"
#include "lech/multiplicity.hpp"
#include "support/oracles.hpp"

using namespace lech;

namespace {

Ring veronese() { return AmbientRing::semigroup({{2, 0}, {1, 1}, {0, 2}}); }

std::set<std::vector<ExponentVector>> generator_sets(const std::vector<MonomialIdeal>& ideals) {
  std::set<std::vector<ExponentVector>> out;
  for (const auto& i : ideals) out.insert(i.generators());
  return out;
}

}  // namespace

TEST_CASE("partition counts") {
  const auto p = partition_numbers(12);
  CHECK(p[12] == 77);
  for (std::uint32_t n = 0; n <= 12; ++n) {
    const auto expected = oracle::partition_count(static_cast<int>(n), static_cast<int>(n));
    CHECK(p[n] == expected);
    if (n > 0) CHECK(partitions(n).size() == expected);
  }
  for (const auto& parts : partitions(7)) {
    CHECK(std::is_sorted(parts.rbegin(), parts.rend()));
  }
}

TEST_CASE("staircases have the right colength") {
  auto r = AmbientRing::polynomial(2);
  for (std::uint32_t n = 1; n <= 9; ++n) {
    for (const auto& parts : partitions(n)) CHECK(colength(staircase_ideal(r, parts)) == n);
  }
}

TEST_CASE("exhaustive enumeration of k[x,y]") {
  EnumerationSpec spec{AmbientRing::polynomial(2)};
  spec.max_colength = 5;
  CHECK(enumerate_ideals(spec).size() == 18);
  spec.max_colength = 10;
  const auto ideals = enumerate_ideals(spec);
  std::uint64_t expected = 0;
  for (int n = 1; n <= 10; ++n) expected += oracle::partition_count(n, n);
  CHECK(expected == 138);
  CHECK(ideals.size() == expected);
  CHECK(generator_sets(ideals).size() == expected);
  for (std::size_t i = 1; i < ideals.size(); ++i) CHECK(colength(ideals[i - 1]) <= colength(ideals[i]));
}

TEST_CASE("order-ideal growth matches the partition route") {
  auto r = AmbientRing::polynomial(2);
  for (std::uint32_t n = 1; n <= 7; ++n) {
    std::vector<MonomialIdeal> staircases;
    for (const auto& parts : partitions(n)) staircases.push_back(staircase_ideal(r, parts));
    CHECK(generator_sets(order_ideal_enumeration(r, n)) == generator_sets(staircases));
  }
}

TEST_CASE("order ideals of k[x,y,z] are counted by plane partitions") {
  auto r = AmbientRing::polynomial(3);
  const std::uint64_t plane[] = {1, 3, 6, 13, 24};
  for (std::uint64_t n = 1; n <= 5; ++n) {
    const auto ideals = order_ideal_enumeration(r, n);
    CHECK(ideals.size() == plane[n - 1]);
    for (const auto& i : ideals) CHECK(colength(i) == n);
  }
  EnumerationSpec spec{r};
  spec.max_colength = 3;
  try {
    enumerate_ideals(spec);
    FAIL("expected DimensionUnsupported");
  } catch (const LechError& e) {
    CHECK(e.kind() == ErrorKind::DimensionUnsupported);
  }
}

TEST_CASE("Veronese enumeration") {
  auto v = veronese();
  EnumerationSpec spec{v};
  spec.max_colength = 6;
  const auto ideals = enumerate_ideals(spec);
  CHECK(generator_sets(ideals).size() == ideals.size());
  std::size_t at_one = 0;
  for (const auto& i : ideals) {
    CHECK(i.is_m_primary());
    CHECK(colength(i) <= 6);
    at_one += colength(i) == 1;
  }
  CHECK(at_one == 1);
}

TEST_CASE("closed-only filter") {
  EnumerationSpec spec{AmbientRing::polynomial(2)};
  spec.max_colength = 7;
  spec.filter = EnumerationFilter::IntegrallyClosed;
  const auto closed = enumerate_ideals(spec);
  CHECK_FALSE(closed.empty());
  for (const auto& i : closed) CHECK(is_integrally_closed(i));
  spec.filter = EnumerationFilter::All;
  std::size_t expected = 0;
  for (const auto& i : enumerate_ideals(spec)) expected += is_integrally_closed(i);
  CHECK(closed.size() == expected);
}

TEST_CASE("generator-bounded enumeration") {
  EnumerationSpec spec{AmbientRing::polynomial(2)};
  spec.mode = EnumerationMode::ByGenerators;
  spec.max_generators = 3;
  spec.max_degree = 3;
  const auto ideals = enumerate_ideals(spec);
  CHECK(generator_sets(ideals).size() == ideals.size());
  for (const auto& i : ideals) {
    CHECK(i.is_m_primary());
    CHECK(i.min_gens_count() <= 3);
  }
  // Two generators must be pure powers: 3 * 3 choices.
  std::size_t two = 0;
  for (const auto& i : ideals) two += i.min_gens_count() == 2;
  CHECK(two == 9);
}

TEST_CASE("random enumeration is seeded and deterministic") {
  EnumerationSpec spec{AmbientRing::polynomial(2)};
  spec.mode = EnumerationMode::Random;
  spec.count = 25;
  spec.seed = 99;
  const auto a = enumerate_ideals(spec);
  const auto b = enumerate_ideals(spec);
  CHECK(a.size() == 25);
  CHECK(a == b);
  spec.seed = 100;
  CHECK_FALSE(enumerate_ideals(spec) == a);
  spec.filter = EnumerationFilter::IntegrallyClosed;
  for (const auto& i : enumerate_ideals(spec)) CHECK(is_integrally_closed(i));
}

TEST_CASE("sup ratio curve agrees with a direct maximum") {
  EnumerationSpec spec{AmbientRing::polynomial(2)};
  const auto curve = sup_ratio_curve(spec, {2, 4, 6, 8}, 3);
  spec.max_colength = 8;
  const auto ideals = enumerate_ideals(spec);
  std::uint64_t previous = 0;
  for (const auto& row : curve) {
    Rational best = 0, band = 0;
    for (const auto& i : ideals) {
      const auto len = colength(i);
      const Rational ratio(multiplicity(i), 2 * len);
      if (len <= row.cutoff) best = std::max(best, ratio);
      if (len > previous && len <= row.cutoff) band = std::max(band, ratio);
    }
    CHECK(row.max_ratio == best);
    REQUIRE(row.band_max);
    CHECK(*row.band_max == band);
    previous = row.cutoff;
  }
  CHECK(curve.front().max_ratio == Rational(1, 2));
}

TEST_CASE("families") {
  auto r = AmbientRing::polynomial(2);
  const auto powers = max_powers(r, 4);
  REQUIRE(powers.size() == 4);
  for (unsigned n = 1; n <= 4; ++n) CHECK(powers[n - 1] == power(MonomialIdeal::maximal(r), n));
  CHECK(pure_powers(r, {2, 3}) == MonomialIdeal(r, {{2, 0}, {0, 3}}));
  auto v = veronese();
  CHECK(pure_powers(v, {1, 2}).generators().size() == 2);
  CHECK(colength(pure_powers(v, {1, 1})) == 2);
}

TEST_CASE("greedy extremal search stays within its generator budget") {
  auto r = AmbientRing::polynomial(2);
  for (std::size_t n = 2; n <= 5; ++n) {
    const auto result = hanes_extremal(r, n);
    CHECK(result.ideal.min_gens_count() <= n);
    const Rational start(BigInt(n - 1) * (n - 1), BigInt(n) * (n - 1));  // ratio of m^{N-1}
    CHECK(result.ratio >= start);
    CHECK(result.ratio == Rational(multiplicity(result.ideal), 2 * colength(result.ideal)));
    CHECK(result.trail.size() == result.moves);
    for (std::size_t i = 1; i < result.trail.size(); ++i) CHECK(result.trail[i - 1] < result.trail[i]);
    CHECK(result.ratio <= Rational(1) - Rational(1, static_cast<long>(n)));
  }
}
