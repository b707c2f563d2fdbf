#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "lech/monomial_ideal.hpp"
#include "lech/numeric.hpp"

namespace lech {

enum class EnumerationMode { ByColength, ByGenerators, Random };
enum class EnumerationFilter { All, IntegrallyClosed };

struct EnumerationSpec {
  Ring ambient;
  EnumerationMode mode = EnumerationMode::ByColength;
  std::uint64_t max_colength = 1;     // ByColength
  std::size_t max_generators = 3;     // ByGenerators
  std::int64_t max_degree = 4;        // ByGenerators, Random
  std::size_t count = 10;             // Random
  std::uint64_t seed = 1;             // Random
  EnumerationFilter filter = EnumerationFilter::All;
};

/// Each qualifying m-primary ideal exactly once (Random: `count` seeded
/// draws), ordered by colength, then generator list. Exhaustive modes need
/// d <= 2 for ByColength; throws DimensionUnsupported otherwise.
std::vector<MonomialIdeal> enumerate_ideals(const EnumerationSpec& spec);

/// Integer partitions of n, parts descending, partitions in descending lexicographic order.
std::vector<std::vector<std::uint32_t>> partitions(std::uint32_t n);
/// p(0..n) by Euler's pentagonal recurrence.
std::vector<BigInt> partition_numbers(std::uint32_t n);
/// Staircase ideal of k[x,y] whose row j (y-degree j) holds parts[j] standard monomials.
MonomialIdeal staircase_ideal(const Ring& ring, const std::vector<std::uint32_t>& parts);

/// Every downward-closed subset of S of size n containing 0, as ideals,
/// grown one cover at a time. Any dimension; used directly for semigroups
/// and as a cross-check of the partition route.
std::vector<MonomialIdeal> order_ideal_enumeration(const Ring& ring, std::uint64_t n);

struct SupRatioRow {
  std::uint64_t cutoff = 0;
  Rational max_ratio;                   // over colength <= cutoff
  std::optional<MonomialIdeal> argmax;
  std::optional<Rational> band_max;     // over colength in (previous cutoff, cutoff]
  std::optional<MonomialIdeal> band_argmax;
};

std::vector<SupRatioRow> sup_ratio_curve(const EnumerationSpec& spec, std::vector<std::uint64_t> cutoffs,
                                         unsigned jobs = 1);

/// m^1, ..., m^n.
std::vector<MonomialIdeal> max_powers(const Ring& ring, unsigned n);
/// (x_1^{a_1}, ..., x_d^{a_d}); on a semigroup, multiples of the extreme-ray points.
MonomialIdeal pure_powers(const Ring& ring, const std::vector<std::int64_t>& exponents);

struct ExtremalSearchResult {
  MonomialIdeal ideal;
  Rational ratio;
  std::size_t moves = 0;
  std::vector<Rational> trail;  // ratio after each accepted move
};

/// Greedy hill climb over staircases of k[x,y] with mu <= N, starting at
/// m^{N-1}. Heuristic: a lower bound for the sup, not a certified maximum.
ExtremalSearchResult hanes_extremal(const Ring& ring, std::size_t n);

}  // namespace lech
