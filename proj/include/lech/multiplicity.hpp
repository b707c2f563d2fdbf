#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "lech/monomial_ideal.hpp"
#include "lech/numeric.hpp"

namespace lech {

/// Samples of n -> l(R/I^n) with their iterated finite differences.
struct HilbertSamuelTrace {
  std::vector<std::uint64_t> lengths;            // lengths[n-1] = l(R/I^n)
  std::vector<std::vector<BigInt>> differences;  // differences[k] = k-th differences, k = 0..d
  std::optional<unsigned> stabilized_at;         // first n of the constant top-difference tail
  std::optional<BigInt> e_value;
};

/// Number of consecutive equal top differences required to call the
/// Hilbert-Samuel polynomial stable.
inline constexpr unsigned kStabilizationWindow = 3;

unsigned default_n_max(std::size_t dim);

/// e(I) as the eventually-constant d-th difference of l(R/I^n), n <= n_max.
/// Throws NotStabilized when the trailing window is not constant.
HilbertSamuelTrace multiplicity_oracle(const MonomialIdeal& ideal, unsigned n_max);

/// Finite-difference analysis of an arbitrary length sequence in dimension d.
HilbertSamuelTrace analyze_lengths(std::vector<std::uint64_t> lengths, std::size_t dim);

/// multiplicity_oracle at default_n_max, doubling n_max up to `retries` times.
BigInt multiplicity(const MonomialIdeal& ideal, unsigned retries = 2);

/// 2 * area(C \ NP(I)) / covol(L), exact. d = 2 only.
BigInt newton_multiplicity_2d(const MonomialIdeal& ideal);

/// e(R) = e(m). 1 for polynomial rings without computation.
BigInt ring_multiplicity(const Ring& ring, unsigned n_max = 0);

}  // namespace lech
