#include "lech/multiplicity.hpp"

#include <algorithm>

#include "lech/errors.hpp"
#include "lech/geometry.hpp"

namespace lech {

unsigned default_n_max(std::size_t dim) {
  if (dim <= 2) return 12;
  if (dim == 3) return 8;
  return static_cast<unsigned>(dim) + 5;
}

HilbertSamuelTrace analyze_lengths(std::vector<std::uint64_t> lengths, std::size_t dim) {
  HilbertSamuelTrace trace;
  trace.lengths = std::move(lengths);
  // Prepend l(R/I^0) = 0 so the k-th difference at n only uses n-k..n.
  std::vector<BigInt> level{0};
  for (auto l : trace.lengths) level.emplace_back(l);
  trace.differences.push_back(level);
  for (std::size_t k = 1; k <= dim; ++k) {
    std::vector<BigInt> next;
    for (std::size_t i = 1; i < level.size(); ++i) next.push_back(level[i] - level[i - 1]);
    trace.differences.push_back(next);
    level = std::move(next);
  }
  const auto& top = trace.differences.back();
  if (top.empty()) return trace;
  std::size_t start = top.size() - 1;
  while (start > 0 && top[start - 1] == top.back()) --start;
  if (top.size() - start >= kStabilizationWindow) {
    // top[i] is the d-th difference ending at n = i + d.
    trace.stabilized_at = static_cast<unsigned>(start + dim);
    trace.e_value = top.back();
  }
  return trace;
}

HilbertSamuelTrace multiplicity_oracle(const MonomialIdeal& ideal, unsigned n_max) {
  if (ideal.is_zero()) fail(ErrorKind::ZeroIdeal, "multiplicity of the zero ideal");
  if (ideal.is_unit()) fail(ErrorKind::UnitIdeal, "multiplicity of the unit ideal");
  if (!ideal.is_m_primary()) fail(ErrorKind::InfiniteColength, "multiplicity needs an m-primary ideal");
  const std::size_t d = ideal.dim();
  if (n_max < d + kStabilizationWindow) {
    fail(ErrorKind::NotStabilized, "n_max must be at least d + 3");
  }
  std::vector<std::uint64_t> lengths;
  MonomialIdeal current = ideal;
  for (unsigned n = 1; n <= n_max; ++n) {
    if (n > 1) current = product(current, ideal);
    lengths.push_back(colength(current));
  }
  auto trace = analyze_lengths(std::move(lengths), d);
  if (!trace.e_value) {
    fail(ErrorKind::NotStabilized, "top finite difference not constant by n_max = " + std::to_string(n_max) +
                                       "; retry with n_max = " + std::to_string(2 * n_max));
  }
  return trace;
}

BigInt multiplicity(const MonomialIdeal& ideal, unsigned retries) {
  unsigned n_max = default_n_max(ideal.dim());
  for (unsigned attempt = 0;; ++attempt) {
    try {
      return *multiplicity_oracle(ideal, n_max).e_value;
    } catch (const LechError& err) {
      if (err.kind() != ErrorKind::NotStabilized || attempt >= retries) throw;
      n_max *= 2;
    }
  }
}

BigInt newton_multiplicity_2d(const MonomialIdeal& ideal) {
  const auto& ring = *ideal.ambient();
  if (ring.dim() != 2) fail(ErrorKind::DimensionUnsupported, "Newton multiplicity is implemented for d = 2");
  if (ideal.is_zero()) fail(ErrorKind::ZeroIdeal, "multiplicity of the zero ideal");
  if (ideal.is_unit()) fail(ErrorKind::UnitIdeal, "multiplicity of the unit ideal");
  if (!ideal.is_m_primary()) fail(ErrorKind::InfiniteColength, "multiplicity needs an m-primary ideal");

  // In facet coordinates the cone is the nonnegative quadrant; the linear
  // change of coordinates scales area by |det F|.
  std::vector<ExponentVector> uv;
  for (const auto& g : ideal.generators()) uv.push_back(ring.facet_coords(g));
  BigInt twice_area = geometry::twice_area_below_chain(geometry::quadrant_lower_chain(uv));
  std::vector<ExponentVector> normals;
  for (const auto& f : ring.cone_facets()) normals.push_back(f.normal);
  const BigInt jacobian = abs(geometry::determinant(geometry::to_matrix(normals)));
  const BigInt denom = jacobian * ring.lattice_covolume();
  if (twice_area % denom != 0) {
    fail(ErrorKind::NonIntegerResult, "Newton multiplicity is not an integer: " + twice_area.str() + "/" + denom.str());
  }
  return twice_area / denom;
}

BigInt ring_multiplicity(const Ring& ring, unsigned n_max) {
  if (ring->is_polynomial()) return 1;
  const auto m = MonomialIdeal::maximal(ring);
  if (n_max == 0) return multiplicity(m);
  return *multiplicity_oracle(m, n_max).e_value;
}

}  // namespace lech
