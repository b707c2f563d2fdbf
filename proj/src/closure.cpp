#include "lech/closure.hpp"

#include <algorithm>

#include "lech/errors.hpp"
#include "lech/random.hpp"

namespace lech {

namespace {

void require_m_primary(const MonomialIdeal& ideal) {
  if (!ideal.is_m_primary()) fail(ErrorKind::InfiniteColength, "Newton polyhedron needs an m-primary ideal");
}

std::vector<geometry::Halfspace> interior_facets(std::vector<geometry::Halfspace> all) {
  std::erase_if(all, [](const auto& h) { return h.threshold <= 0; });
  return all;
}

}  // namespace

bool NewtonPolyhedron::contains(const ExponentVector& p) const {
  return ambient->in_cone(p) &&
         std::all_of(halfspaces.begin(), halfspaces.end(), [&](const auto& h) { return h.contains(p); });
}

NewtonPolyhedron newton_polyhedron_exhaustive(const MonomialIdeal& ideal) {
  require_m_primary(ideal);
  const auto& ring = *ideal.ambient();
  return {ideal.ambient(), interior_facets(geometry::polyhedron_facets(ideal.generators(), ring.extreme_rays()))};
}

NewtonPolyhedron newton_polyhedron(const MonomialIdeal& ideal) {
  const auto& ring = *ideal.ambient();
  if (ring.dim() != 2) return newton_polyhedron_exhaustive(ideal);
  require_m_primary(ideal);

  std::vector<ExponentVector> uv;
  for (const auto& g : ideal.generators()) uv.push_back(ring.facet_coords(g));
  const auto chain = geometry::quadrant_lower_chain(uv);
  const auto& f0 = ring.cone_facets()[0].normal;
  const auto& f1 = ring.cone_facets()[1].normal;
  std::vector<geometry::Halfspace> out;
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    const auto& p = chain[i];
    const auto& q = chain[i + 1];
    // Edge normal in (u, v), pulled back through u = <f0, x>, v = <f1, x>.
    const std::int64_t alpha = p[1] - q[1];
    const std::int64_t beta = q[0] - p[0];
    std::vector<BigInt> normal{BigInt(alpha) * f0[0] + BigInt(beta) * f1[0],
                               BigInt(alpha) * f0[1] + BigInt(beta) * f1[1]};
    normal = geometry::primitive(std::move(normal));
    ExponentVector n{static_cast<std::int64_t>(normal[0]), static_cast<std::int64_t>(normal[1])};
    // The chain vertex p is the facet-coordinate image of some generator.
    const auto gen = std::find_if(ideal.generators().begin(), ideal.generators().end(),
                                  [&](const auto& g) { return ring.facet_coords(g) == p; });
    out.push_back(geometry::Halfspace{n, geometry::dot(n, *gen)});
  }
  std::sort(out.begin(), out.end());
  return {ideal.ambient(), interior_facets(std::move(out))};
}

MonomialIdeal integral_closure(const MonomialIdeal& ideal) {
  const auto np = newton_polyhedron(ideal);
  std::vector<ExponentVector> gens = ideal.generators();
  for (const auto& s : complement(ideal).points) {
    if (np.contains(s)) gens.push_back(s);
  }
  return minimalize(std::move(gens), ideal.ambient());
}

bool is_integrally_closed(const MonomialIdeal& ideal) { return integral_closure(ideal) == ideal; }

FullnessCertificate m_full_certificate(const MonomialIdeal& ideal) {
  if (!ideal.is_m_primary()) return {FullnessStatus::Unknown, "not m-primary"};
  if (ideal.dim() < 2) return {FullnessStatus::Unknown, "dimension below 2"};
  if (!is_integrally_closed(ideal)) return {FullnessStatus::Unknown, "not integrally closed"};
  return {FullnessStatus::MFullByClosure, "integrally closed m-primary ideal in dimension >= 2"};
}

MonotonicityReport watanabe_monotonicity_check(const MonomialIdeal& ideal, unsigned samples,
                                               std::uint64_t seed) {
  if (m_full_certificate(ideal).status != FullnessStatus::MFullByClosure) {
    fail(ErrorKind::HypothesisNotMet, "ideal is not certified m-full");
  }
  MonotonicityReport report;
  report.mu_ideal = ideal.min_gens_count();
  const auto standard = complement(ideal).points;
  SplitMix64 rng(seed);
  for (unsigned i = 0; i < samples; ++i) {
    std::vector<ExponentVector> gens = ideal.generators();
    const std::size_t extra = 1 + rng.below(std::min<std::size_t>(standard.size(), 3));
    for (std::size_t k = 0; k < extra; ++k) gens.push_back(standard[rng.below(standard.size())]);
    MonomialIdeal over = minimalize(std::move(gens), ideal.ambient());
    MonotonicityPair pair{over, over.min_gens_count()};
    if (pair.mu_overideal > report.mu_ideal) report.violations.push_back(pair);
    report.checked.push_back(std::move(pair));
  }
  return report;
}

}  // namespace lech
