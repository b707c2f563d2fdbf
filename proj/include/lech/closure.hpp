#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lech/geometry.hpp"
#include "lech/monomial_ideal.hpp"

namespace lech {

/// NP(I) = conv(gens) + C. `halfspaces` lists only the facets not shared
/// with the ambient cone (threshold > 0); cone constraints come from the ring.
struct NewtonPolyhedron {
  Ring ambient;
  std::vector<geometry::Halfspace> halfspaces;

  bool contains(const ExponentVector& p) const;
};

/// d = 2 uses the quadrant lower chain in facet coordinates; d >= 3 the
/// exhaustive exact facet enumeration.
NewtonPolyhedron newton_polyhedron(const MonomialIdeal& ideal);
/// Exhaustive facet enumeration in any dimension (second route for d = 2).
NewtonPolyhedron newton_polyhedron_exhaustive(const MonomialIdeal& ideal);

/// I + (standard monomials of I lying in NP(I)).
MonomialIdeal integral_closure(const MonomialIdeal& ideal);
bool is_integrally_closed(const MonomialIdeal& ideal);

enum class FullnessStatus { MFullByClosure, Unknown };

struct FullnessCertificate {
  FullnessStatus status = FullnessStatus::Unknown;
  std::string witness;
};

FullnessCertificate m_full_certificate(const MonomialIdeal& ideal);

struct MonotonicityPair {
  MonomialIdeal overideal;
  std::size_t mu_overideal;
};

struct MonotonicityReport {
  std::size_t mu_ideal = 0;
  std::vector<MonotonicityPair> checked;
  std::vector<MonotonicityPair> violations;
};

/// Samples J ⊇ I by adjoining random standard monomials of I and checks
/// mu(J) <= mu(I). Throws HypothesisNotMet unless I is certified m-full.
MonotonicityReport watanabe_monotonicity_check(const MonomialIdeal& ideal, unsigned samples,
                                               std::uint64_t seed = 1);

}  // namespace lech
