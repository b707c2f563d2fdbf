#pragma once

#include <cstdint>
#include <vector>

#include "lech/exponent.hpp"
#include "lech/numeric.hpp"

namespace lech::geometry {

using IntMatrix = std::vector<std::vector<BigInt>>;

IntMatrix to_matrix(const std::vector<ExponentVector>& rows);

BigInt determinant(IntMatrix m);
std::size_t rank(IntMatrix m);

/// Generalized cross product of d-1 vectors in Z^d: the cofactor vector,
/// orthogonal to every row. Zero exactly when the rows are dependent.
std::vector<BigInt> cofactor_normal(const IntMatrix& rows);

/// Divides out the content; the zero vector is returned unchanged.
std::vector<BigInt> primitive(std::vector<BigInt> v);

/// Row-style Hermite normal form of the lattice spanned by `rows`;
/// zero rows are dropped, pivots strictly increase by column.
IntMatrix hermite_normal_form(IntMatrix rows);

/// Closed half-space <normal, x> >= threshold with a primitive integer normal.
struct Halfspace {
  ExponentVector normal;
  std::int64_t threshold = 0;

  bool contains(const ExponentVector& p) const;
  friend bool operator==(const Halfspace&, const Halfspace&) = default;
  friend auto operator<=>(const Halfspace& a, const Halfspace& b) {
    if (auto c = a.normal <=> b.normal; c != 0) return c;
    return a.threshold <=> b.threshold;
  }
};

std::int64_t dot(const ExponentVector& a, const ExponentVector& b);

/// Facets of conv(points) + cone(rays) by exhaustive exact enumeration of
/// candidate supporting hyperplanes. Requires a full-dimensional result
/// (true whenever the rays span the space). Sorted and deduplicated.
std::vector<Halfspace> polyhedron_facets(const std::vector<ExponentVector>& points,
                                         const std::vector<ExponentVector>& rays);

/// Points (u, v) in the nonnegative quadrant with at least one point on each
/// axis. Returns the vertices of the bounded boundary chain of
/// conv(points) + quadrant, ordered from the u = 0 vertex to the v = 0 vertex.
std::vector<ExponentVector> quadrant_lower_chain(std::vector<ExponentVector> points);

/// Twice the area of the polygon enclosed by the origin and a lower chain.
BigInt twice_area_below_chain(const std::vector<ExponentVector>& chain);

}  // namespace lech::geometry
