#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "lech/exponent.hpp"
#include "lech/geometry.hpp"
#include "lech/numeric.hpp"

namespace lech {

class AmbientRing;
using Ring = std::shared_ptr<const AmbientRing>;

/// Either k[x_1..x_d] or a pointed, full-dimensional, normal affine
/// semigroup ring k[S]. Normality lets membership in S be decided as
/// lattice membership plus cone membership, and turns divisibility into a
/// componentwise comparison of facet coordinates.
class AmbientRing {
 public:
  enum class Kind { Polynomial, Semigroup };

  static Ring polynomial(std::size_t dim);
  /// Validates pointedness, full dimension and normality; throws InvalidRing.
  static Ring semigroup(std::vector<ExponentVector> generators);

  Kind kind() const noexcept { return kind_; }
  bool is_polynomial() const noexcept { return kind_ == Kind::Polynomial; }
  std::size_t dim() const noexcept { return dim_; }

  const std::vector<ExponentVector>& generators() const noexcept { return generators_; }
  /// Irreducible elements of S; generators of the maximal ideal.
  const std::vector<ExponentVector>& hilbert_basis() const noexcept { return hilbert_basis_; }
  /// Facets of the cone, each <a, x> >= 0 with primitive integer a.
  const std::vector<geometry::Halfspace>& cone_facets() const noexcept { return facets_; }
  /// Lattice-primitive point on each extreme ray of the cone.
  const std::vector<ExponentVector>& extreme_rays() const noexcept { return rays_; }
  /// Index of the group lattice L in Z^d.
  const BigInt& lattice_covolume() const noexcept { return covolume_; }
  const geometry::IntMatrix& lattice_basis() const noexcept { return lattice_basis_; }

  bool in_lattice(const ExponentVector& p) const;
  bool in_cone(const ExponentVector& p) const;
  /// p in S.
  bool contains(const ExponentVector& p) const;
  /// v - u in S, for u, v in S.
  bool divides(const ExponentVector& u, const ExponentVector& v) const;

  std::size_t facet_count() const noexcept { return facets_.size(); }
  void facet_coords(const ExponentVector& p, std::int64_t* out) const;
  ExponentVector facet_coords(const ExponentVector& p) const;
  /// Sum of facet coordinates: a grading positive on S \ {0}.
  std::int64_t degree(const ExponentVector& p) const;

  /// Every point of S inside the closed box [lo, hi].
  std::vector<ExponentVector> points_in_box(const ExponentVector& lo, const ExponentVector& hi) const;

  /// R[T]: polynomial(d + 1), or the semigroup S x N.
  Ring with_t_variable() const;

  /// "poly:d" or "semigroup:[[..],..]".
  std::string spec() const;

  bool same_as(const AmbientRing& other) const;

 private:
  AmbientRing() = default;

  Kind kind_ = Kind::Polynomial;
  std::size_t dim_ = 0;
  std::vector<ExponentVector> generators_;
  std::vector<ExponentVector> hilbert_basis_;
  std::vector<geometry::Halfspace> facets_;
  std::vector<ExponentVector> rays_;
  geometry::IntMatrix lattice_basis_;
  BigInt covolume_ = 1;
};

bool same_ring(const Ring& a, const Ring& b);

}  // namespace lech
