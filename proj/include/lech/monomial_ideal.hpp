#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "lech/ambient.hpp"
#include "lech/exponent.hpp"
#include "lech/kernels.hpp"

namespace lech {

/// Ideal of k[S] spanned by monomials, stored as its unique minimal
/// generating set (an antichain under divisibility). Generators are kept in
/// descending lexicographic order. The zero ideal has no generators; the
/// unit ideal is generated by the zero vector.
class MonomialIdeal {
 public:
  /// Minimalizes `gens`; throws InvalidGenerator for points outside S.
  MonomialIdeal(Ring ambient, std::vector<ExponentVector> gens);

  static MonomialIdeal zero(Ring ambient);
  static MonomialIdeal unit(Ring ambient);
  /// The maximal ideal, generated by the Hilbert basis.
  static MonomialIdeal maximal(Ring ambient);

  const Ring& ambient() const noexcept { return ambient_; }
  std::size_t dim() const noexcept { return ambient_->dim(); }
  const std::vector<ExponentVector>& generators() const noexcept { return gens_; }

  bool is_zero() const noexcept { return gens_.empty(); }
  bool is_unit() const noexcept { return gens_.size() == 1 && gens_.front().is_zero(); }

  /// v in I; throws InvalidPoint for v outside S.
  bool contains(const ExponentVector& v) const;
  /// Same test for a point already known to lie in S, as facet coordinates.
  bool contains_facet_coords(const std::int64_t* coords) const;
  /// other ⊆ *this.
  bool contains(const MonomialIdeal& other) const;

  /// mu(I). Throws ZeroIdeal.
  std::size_t min_gens_count() const;
  /// Throws ZeroIdeal. False for the unit ideal.
  bool is_m_primary() const;

  const kernels::CoverTable& cover_table() const noexcept { return table_; }

  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
    return same_ring(a.ambient_, b.ambient_) && a.gens_ == b.gens_;
  }

 private:
  struct Minimalized {};
  friend MonomialIdeal minimalize(std::vector<ExponentVector> gens, Ring ambient);
  MonomialIdeal(Ring ambient, std::vector<ExponentVector> gens, Minimalized);
  void build_table();

  Ring ambient_;
  std::vector<ExponentVector> gens_;
  kernels::CoverTable table_;
};

/// The antichain of divisibility-minimal elements of `gens`.
MonomialIdeal minimalize(std::vector<ExponentVector> gens, Ring ambient);

MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal power(const MonomialIdeal& a, unsigned n);

/// Standard monomials: the points of S outside I. Downward closed.
struct ComplementSet {
  std::vector<ExponentVector> points;  // sorted ascending
  std::size_t size() const noexcept { return points.size(); }
};

/// Breadth-first walk from the origin along Hilbert-basis steps.
/// Throws InfiniteColength when I is not m-primary.
ComplementSet complement(const MonomialIdeal& ideal);

/// l(R/I) by box enumeration through the batched cover kernel.
/// Throws InfiniteColength when I is not m-primary; the unit ideal has colength 0.
std::uint64_t colength(const MonomialIdeal& ideal);
std::uint64_t colength(const MonomialIdeal& ideal, const kernels::KernelSet& kernel);

/// Lexicographic comparison of generator lists.
bool generator_order_less(const MonomialIdeal& a, const MonomialIdeal& b);

}  // namespace lech
