#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>

#include <boost/container/small_vector.hpp>

namespace lech {

/// Exponent of a monomial in Z^d. Polynomial ambients only hold
/// nonnegative entries; semigroup ambients may use any lattice point.
class ExponentVector {
 public:
  using Storage = boost::container::small_vector<std::int64_t, 4>;

  ExponentVector() = default;
  explicit ExponentVector(std::size_t dim) : coords_(dim, 0) {}
  ExponentVector(std::initializer_list<std::int64_t> coords) : coords_(coords) {}
  explicit ExponentVector(std::span<const std::int64_t> coords)
      : coords_(coords.begin(), coords.end()) {}

  std::size_t dim() const noexcept { return coords_.size(); }
  std::int64_t operator[](std::size_t i) const { return coords_[i]; }
  std::int64_t& operator[](std::size_t i) { return coords_[i]; }
  std::span<const std::int64_t> coords() const noexcept {
    return {coords_.data(), coords_.size()};
  }

  bool is_zero() const noexcept;

  ExponentVector operator+(const ExponentVector& other) const;
  ExponentVector operator-(const ExponentVector& other) const;
  ExponentVector scaled(std::int64_t factor) const;
  /// Appends one coordinate (used for the T-variable of R[T]).
  ExponentVector extended(std::int64_t last) const;

  friend bool operator==(const ExponentVector&, const ExponentVector&) = default;
  friend std::strong_ordering operator<=>(const ExponentVector& a, const ExponentVector& b) {
    return std::lexicographical_compare_three_way(a.coords_.begin(), a.coords_.end(),
                                                  b.coords_.begin(), b.coords_.end());
  }

  std::string to_string() const;

 private:
  Storage coords_;
};

std::ostream& operator<<(std::ostream& os, const ExponentVector& v);

struct ExponentHash {
  std::size_t operator()(const ExponentVector& v) const noexcept;
};

}  // namespace lech
