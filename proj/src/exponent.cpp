#include "lech/exponent.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "lech/errors.hpp"
#include "lech/numeric.hpp"

namespace lech {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) fail(ErrorKind::ExponentOverflow, "exponent overflow in addition");
  return out;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) fail(ErrorKind::ExponentOverflow, "exponent overflow in multiplication");
  return out;
}

BigInt factorial(unsigned n) {
  BigInt f = 1;
  for (unsigned i = 2; i <= n; ++i) f *= i;
  return f;
}

bool ExponentVector::is_zero() const noexcept {
  return std::all_of(coords_.begin(), coords_.end(), [](std::int64_t x) { return x == 0; });
}

ExponentVector ExponentVector::operator+(const ExponentVector& other) const {
  ExponentVector out(*this);
  for (std::size_t i = 0; i < dim(); ++i) out.coords_[i] = checked_add(coords_[i], other.coords_[i]);
  return out;
}

ExponentVector ExponentVector::operator-(const ExponentVector& other) const {
  ExponentVector out(*this);
  for (std::size_t i = 0; i < dim(); ++i) out.coords_[i] = checked_add(coords_[i], -other.coords_[i]);
  return out;
}

ExponentVector ExponentVector::scaled(std::int64_t factor) const {
  ExponentVector out(*this);
  for (auto& x : out.coords_) x = checked_mul(x, factor);
  return out;
}

ExponentVector ExponentVector::extended(std::int64_t last) const {
  ExponentVector out(*this);
  out.coords_.push_back(last);
  return out;
}

std::string ExponentVector::to_string() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const ExponentVector& v) {
  os << '(';
  for (std::size_t i = 0; i < v.dim(); ++i) os << (i ? "," : "") << v[i];
  return os << ')';
}

std::size_t ExponentHash::operator()(const ExponentVector& v) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (auto x : v.coords()) {
    h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace lech
