#pragma once

// Batched divisibility kernels. A generator g "covers" a point p when
// g[k] <= p[k] in every coordinate; ambient rings translate semigroup
// divisibility into this test by mapping points to facet coordinates.
// Each ISA variant must agree exactly with the scalar reference.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace lech::kernels {

/// Column-major generator table padded to a multiple of 4 rows with
/// INT64_MAX so padding never covers anything.
class CoverTable {
 public:
  static constexpr std::size_t kLaneMultiple = 4;
  static constexpr std::int64_t kPad = INT64_MAX;

  CoverTable() = default;
  explicit CoverTable(std::size_t dims) : dims_(dims) {}

  void push_back(std::span<const std::int64_t> row);
  void clear() noexcept;

  std::size_t dims() const noexcept { return dims_; }
  std::size_t size() const noexcept { return count_; }
  std::size_t stride() const noexcept { return stride_; }
  const std::int64_t* column(std::size_t k) const noexcept { return data_.data() + k * stride_; }

 private:
  void grow();

  std::size_t dims_ = 0;
  std::size_t count_ = 0;
  std::size_t stride_ = 0;
  std::vector<std::int64_t> data_;
};

/// Structure-of-arrays batch of query points.
struct PointBatch {
  std::size_t dims = 0;
  std::size_t count = 0;
  std::size_t stride = 0;
  const std::int64_t* data = nullptr;  // data[k * stride + i]
};

using FindCoverFn = std::ptrdiff_t (*)(const CoverTable&, const std::int64_t* point);
using CountUncoveredFn = std::size_t (*)(const CoverTable&, const PointBatch&);

struct KernelSet {
  std::string_view name;
  FindCoverFn find_cover;            // first covering row or -1
  CountUncoveredFn count_uncovered;  // points covered by no row
};

enum class Isa { Scalar, Avx2, Neon };

const KernelSet& scalar_kernels() noexcept;
/// nullptr when the variant was not compiled in or the CPU lacks it.
const KernelSet* avx2_kernels() noexcept;
const KernelSet* neon_kernels() noexcept;

/// Selected once: LECH_SIMD=scalar|avx2|neon overrides CPU detection.
const KernelSet& active() noexcept;

}  // namespace lech::kernels
