#include "lech/kernels.hpp"

#include <arm_neon.h>

namespace lech::kernels {
namespace detail {

std::ptrdiff_t find_cover_neon(const CoverTable& table, const std::int64_t* point) {
  const std::size_t dims = table.dims();
  const std::size_t rows = table.size();
  for (std::size_t i = 0; i < rows; i += 2) {
    uint64x2_t alive = vdupq_n_u64(~0ULL);
    for (std::size_t k = 0; k < dims; ++k) {
      const int64x2_t g = vld1q_s64(table.column(k) + i);
      const int64x2_t p = vdupq_n_s64(point[k]);
      alive = vandq_u64(alive, vcleq_s64(g, p));
    }
    if (vgetq_lane_u64(alive, 0) != 0) return static_cast<std::ptrdiff_t>(i);
    if (vgetq_lane_u64(alive, 1) != 0) return static_cast<std::ptrdiff_t>(i + 1);
  }
  return -1;
}

std::size_t count_uncovered_neon(const CoverTable& table, const PointBatch& batch) {
  const std::size_t dims = batch.dims;
  const std::size_t rows = table.size();
  std::size_t uncovered = 0;
  std::size_t i = 0;
  for (; i + 2 <= batch.count; i += 2) {
    uint64x2_t covered = vdupq_n_u64(0);
    for (std::size_t r = 0; r < rows; ++r) {
      uint64x2_t ok = vdupq_n_u64(~0ULL);
      for (std::size_t k = 0; k < dims; ++k) {
        const int64x2_t p = vld1q_s64(batch.data + k * batch.stride + i);
        const int64x2_t g = vdupq_n_s64(table.column(k)[r]);
        ok = vandq_u64(ok, vcleq_s64(g, p));
      }
      covered = vorrq_u64(covered, ok);
    }
    uncovered += (vgetq_lane_u64(covered, 0) == 0) + (vgetq_lane_u64(covered, 1) == 0);
  }
  std::int64_t point[64];
  for (; i < batch.count; ++i) {
    for (std::size_t k = 0; k < dims; ++k) point[k] = batch.data[k * batch.stride + i];
    if (find_cover_neon(table, point) < 0) ++uncovered;
  }
  return uncovered;
}

}  // namespace detail
}  // namespace lech::kernels
