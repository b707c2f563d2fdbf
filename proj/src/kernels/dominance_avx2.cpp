#include "lech/kernels.hpp"

#include <immintrin.h>

namespace lech::kernels {
namespace detail {

std::ptrdiff_t find_cover_avx2(const CoverTable& table, const std::int64_t* point) {
  const std::size_t dims = table.dims();
  const std::size_t rows = table.size();
  for (std::size_t i = 0; i < rows; i += 4) {
    __m256i alive = _mm256_set1_epi64x(-1);
    for (std::size_t k = 0; k < dims; ++k) {
      const __m256i g = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(table.column(k) + i));
      const __m256i p = _mm256_set1_epi64x(point[k]);
      alive = _mm256_andnot_si256(_mm256_cmpgt_epi64(g, p), alive);
    }
    const int mask = _mm256_movemask_pd(_mm256_castsi256_pd(alive));
    if (mask != 0) return static_cast<std::ptrdiff_t>(i) + __builtin_ctz(static_cast<unsigned>(mask));
  }
  return -1;
}

// Vectorized across points: four query points per register, looping over rows.
std::size_t count_uncovered_avx2(const CoverTable& table, const PointBatch& batch) {
  const std::size_t dims = batch.dims;
  const std::size_t rows = table.size();
  std::size_t uncovered = 0;
  std::size_t i = 0;
  for (; i + 4 <= batch.count; i += 4) {
    __m256i covered = _mm256_setzero_si256();
    for (std::size_t r = 0; r < rows; ++r) {
      __m256i ok = _mm256_set1_epi64x(-1);
      for (std::size_t k = 0; k < dims; ++k) {
        const __m256i p =
            _mm256_loadu_si256(reinterpret_cast<const __m256i*>(batch.data + k * batch.stride + i));
        const __m256i g = _mm256_set1_epi64x(table.column(k)[r]);
        ok = _mm256_andnot_si256(_mm256_cmpgt_epi64(g, p), ok);
      }
      covered = _mm256_or_si256(covered, ok);
      if (_mm256_movemask_pd(_mm256_castsi256_pd(covered)) == 0xF) break;
    }
    const int mask = _mm256_movemask_pd(_mm256_castsi256_pd(covered));
    uncovered += 4 - static_cast<std::size_t>(__builtin_popcount(static_cast<unsigned>(mask)));
  }
  std::int64_t point[64];
  for (; i < batch.count; ++i) {
    for (std::size_t k = 0; k < dims; ++k) point[k] = batch.data[k * batch.stride + i];
    if (find_cover_avx2(table, point) < 0) ++uncovered;
  }
  return uncovered;
}

}  // namespace detail
}  // namespace lech::kernels
