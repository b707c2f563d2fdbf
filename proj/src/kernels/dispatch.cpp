#include <cstdlib>
#include <string_view>

#include "lech/kernels.hpp"

namespace lech::kernels {
namespace detail {
#if defined(LECH_HAVE_AVX2_TU)
std::ptrdiff_t find_cover_avx2(const CoverTable&, const std::int64_t*);
std::size_t count_uncovered_avx2(const CoverTable&, const PointBatch&);
#endif
#if defined(LECH_HAVE_NEON_TU)
std::ptrdiff_t find_cover_neon(const CoverTable&, const std::int64_t*);
std::size_t count_uncovered_neon(const CoverTable&, const PointBatch&);
#endif
}  // namespace detail

const KernelSet* avx2_kernels() noexcept {
#if defined(LECH_HAVE_AVX2_TU)
  static const KernelSet set{"avx2", &detail::find_cover_avx2, &detail::count_uncovered_avx2};
  static const bool supported = __builtin_cpu_supports("avx2");
  return supported ? &set : nullptr;
#else
  return nullptr;
#endif
}

const KernelSet* neon_kernels() noexcept {
#if defined(LECH_HAVE_NEON_TU)
  static const KernelSet set{"neon", &detail::find_cover_neon, &detail::count_uncovered_neon};
  return &set;
#else
  return nullptr;
#endif
}

namespace {

const KernelSet& select() noexcept {
  const char* env = std::getenv("LECH_SIMD");
  const std::string_view wanted = env != nullptr ? env : "";
  if (wanted == "scalar") return scalar_kernels();
  if (wanted == "avx2" && avx2_kernels() != nullptr) return *avx2_kernels();
  if (wanted == "neon" && neon_kernels() != nullptr) return *neon_kernels();
  if (const KernelSet* k = avx2_kernels()) return *k;
  if (const KernelSet* k = neon_kernels()) return *k;
  return scalar_kernels();
}

}  // namespace

const KernelSet& active() noexcept {
  static const KernelSet& chosen = select();
  return chosen;
}

}  // namespace lech::kernels
