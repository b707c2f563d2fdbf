#include "lech/kernels.hpp"

#include <algorithm>

namespace lech::kernels {

void CoverTable::grow() {
  std::size_t new_stride = std::max<std::size_t>(kLaneMultiple, stride_ * 2);
  std::vector<std::int64_t> data(dims_ * new_stride, kPad);
  for (std::size_t k = 0; k < dims_; ++k) {
    std::copy_n(data_.begin() + static_cast<std::ptrdiff_t>(k * stride_), count_,
                data.begin() + static_cast<std::ptrdiff_t>(k * new_stride));
  }
  data_ = std::move(data);
  stride_ = new_stride;
}

void CoverTable::push_back(std::span<const std::int64_t> row) {
  if (count_ == stride_) grow();
  for (std::size_t k = 0; k < dims_; ++k) data_[k * stride_ + count_] = row[k];
  ++count_;
}

void CoverTable::clear() noexcept {
  std::fill(data_.begin(), data_.end(), kPad);
  count_ = 0;
}

namespace {

std::ptrdiff_t find_cover_scalar(const CoverTable& table, const std::int64_t* point) {
  const std::size_t dims = table.dims();
  for (std::size_t i = 0; i < table.size(); ++i) {
    bool covers = true;
    for (std::size_t k = 0; k < dims && covers; ++k) covers = table.column(k)[i] <= point[k];
    if (covers) return static_cast<std::ptrdiff_t>(i);
  }
  return -1;
}

std::size_t count_uncovered_scalar(const CoverTable& table, const PointBatch& batch) {
  std::size_t uncovered = 0;
  std::vector<std::int64_t> point(batch.dims);
  for (std::size_t i = 0; i < batch.count; ++i) {
    for (std::size_t k = 0; k < batch.dims; ++k) point[k] = batch.data[k * batch.stride + i];
    if (find_cover_scalar(table, point.data()) < 0) ++uncovered;
  }
  return uncovered;
}

}  // namespace

const KernelSet& scalar_kernels() noexcept {
  static const KernelSet set{"scalar", &find_cover_scalar, &count_uncovered_scalar};
  return set;
}

}  // namespace lech::kernels
