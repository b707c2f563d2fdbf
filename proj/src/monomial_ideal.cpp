#include "lech/monomial_ideal.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <unordered_set>

#include "lech/errors.hpp"

namespace lech {

namespace {

constexpr std::size_t kComplementLimit = 50'000'000;

ExponentVector direction_of(const ExponentVector& g) {
  std::int64_t content = 0;
  for (auto x : g.coords()) content = std::gcd(content, x < 0 ? -x : x);
  ExponentVector dir(g);
  if (content > 1) {
    for (std::size_t i = 0; i < dir.dim(); ++i) dir[i] /= content;
  }
  return dir;
}

void require_same_ring(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (!same_ring(a.ambient(), b.ambient())) fail(ErrorKind::RingMismatch, "ideals live in different rings");
}

}  // namespace

MonomialIdeal::MonomialIdeal(Ring ambient, std::vector<ExponentVector> gens)
    : MonomialIdeal(minimalize(std::move(gens), std::move(ambient))) {}

MonomialIdeal::MonomialIdeal(Ring ambient, std::vector<ExponentVector> gens, Minimalized)
    : ambient_(std::move(ambient)), gens_(std::move(gens)) {
  build_table();
}

void MonomialIdeal::build_table() {
  table_ = kernels::CoverTable(ambient_->facet_count());
  std::vector<std::int64_t> row(ambient_->facet_count());
  for (const auto& g : gens_) {
    ambient_->facet_coords(g, row.data());
    table_.push_back(row);
  }
}

MonomialIdeal MonomialIdeal::zero(Ring ambient) { return MonomialIdeal(std::move(ambient), {}, Minimalized{}); }

MonomialIdeal MonomialIdeal::unit(Ring ambient) {
  const std::size_t d = ambient->dim();
  return MonomialIdeal(std::move(ambient), {ExponentVector(d)}, Minimalized{});
}

MonomialIdeal MonomialIdeal::maximal(Ring ambient) {
  auto gens = ambient->hilbert_basis();
  return MonomialIdeal(std::move(ambient), std::move(gens));
}

MonomialIdeal minimalize(std::vector<ExponentVector> gens, Ring ambient) {
  for (const auto& g : gens) {
    if (!ambient->contains(g)) {
      throw LechError(ErrorKind::InvalidGenerator, "generator " + g.to_string() + " is not in the ambient semigroup");
    }
  }
  // Divisibility strictly raises the grading, so a single pass in degree
  // order only ever needs to test against already accepted generators.
  std::vector<std::pair<std::int64_t, ExponentVector>> keyed;
  keyed.reserve(gens.size());
  for (auto& g : gens) keyed.emplace_back(ambient->degree(g), std::move(g));
  std::sort(keyed.begin(), keyed.end());
  keyed.erase(std::unique(keyed.begin(), keyed.end()), keyed.end());

  const auto& kernel = kernels::active();
  kernels::CoverTable table(ambient->facet_count());
  std::vector<std::int64_t> row(ambient->facet_count());
  std::vector<ExponentVector> kept;
  for (auto& [deg, g] : keyed) {
    ambient->facet_coords(g, row.data());
    if (kernel.find_cover(table, row.data()) >= 0) continue;
    table.push_back(row);
    kept.push_back(std::move(g));
  }
  std::sort(kept.begin(), kept.end(), std::greater<>());
  return MonomialIdeal(std::move(ambient), std::move(kept), MonomialIdeal::Minimalized{});
}

bool MonomialIdeal::contains(const ExponentVector& v) const {
  if (!ambient_->contains(v)) {
    throw LechError(ErrorKind::InvalidPoint, "point " + v.to_string() + " is not in the ambient semigroup");
  }
  std::vector<std::int64_t> coords(ambient_->facet_count());
  ambient_->facet_coords(v, coords.data());
  return contains_facet_coords(coords.data());
}

bool MonomialIdeal::contains_facet_coords(const std::int64_t* coords) const {
  return kernels::active().find_cover(table_, coords) >= 0;
}

bool MonomialIdeal::contains(const MonomialIdeal& other) const {
  require_same_ring(*this, other);
  return std::all_of(other.gens_.begin(), other.gens_.end(), [&](const auto& g) { return contains(g); });
}

std::size_t MonomialIdeal::min_gens_count() const {
  if (is_zero()) fail(ErrorKind::ZeroIdeal, "mu of the zero ideal");
  return gens_.size();
}

bool MonomialIdeal::is_m_primary() const {
  if (is_zero()) fail(ErrorKind::ZeroIdeal, "the zero ideal is not m-primary");
  if (is_unit()) return false;
  for (const auto& ray : ambient_->extreme_rays()) {
    const ExponentVector dir = direction_of(ray);
    const bool hit = std::any_of(gens_.begin(), gens_.end(), [&](const auto& g) { return direction_of(g) == dir; });
    if (!hit) return false;
  }
  return true;
}

MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ring(a, b);
  std::vector<ExponentVector> gens(a.generators());
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return minimalize(std::move(gens), a.ambient());
}

MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ring(a, b);
  std::vector<ExponentVector> gens;
  gens.reserve(a.generators().size() * b.generators().size());
  for (const auto& u : a.generators()) {
    for (const auto& v : b.generators()) gens.push_back(u + v);
  }
  return minimalize(std::move(gens), a.ambient());
}

MonomialIdeal power(const MonomialIdeal& a, unsigned n) {
  if (n == 0) return MonomialIdeal::unit(a.ambient());
  MonomialIdeal result = a;
  for (unsigned i = 1; i < n; ++i) result = product(result, a);
  return result;
}

ComplementSet complement(const MonomialIdeal& ideal) {
  if (ideal.is_unit()) return {};
  if (!ideal.is_m_primary()) fail(ErrorKind::InfiniteColength, "ideal is not m-primary");
  const auto& ring = *ideal.ambient();
  std::unordered_set<ExponentVector, ExponentHash> seen;
  std::deque<ExponentVector> queue;
  ExponentVector origin(ring.dim());
  seen.insert(origin);
  queue.push_back(origin);
  std::vector<std::int64_t> coords(ring.facet_count());
  while (!queue.empty()) {
    ExponentVector s = std::move(queue.front());
    queue.pop_front();
    for (const auto& h : ring.hilbert_basis()) {
      ExponentVector next = s + h;
      if (seen.contains(next)) continue;
      ring.facet_coords(next, coords.data());
      if (ideal.contains_facet_coords(coords.data())) continue;
      seen.insert(next);
      queue.push_back(std::move(next));
      if (seen.size() > kComplementLimit) fail(ErrorKind::InfiniteColength, "complement exceeds enumeration limit");
    }
  }
  ComplementSet out{{seen.begin(), seen.end()}};
  std::sort(out.points.begin(), out.points.end());
  return out;
}

namespace {

std::uint64_t count_box(const MonomialIdeal& ideal, const std::vector<ExponentVector>& points,
                        const kernels::KernelSet& kernel) {
  const auto& ring = *ideal.ambient();
  const std::size_t m = ring.facet_count();
  constexpr std::size_t kChunk = 1024;
  std::vector<std::int64_t> soa(m * kChunk);
  std::vector<std::int64_t> row(m);
  std::uint64_t total = 0;
  for (std::size_t start = 0; start < points.size(); start += kChunk) {
    const std::size_t n = std::min(kChunk, points.size() - start);
    for (std::size_t i = 0; i < n; ++i) {
      ring.facet_coords(points[start + i], row.data());
      for (std::size_t k = 0; k < m; ++k) soa[k * kChunk + i] = row[k];
    }
    total += kernel.count_uncovered(ideal.cover_table(), kernels::PointBatch{m, n, kChunk, soa.data()});
  }
  return total;
}

std::uint64_t count_polynomial_box(const MonomialIdeal& ideal, const kernels::KernelSet& kernel) {
  const std::size_t d = ideal.dim();
  // Pure powers exist, so nothing at or beyond the largest exponent escapes I.
  ExponentVector hi(d);
  for (const auto& g : ideal.generators()) {
    for (std::size_t i = 0; i < d; ++i) hi[i] = std::max(hi[i], g[i]);
  }
  constexpr std::size_t kChunk = 1024;
  std::vector<std::int64_t> soa(d * kChunk);
  std::uint64_t total = 0;
  std::size_t n = 0;
  ExponentVector p(d);
  auto flush = [&]() {
    total += kernel.count_uncovered(ideal.cover_table(), kernels::PointBatch{d, n, kChunk, soa.data()});
    n = 0;
  };
  for (;;) {
    for (std::size_t k = 0; k < d; ++k) soa[k * kChunk + n] = p[k];
    if (++n == kChunk) flush();
    std::size_t i = 0;
    while (i < d) {
      if (p[i] + 1 < hi[i]) {
        ++p[i];
        break;
      }
      p[i] = 0;
      ++i;
    }
    if (i == d) break;
  }
  if (n > 0) flush();
  return total;
}

}  // namespace

std::uint64_t colength(const MonomialIdeal& ideal, const kernels::KernelSet& kernel) {
  if (ideal.is_unit()) return 0;
  if (!ideal.is_m_primary()) fail(ErrorKind::InfiniteColength, "ideal is not m-primary");
  const auto& ring = *ideal.ambient();
  if (ring.is_polynomial()) return count_polynomial_box(ideal, kernel);

  const std::size_t d = ring.dim();
  std::int64_t bound = 1;
  for (const auto& g : ideal.generators()) {
    for (auto x : g.coords()) bound = std::max(bound, x < 0 ? -x : x);
  }
  bound = checked_mul(bound, static_cast<std::int64_t>(d));
  std::vector<std::int64_t> row(ring.facet_count());
  for (;;) {
    ExponentVector lo(d), hi(d);
    for (std::size_t i = 0; i < d; ++i) {
      lo[i] = -bound;
      hi[i] = bound;
    }
    auto points = ring.points_in_box(lo, hi);
    // Certify the box: no complement point may step outside it.
    bool sound = true;
    for (const auto& s : points) {
      ring.facet_coords(s, row.data());
      if (ideal.contains_facet_coords(row.data())) continue;
      for (const auto& h : ring.hilbert_basis()) {
        ExponentVector next = s + h;
        bool inside = true;
        for (std::size_t i = 0; i < d; ++i) inside = inside && next[i] >= lo[i] && next[i] <= hi[i];
        if (inside) continue;
        ring.facet_coords(next, row.data());
        if (!ideal.contains_facet_coords(row.data())) {
          sound = false;
          break;
        }
      }
      if (!sound) break;
    }
    if (sound) return count_box(ideal, points, kernel);
    bound = checked_mul(bound, 2);
  }
}

std::uint64_t colength(const MonomialIdeal& ideal) { return colength(ideal, kernels::active()); }

bool generator_order_less(const MonomialIdeal& a, const MonomialIdeal& b) {
  return a.generators() < b.generators();
}

}  // namespace lech
