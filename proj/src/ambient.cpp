#include "lech/ambient.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "lech/errors.hpp"

namespace lech {

namespace {

constexpr std::size_t kMaxDim = 16;
constexpr std::size_t kMaxFacets = 64;

ExponentVector primitive_direction(const ExponentVector& g) {
  std::int64_t content = 0;
  for (auto x : g.coords()) content = std::gcd(content, x < 0 ? -x : x);
  ExponentVector dir(g);
  for (std::size_t i = 0; i < dir.dim(); ++i) dir[i] /= content;
  return dir;
}

// Odometer over the integer box [lo, hi].
template <class Fn>
void for_each_box_point(const ExponentVector& lo, const ExponentVector& hi, Fn&& fn) {
  const std::size_t d = lo.dim();
  for (std::size_t i = 0; i < d; ++i) {
    if (lo[i] > hi[i]) return;
  }
  ExponentVector p(lo);
  for (;;) {
    fn(p);
    std::size_t i = 0;
    while (i < d) {
      if (p[i] < hi[i]) {
        ++p[i];
        break;
      }
      p[i] = lo[i];
      ++i;
    }
    if (i == d) return;
  }
}

// Whether p is an N-combination of gens; every intermediate remainder stays in the cone.
class GeneratedMembership {
 public:
  GeneratedMembership(const AmbientRing& ring, const std::vector<ExponentVector>& gens)
      : ring_(ring), gens_(gens) {}

  bool operator()(const ExponentVector& p) {
    if (p.is_zero()) return true;
    if (auto it = memo_.find(p); it != memo_.end()) return it->second;
    bool result = false;
    for (const auto& g : gens_) {
      ExponentVector rest = p - g;
      if (ring_.in_cone(rest) && (*this)(rest)) {
        result = true;
        break;
      }
    }
    memo_.emplace(p, result);
    return result;
  }

 private:
  const AmbientRing& ring_;
  const std::vector<ExponentVector>& gens_;
  std::unordered_map<ExponentVector, bool, ExponentHash> memo_;
};

}  // namespace

Ring AmbientRing::polynomial(std::size_t dim) {
  if (dim == 0 || dim > kMaxDim) fail(ErrorKind::InvalidRing, "polynomial ring dimension must be in 1..16");
  auto ring = std::shared_ptr<AmbientRing>(new AmbientRing());
  ring->kind_ = Kind::Polynomial;
  ring->dim_ = dim;
  for (std::size_t i = 0; i < dim; ++i) {
    ExponentVector e(dim);
    e[i] = 1;
    ring->generators_.push_back(e);
    ring->facets_.push_back(geometry::Halfspace{e, 0});
  }
  ring->hilbert_basis_ = ring->generators_;
  ring->rays_ = ring->generators_;
  ring->lattice_basis_ = geometry::to_matrix(ring->generators_);
  return ring;
}

Ring AmbientRing::semigroup(std::vector<ExponentVector> generators) {
  if (generators.empty()) fail(ErrorKind::InvalidRing, "semigroup needs at least one generator");
  const std::size_t d = generators.front().dim();
  if (d == 0 || d > kMaxDim) fail(ErrorKind::InvalidRing, "semigroup dimension must be in 1..16");
  for (const auto& g : generators) {
    if (g.dim() != d) fail(ErrorKind::InvalidRing, "semigroup generators have mixed dimensions");
    if (g.is_zero()) fail(ErrorKind::InvalidRing, "semigroup generator must be nonzero");
  }
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());

  auto ring = std::shared_ptr<AmbientRing>(new AmbientRing());
  ring->kind_ = Kind::Semigroup;
  ring->dim_ = d;
  ring->generators_ = generators;

  ring->lattice_basis_ = geometry::hermite_normal_form(geometry::to_matrix(generators));
  if (ring->lattice_basis_.size() != d) fail(ErrorKind::InvalidRing, "semigroup is not full-dimensional");
  ring->covolume_ = abs(geometry::determinant(ring->lattice_basis_));

  if (d == 1) {
    const bool pos = generators.front()[0] > 0;
    for (const auto& g : generators) {
      if ((g[0] > 0) != pos) fail(ErrorKind::InvalidRing, "semigroup cone is not pointed");
    }
    ring->facets_.push_back(geometry::Halfspace{ExponentVector{pos ? 1 : -1}, 0});
  } else {
    ring->facets_ = geometry::polyhedron_facets({ExponentVector(d)}, generators);
    std::vector<ExponentVector> normals;
    for (const auto& f : ring->facets_) normals.push_back(f.normal);
    if (geometry::rank(geometry::to_matrix(normals)) != d) {
      fail(ErrorKind::InvalidRing, "semigroup cone is not pointed");
    }
  }
  if (ring->facets_.size() > kMaxFacets) fail(ErrorKind::InvalidRing, "cone has too many facets");

  // Extreme rays: generators tight on d-1 independent facets.
  std::vector<ExponentVector> dirs;
  for (const auto& g : generators) {
    std::vector<ExponentVector> tight;
    for (const auto& f : ring->facets_) {
      if (geometry::dot(f.normal, g) == 0) tight.push_back(f.normal);
    }
    if (geometry::rank(geometry::to_matrix(tight)) + 1 == d) dirs.push_back(primitive_direction(g));
  }
  std::sort(dirs.begin(), dirs.end());
  dirs.erase(std::unique(dirs.begin(), dirs.end()), dirs.end());
  for (const auto& dir : dirs) {
    std::int64_t t = 1;
    while (!ring->in_lattice(dir.scaled(t))) ++t;
    ring->rays_.push_back(dir.scaled(t));
  }

  // Normality: every point of L ∩ C decomposes as a point of the box spanned
  // by the ray parallelepipeds plus an N-combination of rays.
  ExponentVector lo(d), hi(d);
  for (const auto& r : ring->rays_) {
    for (std::size_t i = 0; i < d; ++i) {
      if (r[i] < 0) lo[i] += r[i];
      else hi[i] += r[i];
    }
  }
  GeneratedMembership generated(*ring, generators);
  for_each_box_point(lo, hi, [&](const ExponentVector& p) {
    if (ring->in_lattice(p) && ring->in_cone(p) && !generated(p)) {
      fail(ErrorKind::InvalidRing, "semigroup is not normal: " + p.to_string() +
                                       " lies in the lattice and cone but is not generated");
    }
  });

  for (const auto& g : generators) {
    const bool reducible = std::any_of(generators.begin(), generators.end(), [&](const auto& h) {
      return h != g && ring->in_cone(g - h);
    });
    if (!reducible) ring->hilbert_basis_.push_back(g);
  }
  return ring;
}

bool AmbientRing::in_lattice(const ExponentVector& p) const {
  if (is_polynomial()) return true;
  std::vector<__int128> residual(p.coords().begin(), p.coords().end());
  for (const auto& row : lattice_basis_) {
    std::size_t pc = 0;
    while (row[pc] == 0) ++pc;
    const __int128 pivot = static_cast<__int128>(static_cast<std::int64_t>(row[pc]));
    if (residual[pc] % pivot != 0) return false;
    const __int128 c = residual[pc] / pivot;
    for (std::size_t j = pc; j < dim_; ++j) residual[j] -= c * static_cast<std::int64_t>(row[j]);
  }
  return std::all_of(residual.begin(), residual.end(), [](__int128 x) { return x == 0; });
}

bool AmbientRing::in_cone(const ExponentVector& p) const {
  return std::all_of(facets_.begin(), facets_.end(), [&](const auto& f) { return f.contains(p); });
}

bool AmbientRing::contains(const ExponentVector& p) const {
  return p.dim() == dim_ && in_cone(p) && in_lattice(p);
}

bool AmbientRing::divides(const ExponentVector& u, const ExponentVector& v) const {
  return contains(v - u);
}

void AmbientRing::facet_coords(const ExponentVector& p, std::int64_t* out) const {
  if (is_polynomial()) {
    std::copy(p.coords().begin(), p.coords().end(), out);
    return;
  }
  for (std::size_t i = 0; i < facets_.size(); ++i) out[i] = geometry::dot(facets_[i].normal, p);
}

ExponentVector AmbientRing::facet_coords(const ExponentVector& p) const {
  ExponentVector out(facets_.size());
  for (std::size_t i = 0; i < facets_.size(); ++i) out[i] = geometry::dot(facets_[i].normal, p);
  return out;
}

std::int64_t AmbientRing::degree(const ExponentVector& p) const {
  std::int64_t total = 0;
  for (const auto& f : facets_) total = checked_add(total, geometry::dot(f.normal, p));
  return total;
}

std::vector<ExponentVector> AmbientRing::points_in_box(const ExponentVector& lo,
                                                       const ExponentVector& hi) const {
  ExponentVector clamped(lo);
  if (is_polynomial()) {
    for (std::size_t i = 0; i < dim_; ++i) clamped[i] = std::max<std::int64_t>(0, lo[i]);
  }
  std::vector<ExponentVector> out;
  for_each_box_point(clamped, hi, [&](const ExponentVector& p) {
    if (contains(p)) out.push_back(p);
  });
  return out;
}

Ring AmbientRing::with_t_variable() const {
  if (is_polynomial()) return polynomial(dim_ + 1);
  std::vector<ExponentVector> gens;
  for (const auto& h : hilbert_basis_) gens.push_back(h.extended(0));
  gens.push_back(ExponentVector(dim_).extended(1));
  return semigroup(std::move(gens));
}

std::string AmbientRing::spec() const {
  if (is_polynomial()) return "poly:" + std::to_string(dim_);
  std::ostringstream os;
  os << "semigroup:[";
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    os << (i ? "," : "") << '[';
    for (std::size_t j = 0; j < dim_; ++j) os << (j ? "," : "") << generators_[i][j];
    os << ']';
  }
  os << ']';
  return os.str();
}

bool AmbientRing::same_as(const AmbientRing& other) const {
  return kind_ == other.kind_ && dim_ == other.dim_ && hilbert_basis_ == other.hilbert_basis_;
}

bool same_ring(const Ring& a, const Ring& b) { return a == b || (a && b && a->same_as(*b)); }

}  // namespace lech
