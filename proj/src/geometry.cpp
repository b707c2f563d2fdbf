#include "lech/geometry.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "lech/errors.hpp"

namespace lech::geometry {

namespace {

std::int64_t to_int64(const BigInt& v) {
  if (v > BigInt(INT64_MAX) || v < BigInt(INT64_MIN)) {
    fail(ErrorKind::ExponentOverflow, "geometry value exceeds 64-bit range");
  }
  return static_cast<std::int64_t>(v);
}

// Cross-sign comparison of 2D vectors (b - a) x (c - a).
BigInt cross(const ExponentVector& a, const ExponentVector& b, const ExponentVector& c) {
  return BigInt(b[0] - a[0]) * BigInt(c[1] - a[1]) - BigInt(b[1] - a[1]) * BigInt(c[0] - a[0]);
}

}  // namespace

IntMatrix to_matrix(const std::vector<ExponentVector>& rows) {
  IntMatrix m;
  m.reserve(rows.size());
  for (const auto& r : rows) {
    std::vector<BigInt> row;
    for (auto x : r.coords()) row.emplace_back(x);
    m.push_back(std::move(row));
  }
  return m;
}

// Bareiss fraction-free elimination.
BigInt determinant(IntMatrix m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  BigInt sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap = k + 1;
      while (swap < n && m[swap][k] == 0) ++swap;
      if (swap == n) return 0;
      std::swap(m[k], m[swap]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

std::size_t rank(IntMatrix m) {
  if (m.empty()) return 0;
  const std::size_t cols = m.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t pivot = r;
    while (pivot < m.size() && m[pivot][c] == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[r], m[pivot]);
    for (std::size_t i = r + 1; i < m.size(); ++i) {
      if (m[i][c] == 0) continue;
      BigInt a = m[r][c];
      BigInt b = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] = m[i][j] * a - m[r][j] * b;
    }
    ++r;
  }
  return r;
}

std::vector<BigInt> cofactor_normal(const IntMatrix& rows) {
  const std::size_t d = rows.empty() ? 0 : rows.front().size();
  std::vector<BigInt> normal(d);
  if (d == 1) {
    normal[0] = 1;
    return normal;
  }
  for (std::size_t j = 0; j < d; ++j) {
    IntMatrix minor;
    for (const auto& row : rows) {
      std::vector<BigInt> r;
      for (std::size_t c = 0; c < d; ++c) {
        if (c != j) r.push_back(row[c]);
      }
      minor.push_back(std::move(r));
    }
    BigInt det = determinant(std::move(minor));
    normal[j] = (j % 2 == 0) ? det : BigInt(-det);
  }
  return normal;
}

std::vector<BigInt> primitive(std::vector<BigInt> v) {
  BigInt g = 0;
  for (const auto& x : v) g = boost::multiprecision::gcd(g, abs(x));
  if (g > 1) {
    for (auto& x : v) x /= g;
  }
  return v;
}

IntMatrix hermite_normal_form(IntMatrix rows) {
  if (rows.empty()) return rows;
  const std::size_t cols = rows.front().size();
  IntMatrix out;
  for (std::size_t c = 0; c < cols; ++c) {
    // Euclid on column c across remaining rows until one nonzero entry remains.
    for (;;) {
      std::size_t best = rows.size();
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i][c] != 0 && (best == rows.size() || abs(rows[i][c]) < abs(rows[best][c]))) best = i;
      }
      if (best == rows.size()) break;
      bool reduced = false;
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i == best || rows[i][c] == 0) continue;
        BigInt q = rows[i][c] / rows[best][c];
        for (std::size_t j = c; j < cols; ++j) rows[i][j] -= q * rows[best][j];
        reduced = true;
      }
      if (!reduced) {
        auto pivot = rows[best];
        rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(best));
        if (pivot[c] < 0) {
          for (auto& x : pivot) x = -x;
        }
        out.push_back(std::move(pivot));
        break;
      }
    }
  }
  // Reduce entries above each pivot into [0, pivot).
  for (std::size_t r = 0; r < out.size(); ++r) {
    std::size_t pc = 0;
    while (out[r][pc] == 0) ++pc;
    for (std::size_t above = 0; above < r; ++above) {
      BigInt q = out[above][pc] / out[r][pc];
      if (out[above][pc] - q * out[r][pc] < 0) q -= 1;
      for (std::size_t j = 0; j < cols; ++j) out[above][j] -= q * out[r][j];
    }
  }
  return out;
}

std::int64_t dot(const ExponentVector& a, const ExponentVector& b) {
  __int128 acc = 0;
  for (std::size_t i = 0; i < a.dim(); ++i) acc += static_cast<__int128>(a[i]) * b[i];
  if (acc > INT64_MAX || acc < INT64_MIN) fail(ErrorKind::ExponentOverflow, "dot product overflow");
  return static_cast<std::int64_t>(acc);
}

bool Halfspace::contains(const ExponentVector& p) const { return dot(normal, p) >= threshold; }

std::vector<Halfspace> polyhedron_facets(const std::vector<ExponentVector>& points,
                                         const std::vector<ExponentVector>& rays) {
  if (points.empty()) return {};
  const std::size_t d = points.front().dim();
  std::vector<ExponentVector> elems(points);
  elems.insert(elems.end(), rays.begin(), rays.end());
  const std::size_t np = points.size();
  std::set<Halfspace> found;

  std::vector<std::size_t> pick(d);
  // Lexicographic d-subsets whose first element is a point.
  auto consider = [&]() {
    const ExponentVector& anchor = elems[pick[0]];
    std::vector<ExponentVector> dirs;
    for (std::size_t t = 1; t < d; ++t) {
      const std::size_t idx = pick[t];
      dirs.push_back(idx < np ? elems[idx] - anchor : elems[idx]);
    }
    auto normal = d == 1 ? std::vector<BigInt>{1} : primitive(cofactor_normal(to_matrix(dirs)));
    if (std::all_of(normal.begin(), normal.end(), [](const BigInt& x) { return x == 0; })) return;
    ExponentVector n(d);
    for (std::size_t i = 0; i < d; ++i) n[i] = to_int64(normal[i]);
    for (int attempt = 0; attempt < 2; ++attempt) {
      const std::int64_t c = dot(n, anchor);
      bool valid = std::all_of(rays.begin(), rays.end(), [&](const auto& r) { return dot(n, r) >= 0; }) &&
                   std::all_of(points.begin(), points.end(), [&](const auto& p) { return dot(n, p) >= c; });
      if (valid) {
        found.insert(Halfspace{n, c});
        return;
      }
      n = n.scaled(-1);
    }
  };

  // Iterate all d-subsets of elems with pick[0] < np.
  for (std::size_t i = 0; i < d; ++i) pick[i] = i;
  const std::size_t total = elems.size();
  if (total < d) return {};
  for (;;) {
    if (pick[0] >= np) break;
    consider();
    std::size_t pos = d;
    while (pos > 0 && pick[pos - 1] == total - d + pos - 1) --pos;
    if (pos == 0) break;
    ++pick[pos - 1];
    for (std::size_t j = pos; j < d; ++j) pick[j] = pick[j - 1] + 1;
  }
  return {found.begin(), found.end()};
}

std::vector<ExponentVector> quadrant_lower_chain(std::vector<ExponentVector> points) {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  // Pareto-minimal points: u increasing, v strictly decreasing.
  std::vector<ExponentVector> pareto;
  for (const auto& p : points) {
    if (pareto.empty() || p[1] < pareto.back()[1]) pareto.push_back(p);
  }
  std::vector<ExponentVector> chain;
  for (const auto& p : pareto) {
    while (chain.size() >= 2 && cross(chain[chain.size() - 2], chain.back(), p) <= 0) chain.pop_back();
    chain.push_back(p);
  }
  return chain;
}

BigInt twice_area_below_chain(const std::vector<ExponentVector>& chain) {
  // Polygon: origin, last chain vertex (on u-axis), chain reversed, first (on v-axis).
  std::vector<ExponentVector> poly;
  poly.push_back(ExponentVector{0, 0});
  for (auto it = chain.rbegin(); it != chain.rend(); ++it) poly.push_back(*it);
  BigInt twice = 0;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const auto& a = poly[i];
    const auto& b = poly[(i + 1) % poly.size()];
    twice += BigInt(a[0]) * BigInt(b[1]) - BigInt(b[0]) * BigInt(a[1]);
  }
  return abs(twice);
}

}  // namespace lech::geometry
