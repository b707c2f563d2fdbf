#include "lech/enumerate.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "lech/closure.hpp"
#include "lech/errors.hpp"
#include "lech/multiplicity.hpp"
#include "lech/parallel.hpp"
#include "lech/random.hpp"

namespace lech {

namespace {

using PointSet = std::vector<ExponentVector>;  // sorted

MonomialIdeal ideal_from_order_ideal(const Ring& ring, const PointSet& down) {
  std::vector<ExponentVector> covers;
  for (const auto& p : down) {
    for (const auto& h : ring->hilbert_basis()) {
      ExponentVector q = p + h;
      if (!std::binary_search(down.begin(), down.end(), q)) covers.push_back(std::move(q));
    }
  }
  return minimalize(std::move(covers), ring);
}

Rational ratio_of(const MonomialIdeal& ideal) {
  return Rational(multiplicity(ideal), factorial(static_cast<unsigned>(ideal.dim())) * colength(ideal));
}

void sort_by_colength(std::vector<MonomialIdeal>& ideals) {
  std::vector<std::pair<std::uint64_t, std::size_t>> keys;
  for (std::size_t i = 0; i < ideals.size(); ++i) keys.emplace_back(colength(ideals[i]), i);
  std::stable_sort(keys.begin(), keys.end(), [&](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first < b.first;
    return ideals[a.second].generators() < ideals[b.second].generators();
  });
  std::vector<MonomialIdeal> sorted;
  for (const auto& [len, i] : keys) sorted.push_back(ideals[i]);
  ideals = std::move(sorted);
}

std::vector<MonomialIdeal> by_colength(const EnumerationSpec& spec) {
  const auto& ring = spec.ambient;
  if (ring->dim() > 2) {
    fail(ErrorKind::DimensionUnsupported, "exhaustive enumeration by colength is limited to d <= 2");
  }
  std::vector<MonomialIdeal> out;
  for (std::uint64_t n = 1; n <= spec.max_colength; ++n) {
    if (ring->is_polynomial() && ring->dim() == 2) {
      for (const auto& parts : partitions(static_cast<std::uint32_t>(n))) out.push_back(staircase_ideal(ring, parts));
    } else {
      auto level = order_ideal_enumeration(ring, n);
      out.insert(out.end(), level.begin(), level.end());
    }
  }
  return out;
}

std::vector<MonomialIdeal> by_generators(const EnumerationSpec& spec) {
  const auto& ring = spec.ambient;
  const std::size_t d = ring->dim();
  // Candidate points: nonzero elements of S with grading degree <= max_degree.
  std::int64_t reach = 1;
  for (const auto& h : ring->hilbert_basis()) {
    for (auto x : h.coords()) reach = std::max(reach, x < 0 ? -x : x);
  }
  reach = checked_mul(reach, spec.max_degree);
  ExponentVector lo(d), hi(d);
  for (std::size_t i = 0; i < d; ++i) {
    lo[i] = -reach;
    hi[i] = reach;
  }
  std::vector<ExponentVector> candidates;
  for (auto& p : ring->points_in_box(lo, hi)) {
    if (!p.is_zero() && ring->degree(p) <= spec.max_degree) candidates.push_back(std::move(p));
  }
  std::sort(candidates.begin(), candidates.end());

  std::vector<MonomialIdeal> out;
  std::vector<ExponentVector> chosen;
  auto recurse = [&](auto&& self, std::size_t start) -> void {
    if (!chosen.empty()) {
      MonomialIdeal ideal(ring, chosen);
      if (ideal.is_m_primary()) out.push_back(std::move(ideal));
    }
    if (chosen.size() == spec.max_generators) return;
    for (std::size_t i = start; i < candidates.size(); ++i) {
      const auto& p = candidates[i];
      const bool comparable = std::any_of(chosen.begin(), chosen.end(), [&](const auto& q) {
        return ring->divides(q, p) || ring->divides(p, q);
      });
      if (comparable) continue;
      chosen.push_back(p);
      self(self, i + 1);
      chosen.pop_back();
    }
  };
  recurse(recurse, 0);
  return out;
}

MonomialIdeal random_ideal(const Ring& ring, std::int64_t max_degree, SplitMix64& rng) {
  std::vector<ExponentVector> gens;
  const std::size_t d = ring->dim();
  for (const auto& ray : ring->extreme_rays()) gens.push_back(ray.scaled(rng.between(1, max_degree)));
  const std::size_t extra = rng.below(4);
  if (ring->is_polynomial()) {
    for (std::size_t k = 0; k < extra; ++k) {
      ExponentVector p(d);
      for (std::size_t i = 0; i < d; ++i) p[i] = rng.between(0, max_degree);
      if (!p.is_zero()) gens.push_back(p);
    }
  } else {
    std::int64_t reach = 1;
    for (const auto& r : ring->extreme_rays()) {
      for (auto x : r.coords()) reach = std::max(reach, x < 0 ? -x : x);
    }
    reach *= max_degree;
    std::size_t added = 0;
    for (std::size_t attempt = 0; added < extra && attempt < 1000; ++attempt) {
      ExponentVector p(d);
      for (std::size_t i = 0; i < d; ++i) p[i] = rng.between(-reach, reach);
      if (!p.is_zero() && ring->contains(p)) {
        gens.push_back(p);
        ++added;
      }
    }
  }
  return minimalize(std::move(gens), ring);
}

std::vector<MonomialIdeal> random_ideals(const EnumerationSpec& spec) {
  if (spec.max_degree < 1) fail(ErrorKind::InvalidConfig, "max_degree must be >= 1");
  SplitMix64 rng(spec.seed);
  std::vector<MonomialIdeal> out;
  const std::size_t attempts = 1000 * std::max<std::size_t>(spec.count, 1);
  for (std::size_t attempt = 0; out.size() < spec.count && attempt < attempts; ++attempt) {
    auto ideal = random_ideal(spec.ambient, spec.max_degree, rng);
    if (spec.filter == EnumerationFilter::IntegrallyClosed && !is_integrally_closed(ideal)) continue;
    out.push_back(std::move(ideal));
  }
  return out;
}

}  // namespace

std::vector<std::vector<std::uint32_t>> partitions(std::uint32_t n) {
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<std::uint32_t> current;
  auto recurse = [&](auto&& self, std::uint32_t remaining, std::uint32_t max_part) -> void {
    if (remaining == 0) {
      out.push_back(current);
      return;
    }
    for (std::uint32_t part = std::min(remaining, max_part); part >= 1; --part) {
      current.push_back(part);
      self(self, remaining - part, part);
      current.pop_back();
    }
  };
  if (n > 0) recurse(recurse, n, n);
  return out;
}

std::vector<BigInt> partition_numbers(std::uint32_t n) {
  std::vector<BigInt> p(n + 1, 0);
  p[0] = 1;
  for (std::uint32_t m = 1; m <= n; ++m) {
    for (std::int64_t k = 1;; ++k) {
      const std::int64_t g1 = k * (3 * k - 1) / 2;
      const std::int64_t g2 = k * (3 * k + 1) / 2;
      if (g1 > m) break;
      const bool plus = (k % 2) == 1;
      p[m] += plus ? p[m - g1] : BigInt(-p[m - g1]);
      if (g2 <= m) p[m] += plus ? p[m - g2] : BigInt(-p[m - g2]);
    }
  }
  return p;
}

MonomialIdeal staircase_ideal(const Ring& ring, const std::vector<std::uint32_t>& parts) {
  if (!ring->is_polynomial() || ring->dim() != 2) {
    fail(ErrorKind::DimensionUnsupported, "staircases are defined in k[x,y]");
  }
  std::vector<ExponentVector> gens;
  for (std::size_t j = 0; j < parts.size(); ++j) {
    gens.push_back(ExponentVector{static_cast<std::int64_t>(parts[j]), static_cast<std::int64_t>(j)});
  }
  gens.push_back(ExponentVector{0, static_cast<std::int64_t>(parts.size())});
  return minimalize(std::move(gens), ring);
}

std::vector<MonomialIdeal> order_ideal_enumeration(const Ring& ring, std::uint64_t n) {
  if (n == 0) return {};
  std::set<PointSet> level{PointSet{ExponentVector(ring->dim())}};
  for (std::uint64_t size = 1; size < n; ++size) {
    std::set<PointSet> next;
    for (const auto& down : level) {
      std::set<ExponentVector> candidates;
      for (const auto& p : down) {
        for (const auto& h : ring->hilbert_basis()) {
          ExponentVector q = p + h;
          if (!std::binary_search(down.begin(), down.end(), q)) candidates.insert(std::move(q));
        }
      }
      for (const auto& q : candidates) {
        const bool closed = std::all_of(ring->hilbert_basis().begin(), ring->hilbert_basis().end(), [&](const auto& h) {
          ExponentVector lower = q - h;
          return !ring->contains(lower) || std::binary_search(down.begin(), down.end(), lower);
        });
        if (!closed) continue;
        PointSet grown = down;
        grown.insert(std::upper_bound(grown.begin(), grown.end(), q), q);
        next.insert(std::move(grown));
      }
    }
    level = std::move(next);
  }
  std::vector<MonomialIdeal> out;
  for (const auto& down : level) out.push_back(ideal_from_order_ideal(ring, down));
  std::sort(out.begin(), out.end(), generator_order_less);
  return out;
}

std::vector<MonomialIdeal> enumerate_ideals(const EnumerationSpec& spec) {
  if (!spec.ambient) fail(ErrorKind::InvalidConfig, "enumeration needs an ambient ring");
  std::vector<MonomialIdeal> out;
  switch (spec.mode) {
    case EnumerationMode::ByColength:
      if (spec.max_colength < 1) fail(ErrorKind::InvalidConfig, "max colength must be >= 1");
      out = by_colength(spec);
      break;
    case EnumerationMode::ByGenerators:
      if (spec.max_generators < 1 || spec.max_degree < 1) fail(ErrorKind::InvalidConfig, "bad generator limits");
      out = by_generators(spec);
      break;
    case EnumerationMode::Random:
      return random_ideals(spec);
  }
  if (spec.filter == EnumerationFilter::IntegrallyClosed) {
    std::erase_if(out, [](const auto& ideal) { return !is_integrally_closed(ideal); });
  }
  sort_by_colength(out);
  return out;
}

std::vector<SupRatioRow> sup_ratio_curve(const EnumerationSpec& spec, std::vector<std::uint64_t> cutoffs,
                                         unsigned jobs) {
  if (cutoffs.empty()) return {};
  std::sort(cutoffs.begin(), cutoffs.end());
  cutoffs.erase(std::unique(cutoffs.begin(), cutoffs.end()), cutoffs.end());
  EnumerationSpec exhaustive = spec;
  exhaustive.mode = EnumerationMode::ByColength;
  exhaustive.max_colength = cutoffs.back();
  const auto ideals = enumerate_ideals(exhaustive);
  struct Row {
    std::uint64_t len;
    Rational ratio;
  };
  const auto rows = parallel_map<Row>(ideals.size(), jobs, [&](std::size_t i) {
    return Row{colength(ideals[i]), ratio_of(ideals[i])};
  });

  std::vector<SupRatioRow> out;
  std::uint64_t previous = 0;
  for (auto cutoff : cutoffs) {
    SupRatioRow row;
    row.cutoff = cutoff;
    for (std::size_t i = 0; i < ideals.size(); ++i) {
      if (rows[i].len > cutoff) continue;
      if (!row.argmax || rows[i].ratio > row.max_ratio) {
        row.max_ratio = rows[i].ratio;
        row.argmax = ideals[i];
      }
      if (rows[i].len > previous && (!row.band_max || rows[i].ratio > *row.band_max)) {
        row.band_max = rows[i].ratio;
        row.band_argmax = ideals[i];
      }
    }
    previous = cutoff;
    out.push_back(std::move(row));
  }
  return out;
}

std::vector<MonomialIdeal> max_powers(const Ring& ring, unsigned n) {
  std::vector<MonomialIdeal> out;
  const auto m = MonomialIdeal::maximal(ring);
  for (unsigned k = 1; k <= n; ++k) out.push_back(k == 1 ? m : product(out.back(), m));
  return out;
}

MonomialIdeal pure_powers(const Ring& ring, const std::vector<std::int64_t>& exponents) {
  const auto& rays = ring->extreme_rays();
  if (exponents.size() != rays.size()) {
    fail(ErrorKind::InvalidConfig, "pure_powers needs one exponent per extreme ray");
  }
  std::vector<ExponentVector> gens;
  for (std::size_t i = 0; i < rays.size(); ++i) {
    if (exponents[i] < 1) fail(ErrorKind::InvalidConfig, "pure power exponents must be >= 1");
    gens.push_back(rays[i].scaled(exponents[i]));
  }
  return minimalize(std::move(gens), ring);
}

ExtremalSearchResult hanes_extremal(const Ring& ring, std::size_t n) {
  if (!ring->is_polynomial() || ring->dim() != 2) {
    fail(ErrorKind::DimensionUnsupported, "hanes_extremal searches staircases of k[x,y]");
  }
  if (n < 2) fail(ErrorKind::InvalidConfig, "hanes_extremal needs N >= 2");
  std::vector<std::uint32_t> parts;
  for (std::size_t k = n - 1; k >= 1; --k) parts.push_back(static_cast<std::uint32_t>(k));

  auto neighbours = [](const std::vector<std::uint32_t>& lambda) {
    std::vector<std::vector<std::uint32_t>> out;
    for (std::size_t j = 0; j <= lambda.size(); ++j) {
      const std::uint32_t here = j < lambda.size() ? lambda[j] : 0;
      if (j == 0 || here < lambda[j - 1]) {
        auto grown = lambda;
        if (j == lambda.size()) grown.push_back(1);
        else ++grown[j];
        out.push_back(std::move(grown));
      }
    }
    for (std::size_t j = 0; j < lambda.size(); ++j) {
      const std::uint32_t below = j + 1 < lambda.size() ? lambda[j + 1] : 0;
      if (lambda[j] > below) {
        auto shrunk = lambda;
        if (--shrunk[j] == 0) shrunk.pop_back();
        if (!shrunk.empty()) out.push_back(std::move(shrunk));
      }
    }
    return out;
  };

  ExtremalSearchResult result{staircase_ideal(ring, parts), {}, 0, {}};
  result.ratio = ratio_of(result.ideal);
  for (std::size_t iteration = 0; iteration < 500; ++iteration) {
    std::optional<std::pair<Rational, std::vector<std::uint32_t>>> best;
    for (auto& candidate : neighbours(parts)) {
      auto ideal = staircase_ideal(ring, candidate);
      if (ideal.min_gens_count() > n) continue;
      Rational r = ratio_of(ideal);
      if (r > result.ratio && (!best || r > best->first)) best.emplace(r, std::move(candidate));
    }
    if (!best) break;
    parts = std::move(best->second);
    result.ideal = staircase_ideal(ring, parts);
    result.ratio = best->first;
    result.trail.push_back(result.ratio);
    ++result.moves;
  }
  return result;
}

}  // namespace lech
