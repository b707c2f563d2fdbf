// One line per acceptance criterion; exit status is nonzero if any fails.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "lech/closure.hpp"
#include "lech/enumerate.hpp"
#include "lech/inequalities.hpp"
#include "lech/multiplicity.hpp"
#include "lech/tgraded.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"
#include "support/process.hpp"

using namespace lech;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

class Check {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok && out_.pass) out_.detail = "failed: " + what;
    out_.pass = out_.pass && ok;
  }
  void note(const std::string& text) {
    if (out_.pass) out_.detail = text;
  }
  Outcome result() const { return out_; }

 private:
  Outcome out_;
};

Ring poly2() { return AmbientRing::polynomial(2); }
Ring veronese() { return AmbientRing::semigroup({{2, 0}, {1, 1}, {0, 2}}); }

std::vector<MonomialIdeal> by_colength(const Ring& ring, std::uint64_t max_colength,
                                       EnumerationFilter filter = EnumerationFilter::All) {
  EnumerationSpec spec{ring};
  spec.max_colength = max_colength;
  spec.filter = filter;
  return enumerate_ideals(spec);
}

const BoundEntry& bound(const RatioReport& r) { return r.bounds.front(); }

std::string str(const Rational& r) { return to_fraction_string(r); }

Outcome cross_oracle() {
  Check c;
  auto ideals = by_colength(poly2(), 5);
  c.expect(ideals.size() == 18, "18 ideals of colength <= 5");
  SplitMix64 rng(2024);
  for (int k = 0; k < 50; ++k) ideals.push_back(gen::poly_ideal(poly2(), rng, 6, 4));
  for (const auto& i : ideals) {
    c.expect(multiplicity_oracle(i, default_n_max(2)).e_value == newton_multiplicity_2d(i),
             "oracle = newton on " + i.generators().front().to_string());
  }
  for (std::int64_t a = 1; a <= 4; ++a) {
    for (std::int64_t b = 1; b <= 4; ++b) {
      MonomialIdeal i(poly2(), {{a, 0}, {0, b}});
      c.expect(multiplicity(i) == a * b && newton_multiplicity_2d(i) == a * b, "e((x^a, y^b)) = ab");
    }
  }
  c.note(std::to_string(ideals.size()) + " ideals, both routes equal; e((x^a,y^b)) = ab for a,b <= 4");
  return c.result();
}

Outcome lech_strict() {
  Check c;
  const auto poly = by_colength(poly2(), 10);
  // p(1) + ... + p(10); the unit ideal (p(0)) is not m-primary.
  std::uint64_t expected = 0;
  for (int n = 1; n <= 10; ++n) expected += oracle::partition_count(n, n);
  c.expect(poly.size() == expected, "one ideal per partition of 1..10");
  for (const auto& i : poly) {
    const auto r = evaluate(i, {BoundKind::Lech}, 1);
    c.expect(bound(r).kind == BoundKind::LechStrict && bound(r).strict, "e < 2 l in k[x,y]");
  }
  const auto ver = by_colength(veronese(), 6);
  for (const auto& i : ver) {
    const auto r = evaluate(i, {BoundKind::Lech}, 2);
    c.expect(bound(r).strict && r.inv.e < 4 * BigInt(r.inv.colength), "e < 2 e(R) l in the Veronese ring");
  }
  c.note(std::to_string(poly.size()) + " ideals of k[x,y] and " + std::to_string(ver.size()) +
         " of the Veronese ring, all strict");
  return c.result();
}

Outcome colength_bound() {
  Check c;
  const auto ideals = by_colength(poly2(), 10);
  std::vector<Rational> best(11, Rational(0));
  for (const auto& i : ideals) {
    const auto r = evaluate(i, {BoundKind::ColengthBound}, 1);
    c.expect(bound(r).satisfied, "colength bound");
    best[r.inv.colength] = std::max(best[r.inv.colength], r.inv.ratio);
  }
  for (std::uint64_t n = 1; n <= 10; ++n) {
    c.expect(best[n] <= Rational(1) - Rational(1, 2 * static_cast<long>(n)), "max ratio at N = " + std::to_string(n));
  }
  c.expect(best[1] == Rational(1, 2), "N = 1 maximum is 1/2");
  c.note("maxima for N <= 10 within 1 - 1/(2N); N = 1 max ratio " + str(best[1]) + " = 1 - 1/2");
  return c.result();
}

Outcome hanes() {
  Check c;
  std::size_t count = 0;
  for (const auto& [ring, len, ring_e] : {std::tuple{poly2(), 10, 1}, std::tuple{veronese(), 6, 2}}) {
    for (const auto& i : by_colength(ring, len)) {
      const auto r = evaluate(i, {BoundKind::HanesC}, ring_e);
      c.expect(bound(r).hypothesis_met && bound(r).satisfied, "Hanes bound with N = mu");
      ++count;
    }
  }
  const auto m2 = evaluate(power(MonomialIdeal::maximal(poly2()), 2), {BoundKind::HanesC}, 1);
  c.expect(m2.inv.e == 4 && m2.inv.colength == 3 && bound(m2).constant == Rational(2, 3) && bound(m2).value == 4,
           "m^2: 4 = 2 (2/3) 3");
  c.expect(bound(m2).tight, "m^2 reported tight");
  c.note(std::to_string(count) + " ideals satisfy it; m^2: e = 4 = 2*(2/3)*3, tight");
  return c.result();
}

Outcome mfull2() {
  Check c;
  std::size_t count = 0;
  for (const auto& [ring, len, ring_e] : {std::tuple{poly2(), 10, 1}, std::tuple{veronese(), 6, 2}}) {
    for (const auto& i : by_colength(ring, len, EnumerationFilter::IntegrallyClosed)) {
      const auto r = evaluate(i, {BoundKind::Dim2MFull}, ring_e);
      c.expect(bound(r).hypothesis_met && bound(r).satisfied, "dim-2 m-full bound");
      ++count;
    }
  }
  c.note(std::to_string(count) + " integrally closed ideals satisfy e <= 2(1 - 1/(2N-2)) e(R) l");
  return c.result();
}

Outcome uniform() {
  Check c;
  const auto v = veronese();
  const auto report = uniform_epsilon_report(v, by_colength(v, 6), 2);
  c.expect(report.epsilon_positive && report.epsilon > 0, "epsilon > 0");
  c.expect(report.all_within_uniform_bound, "uniform bound with the empirical epsilon");
  const auto curve = power_family_curve(poly2(), 9);
  for (const auto& p : curve) c.expect(p.ratio == Rational(p.n, p.n + 1), "ratio(m^n) = n/(n+1)");
  c.expect(curve.size() == 9 && curve.back().ratio >= Rational(9, 10), "ratio(m^9) >= 0.9");
  c.note("Veronese epsilon = " + str(report.epsilon) + " (sup ratio " + str(report.max_ratio) +
         "); k[x,y] ratio(m^9) = " + str(curve.back().ratio));
  return c.result();
}

Outcome tgraded() {
  Check c;
  SplitMix64 rng(7);
  for (int k = 0; k < 100; ++k) {
    auto base = AmbientRing::polynomial(1 + rng.below(2));
    c.expect(t_min_gens(gen::tgraded(base, rng)).within_bound, "mu bound on a random chain");
  }
  auto k1 = AmbientRing::polynomial(1);
  const TGradedIdeal j(k1, {MonomialIdeal(k1, {{2}}), MonomialIdeal(k1, {{1}})});
  const auto jr = t_min_gens(j);
  c.expect(jr.mu == 3 && jr.bound == 3 && jr.tight, "equality at J");
  for (int k = 0; k < 30; ++k) {
    auto base = AmbientRing::polynomial(1 + k % 2);
    const auto r = mumford_chain_check(gen::tgraded(base, rng, 3, 3));
    c.expect(r.holds && r.lhs <= r.mid && r.mid <= r.rhs, "Mumford chain on a random ideal");
  }
  const auto m = MonomialIdeal::maximal(poly2());
  const auto hand = mumford_chain_check(TGradedIdeal(poly2(), {m, m}));
  c.expect(hand.e == 2 && hand.length == 2 && hand.lhs == Rational(1, 6) && hand.mid == Rational(1, 2) &&
               hand.rhs == Rational(1, 2),
           "hand case 1/6 <= 1/2 <= 1/2");
  c.note("100 chains within mu bound, J tight (3 = 3); 30 Mumford chains hold; hand case " + str(hand.lhs) +
         " <= " + str(hand.mid) + " <= " + str(hand.rhs));
  return c.result();
}

Outcome bracket() {
  Check c;
  auto k1 = AmbientRing::polynomial(1);
  const TGradedIdeal j(k1, {MonomialIdeal(k1, {{2}}), MonomialIdeal(k1, {{1}})});
  const auto t = bracket_power_experiment(j, {}, {2, 4, 8, 16, 32});
  for (const auto& s : t.steps) {
    c.expect(s.length == 3 * s.q * s.q, "l(J^[q]) = 3 q^2 at q = " + std::to_string(s.q));
    c.expect(s.identity_holds, "component-sum identity");
    c.expect(s.ratio == 3, "l / q^2 = 3");
  }
  c.expect(t.target == 3 && t.limit_matches_target, "limit = e((x^2)) + e((x))");
  c.expect(t.lower_bound == Rational(8, 3) && t.lower_bound_holds, "8/3 <= 3");
  c.note("l(J^[q]) = 3q^2 for q in {2,...,32}; limit 3 = 2 + 1; lower bound " + str(t.lower_bound) + " <= 3");
  return c.result();
}

Outcome closure() {
  Check c;
  auto r = poly2();
  c.expect(integral_closure(MonomialIdeal(r, {{2, 0}, {0, 2}})) == MonomialIdeal(r, {{2, 0}, {1, 1}, {0, 2}}),
           "closure of (x^2, y^2)");
  c.expect(integral_closure(MonomialIdeal(r, {{3, 0}, {0, 2}})) == MonomialIdeal(r, {{3, 0}, {2, 1}, {0, 2}}),
           "closure of (x^3, y^2)");
  const auto ideals = by_colength(r, 8);
  for (const auto& i : ideals) {
    const auto cl = integral_closure(i);
    c.expect(integral_closure(cl) == cl, "idempotence");
    c.expect(multiplicity(cl) == multiplicity(i), "e(I) = e(closure)");
  }
  c.note("worked closures match; idempotent and e-invariant on " + std::to_string(ideals.size()) + " ideals");
  return c.result();
}

Outcome determinism() {
  Check c;
  const auto dir = std::filesystem::temp_directory_path() / "lech_acceptance";
  std::filesystem::create_directories(dir);
  std::string contents[2];
  for (int run = 0; run < 2; ++run) {
    const auto path = dir / ("search_" + std::to_string(run) + ".json");
    const auto res = proc::run(std::string(LECH_CLI_PATH) + " search --ring poly:2 --max-colength 8 --jobs 4 --out " +
                               proc::quote(path.string()));
    c.expect(res.exit_code == 0, "search exit code");
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    contents[run] = buf.str();
  }
  c.expect(!contents[0].empty() && contents[0] == contents[1], "byte-identical outputs");
  c.note("two runs, " + std::to_string(contents[0].size()) + " bytes each, identical");
  return c.result();
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"cross-oracle multiplicity", cross_oracle},
      {"Lech bound and strictness", lech_strict},
      {"colength bound", colength_bound},
      {"Hanes bound", hanes},
      {"dimension-2 m-full bound", mfull2},
      {"uniform Lech", uniform},
      {"T-graded machinery", tgraded},
      {"bracket-power lab", bracket},
      {"closure engine", closure},
      {"determinism", determinism},
  };
  int failures = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = criteria[k].second();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const auto ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    failures += !outcome.pass;
    std::cout << (outcome.pass ? "PASS" : "FAIL") << " [" << (k + 1) << "] " << criteria[k].first << ": "
              << outcome.detail << " (" << ms << " ms)\n";
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << "\n";
  return failures == 0 ? 0 : 1;
}
