#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "lech/closure.hpp"
#include "lech/enumerate.hpp"
#include "lech/inequalities.hpp"
#include "lech/io.hpp"
#include "lech/kernels.hpp"
#include "lech/multiplicity.hpp"
#include "lech/parallel.hpp"
#include "lech/tgraded.hpp"

using namespace lech;
using io::Json;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitInput = 2;

int exit_code_for(ErrorKind kind) { return kind == ErrorKind::HypothesisNotMet ? kExitFail : kExitInput; }

void emit(const Json& doc) { std::cout << doc.dump(2) << "\n"; }

Json fraction(const Rational& r) { return to_fraction_string(r); }

Json generator_json(const TGenerator& g) {
  Json out = Json::array();
  for (auto x : g.base.coords()) out.push_back(x);
  out.push_back(g.t_degree);
  return out;
}

Json halfspace_json(const geometry::Halfspace& h) {
  Json normal = Json::array();
  for (auto a : h.normal.coords()) normal.push_back(a);
  return Json{{"normal", normal}, {"threshold", h.threshold}};
}

std::string status_of(const std::vector<RatioReport>& reports) {
  bool violation = false, rejected = false;
  for (const auto& r : reports) {
    violation = violation || r.any_violation();
    rejected = rejected || r.any_rejected();
  }
  if (violation) return "violation";
  return rejected ? "rejected" : "pass";
}

std::vector<RatioReport> evaluate_all(const std::vector<MonomialIdeal>& ideals, const std::vector<BoundKind>& bounds,
                                      const BigInt& ring_e, unsigned jobs) {
  auto reports = parallel_map<RatioReport>(ideals.size(), jobs,
                                           [&](std::size_t i) { return evaluate(ideals[i], bounds, ring_e); });
  sort_reports(reports);
  return reports;
}

void write_table(const std::vector<RatioReport>& reports, io::OutputFormat format, const std::string& path,
                 const Json& header) {
  std::ostringstream body;
  if (format == io::OutputFormat::Csv) {
    io::write_reports_csv(body, reports);
  } else {
    Json doc = header;
    doc["status"] = status_of(reports);
    doc["rows"] = io::reports_json(reports);
    body << doc.dump(2) << "\n";
  }
  if (path.empty()) {
    std::cout << body.str();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorKind::InvalidConfig, "cannot write '" + path + "'");
  out << body.str();
}

int table_exit(const std::vector<RatioReport>& reports) {
  return status_of(reports) == "pass" ? kExitPass : kExitFail;
}

io::OutputFormat parse_format(const std::string& name) {
  if (name == "csv") return io::OutputFormat::Csv;
  if (name == "json") return io::OutputFormat::Json;
  fail(ErrorKind::InvalidConfig, "format must be csv or json");
}

int cmd_mult(const std::string& ring_spec, const std::string& expr, const std::string& method, unsigned n_max) {
  const Ring ring = io::parse_ring_spec(ring_spec);
  const MonomialIdeal ideal = io::parse_ideal(expr, ring);
  Json out{{"ring", ring->spec()}, {"ideal", io::serialize_ideal(ideal)}, {"method", method}};
  std::optional<BigInt> oracle_e, newton_e;
  if (method == "oracle" || method == "both") {
    HilbertSamuelTrace trace;
    if (n_max > 0) {
      trace = multiplicity_oracle(ideal, n_max);
    } else {
      trace.e_value = multiplicity(ideal);
    }
    oracle_e = *trace.e_value;
    out["oracle_e"] = io::json_integer(*oracle_e);
    if (!trace.lengths.empty()) {
      Json lengths = Json::array();
      for (auto l : trace.lengths) lengths.push_back(io::json_integer(l));
      out["lengths"] = lengths;
      out["stabilized_at"] = *trace.stabilized_at;
    }
  }
  if (method == "newton" || (method == "both" && ideal.dim() == 2)) {
    newton_e = newton_multiplicity_2d(ideal);
    out["newton_e"] = io::json_integer(*newton_e);
  }
  out["e"] = io::json_integer(oracle_e ? *oracle_e : *newton_e);
  if (oracle_e && newton_e) {
    out["methods_agree"] = *oracle_e == *newton_e;
    emit(out);
    return *oracle_e == *newton_e ? kExitPass : kExitFail;
  }
  if (method == "both") out["note"] = "newton route needs d = 2; oracle only";
  emit(out);
  return kExitPass;
}

int cmd_closure(const std::string& ring_spec, const std::string& expr) {
  const Ring ring = io::parse_ring_spec(ring_spec);
  const MonomialIdeal ideal = io::parse_ideal(expr, ring);
  const MonomialIdeal closed = integral_closure(ideal);
  Json facets = Json::array();
  for (const auto& h : newton_polyhedron(ideal).halfspaces) facets.push_back(halfspace_json(h));
  const auto cert = m_full_certificate(ideal);
  emit({{"ring", ring->spec()},
        {"ideal", io::serialize_ideal(ideal)},
        {"closure", io::serialize_ideal(closed)},
        {"integrally_closed", closed == ideal},
        {"colength", io::json_integer(colength(ideal))},
        {"closure_colength", io::json_integer(colength(closed))},
        {"e", io::json_integer(multiplicity(ideal))},
        {"closure_e", io::json_integer(multiplicity(closed))},
        {"newton_facets", facets},
        {"m_full", cert.status == FullnessStatus::MFullByClosure ? "m_full_by_closure" : "unknown"},
        {"m_full_witness", cert.witness}});
  return kExitPass;
}

int cmd_verify(const std::string& ring_spec, const std::string& expr, const std::string& bounds) {
  const Ring ring = io::parse_ring_spec(ring_spec);
  const MonomialIdeal ideal = io::parse_ideal(expr, ring);
  const auto report = evaluate(ideal, io::parse_bound_list(bounds), ring_multiplicity(ring));
  const std::vector<RatioReport> reports{report};
  emit({{"ring", ring->spec()},
        {"ideal", io::serialize_ideal(ideal)},
        {"e", io::json_integer(report.inv.e)},
        {"colength", io::json_integer(report.inv.colength)},
        {"mu", io::json_integer(report.inv.mu)},
        {"ring_e", io::json_integer(report.inv.ring_e)},
        {"ratio", fraction(report.inv.ratio)},
        {"status", status_of(reports)},
        {"bounds", io::report_json(report)}});
  return table_exit(reports);
}

int cmd_search(const std::string& ring_spec, std::uint64_t max_colength, bool closed_only, const std::string& out,
               const std::string& format, const std::string& bounds, unsigned jobs) {
  EnumerationSpec spec;
  spec.ambient = io::parse_ring_spec(ring_spec);
  spec.max_colength = max_colength;
  spec.filter = closed_only ? EnumerationFilter::IntegrallyClosed : EnumerationFilter::All;
  const auto ideals = enumerate_ideals(spec);
  const auto reports = evaluate_all(ideals, io::parse_bound_list(bounds), ring_multiplicity(spec.ambient), jobs);
  const Json header{{"ring", spec.ambient->spec()},
                    {"max_colength", max_colength},
                    {"closed_only", closed_only},
                    {"ideals", ideals.size()}};
  write_table(reports, parse_format(format), out, header);
  return table_exit(reports);
}

int cmd_sup_curve(const std::string& ring_spec, const std::string& cutoffs, bool closed_only, unsigned jobs) {
  EnumerationSpec spec;
  spec.ambient = io::parse_ring_spec(ring_spec);
  spec.filter = closed_only ? EnumerationFilter::IntegrallyClosed : EnumerationFilter::All;
  const auto cuts = io::parse_uint_list(cutoffs);
  const auto curve = sup_ratio_curve(spec, cuts, jobs);
  Json rows = Json::array();
  for (const auto& row : curve) {
    Json r{{"cutoff", row.cutoff}, {"max_ratio", fraction(row.max_ratio)}};
    r["argmax"] = row.argmax ? Json(io::serialize_ideal(*row.argmax)) : Json();
    r["band_max"] = row.band_max ? fraction(*row.band_max) : Json();
    r["band_argmax"] = row.band_argmax ? Json(io::serialize_ideal(*row.band_argmax)) : Json();
    rows.push_back(std::move(r));
  }
  Json out{{"ring", spec.ambient->spec()}, {"rows", rows}};
  const BigInt ring_e = ring_multiplicity(spec.ambient);
  out["ring_e"] = io::json_integer(ring_e);
  if (ring_e > 1) {
    spec.max_colength = *std::max_element(cuts.begin(), cuts.end());
    const auto report = uniform_epsilon_report(spec.ambient, enumerate_ideals(spec), jobs);
    out["uniform"] = {{"max_ratio", fraction(report.max_ratio)},
                      {"epsilon", fraction(report.epsilon)},
                      {"epsilon_positive", report.epsilon_positive},
                      {"all_within_uniform_bound", report.all_within_uniform_bound}};
  } else {
    out["uniform"] = nullptr;
  }
  emit(out);
  return kExitPass;
}

int cmd_tgraded(const std::string& path, const std::string& check, unsigned n_max) {
  const auto spec = io::load_tgraded(path);
  const auto& ideal = spec.ideal;
  Json out{{"base", ideal.base()->spec()}, {"K", ideal.k()}, {"check", check}};
  Json gens = Json::array();
  for (const auto& g : t_minimal_generators(ideal)) gens.push_back(generator_json(g));
  out["generators"] = gens;
  bool holds = false;
  if (check == "mingens") {
    const auto r = t_min_gens(ideal);
    out["mu"] = r.mu;
    out["bound"] = r.bound;
    out["tight"] = r.tight;
    holds = r.within_bound;
  } else if (check == "mumford") {
    const auto r = mumford_chain_check(ideal, n_max);
    out["e"] = io::json_integer(r.e);
    out["length"] = io::json_integer(r.length);
    Json comps = Json::array();
    for (std::size_t k = 0; k < r.component_e.size(); ++k) {
      comps.push_back({{"e", io::json_integer(r.component_e[k])},
                       {"length", io::json_integer(r.component_lengths[k])}});
    }
    out["components"] = comps;
    out["lhs"] = fraction(r.lhs);
    out["mid"] = fraction(r.mid);
    out["rhs"] = fraction(r.rhs);
    holds = r.holds;
  } else if (check == "doublegraded") {
    const auto r = double_graded_decomposition_check(ideal, n_max);
    out["t_length"] = io::json_integer(r.t_length);
    out["component_sum"] = io::json_integer(r.component_sum);
    out["flat_colength"] = io::json_integer(r.flat_colength);
    out["lengths_match"] = r.lengths_match;
    out["e"] = io::json_integer(r.e_original);
    out["closed_components_e"] = io::json_integer(r.e_closed);
    out["closed_components_length"] = io::json_integer(r.closed_length);
    out["e_equal"] = r.e_equal;
    out["length_nonincreasing"] = r.length_nonincreasing;
    holds = r.holds;
  } else {
    fail(ErrorKind::InvalidConfig, "check must be mumford, mingens or doublegraded");
  }
  out["holds"] = holds;
  emit(out);
  return holds ? kExitPass : kExitFail;
}

int cmd_bracket(const std::string& path, const std::string& q_list) {
  const auto spec = io::load_tgraded(path);
  const auto trace = bracket_power_experiment(spec.ideal, spec.generators.value_or(std::vector<TGenerator>{}),
                                              io::parse_uint_list(q_list));
  Json gens = Json::array();
  for (const auto& g : trace.generators) gens.push_back(generator_json(g));
  Json steps = Json::array();
  bool ok = trace.lower_bound_holds;
  for (const auto& s : trace.steps) {
    steps.push_back({{"q", s.q},
                     {"length", io::json_integer(s.length)},
                     {"component_formula", io::json_integer(s.component_formula)},
                     {"identity_holds", s.identity_holds},
                     {"s", s.s},
                     {"surjection_rhs", io::json_integer(s.surjection_rhs)},
                     {"surjection_holds", s.surjection_holds},
                     {"ratio", fraction(s.ratio)}});
    ok = ok && s.identity_holds && s.surjection_holds;
  }
  Json out{{"base", spec.ideal.base()->spec()},
           {"generators", gens},
           {"n_generators", trace.n_generators},
           {"steps", steps},
           {"limit_estimate", fraction(trace.limit_estimate)},
           {"target", io::json_integer(trace.target)},
           {"e_j", io::json_integer(trace.e_j)},
           {"lower_bound", fraction(trace.lower_bound)},
           {"lower_bound_holds", trace.lower_bound_holds},
           {"limit_matches_target", trace.limit_matches_target}};
  if (!trace.note.empty()) out["note"] = trace.note;
  out["status"] = ok ? "pass" : "violation";
  emit(out);
  return ok ? kExitPass : kExitFail;
}

int cmd_run(const std::string& path, unsigned jobs_override) {
  auto config = io::load_run_config(path);
  if (jobs_override > 0) config.jobs = jobs_override;
  const auto ideals = enumerate_ideals(config.enumeration);
  const auto reports = evaluate_all(ideals, config.bounds, ring_multiplicity(config.ring, config.n_max), config.jobs);
  const Json header{{"ring", config.ring->spec()}, {"seed", config.seed}, {"ideals", ideals.size()}};
  write_table(reports, config.format, config.output, header);
  return table_exit(reports);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact experiments on multiplicity and colength of monomial ideals"};
  app.require_subcommand(1);

  std::string ring, ideal, method = "both", bounds = "lech", out, format = "json", cutoffs, spec_path, check, q_list,
                           config_path;
  unsigned n_max = 0, jobs = 1;
  std::uint64_t max_colength = 0;
  bool closed_only = false;

  auto* mult = app.add_subcommand("mult", "Multiplicity e(I)");
  mult->add_option("--ring", ring, "poly:d or semigroup:[[..],..]")->required();
  mult->add_option("--ideal", ideal, "e.g. \"x^3, x*y, y^3\"")->required();
  mult->add_option("--method", method)->check(CLI::IsMember({"oracle", "newton", "both"}));
  mult->add_option("--n-max", n_max, "number of powers sampled by the oracle");

  auto* closure = app.add_subcommand("closure", "Integral closure and Newton polyhedron");
  closure->add_option("--ring", ring)->required();
  closure->add_option("--ideal", ideal)->required();

  auto* verify = app.add_subcommand("verify", "Check Lech-type bounds on one ideal");
  verify->add_option("--ring", ring)->required();
  verify->add_option("--ideal", ideal)->required();
  verify->add_option("--bounds", bounds, "lech,hanes,mfull2,dimd,colength");

  auto* search = app.add_subcommand("search", "Enumerate ideals by colength and check bounds");
  search->add_option("--ring", ring)->required();
  search->add_option("--max-colength", max_colength)->required();
  search->add_flag("--closed-only", closed_only, "keep integrally closed ideals only");
  search->add_option("--out", out, "output file (default stdout)");
  search->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
  search->add_option("--bounds", bounds);
  search->add_option("--jobs", jobs);

  auto* curve = app.add_subcommand("sup-curve", "Maximal e/(d! l) by colength cutoff");
  curve->add_option("--ring", ring)->required();
  curve->add_option("--cutoffs", cutoffs)->required();
  curve->add_flag("--closed-only", closed_only);
  curve->add_option("--jobs", jobs);

  auto* tgraded = app.add_subcommand("tgraded", "Checks on T-graded ideals of R[T]");
  tgraded->add_option("--spec", spec_path)->required()->check(CLI::ExistingFile);
  tgraded->add_option("--check", check)->required()->check(CLI::IsMember({"mumford", "mingens", "doublegraded"}));
  tgraded->add_option("--n-max", n_max);

  auto* bracket = app.add_subcommand("bracket", "Bracket-power experiment over a one-dimensional base");
  bracket->add_option("--spec", spec_path)->required()->check(CLI::ExistingFile);
  bracket->add_option("--q", q_list)->required();

  auto* run = app.add_subcommand("run", "Enumerate and verify from a JSON config");
  run->add_option("--config", config_path)->required()->check(CLI::ExistingFile);
  run->add_option("--jobs", jobs);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << Json{{"error", "UsageError"}, {"message", e.what()}}.dump() << "\n";
    return kExitInput;
  }
  jobs = std::max(1u, jobs);

  try {
    if (*mult) return cmd_mult(ring, ideal, method, n_max);
    if (*closure) return cmd_closure(ring, ideal);
    if (*verify) return cmd_verify(ring, ideal, bounds);
    if (*search) return cmd_search(ring, max_colength, closed_only, out, format, bounds, jobs);
    if (*curve) return cmd_sup_curve(ring, cutoffs, closed_only, jobs);
    if (*tgraded) return cmd_tgraded(spec_path, check, n_max);
    if (*bracket) return cmd_bracket(spec_path, q_list);
    if (*run) return cmd_run(config_path, run->count("--jobs") ? jobs : 0);
  } catch (const LechError& e) {
    std::cerr << io::error_json(e).dump() << "\n";
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    std::cerr << Json{{"error", "InternalError"}, {"message", e.what()}}.dump() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
