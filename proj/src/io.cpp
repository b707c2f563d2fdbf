#include "lech/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <ostream>
#include <set>

namespace lech::io {

namespace {

[[noreturn]] void syntax_error(const std::string& message, std::size_t position) {
  throw LechError(ErrorKind::SyntaxError, message + " at position " + std::to_string(position), position);
}

std::int64_t parse_json_exponent(const Json& value) {
  if (!value.is_number_integer()) fail(ErrorKind::SyntaxError, "exponent entries must be integers");
  const auto x = value.get<std::int64_t>();
  if (x > kMaxParsedExponent || x < -kMaxParsedExponent) {
    fail(ErrorKind::ExponentOverflow, "exponent " + std::to_string(x) + " exceeds 10^6 in magnitude");
  }
  return x;
}

ExponentVector json_point(const Json& value, std::size_t dim) {
  if (!value.is_array() || value.size() != dim) {
    fail(ErrorKind::InvalidGenerator, "expected an exponent vector of length " + std::to_string(dim));
  }
  ExponentVector p(dim);
  for (std::size_t i = 0; i < dim; ++i) p[i] = parse_json_exponent(value[i]);
  return p;
}

std::vector<ExponentVector> json_points(const Json& value, std::size_t dim) {
  if (!value.is_array()) fail(ErrorKind::InvalidGenerator, "expected a list of exponent vectors");
  std::vector<ExponentVector> out;
  for (const auto& entry : value) out.push_back(json_point(entry, dim));
  return out;
}

Json parse_json_text(std::string_view text, std::size_t offset) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& err) {
    syntax_error(std::string("malformed exponent list: ") + err.what(), offset + (err.byte > 0 ? err.byte - 1 : 0));
  }
}

class MonomialParser {
 public:
  MonomialParser(std::string_view text, std::size_t dim) : text_(text), dim_(dim), names_(variable_names(dim)) {}

  std::vector<ExponentVector> parse() {
    std::vector<ExponentVector> gens;
    skip_space();
    if (at_end()) syntax_error("empty ideal expression", pos_);
    do {
      gens.push_back(monomial());
      skip_space();
    } while (consume(','));
    if (!at_end()) syntax_error(std::string("unexpected '") + text_[pos_] + "'", pos_);
    return gens;
  }

 private:
  ExponentVector monomial() {
    skip_space();
    ExponentVector p(dim_);
    if (peek() == '1') {
      const std::size_t start = pos_++;
      if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) syntax_error("expected a variable", start);
      return p;
    }
    do {
      skip_space();
      const std::size_t var = variable();
      std::int64_t exponent = 1;
      skip_space();
      if (consume('^')) {
        skip_space();
        exponent = natural();
      }
      p[var] = checked_add(p[var], exponent);
      if (p[var] > kMaxParsedExponent) {
        fail(ErrorKind::ExponentOverflow, "exponent of " + names_[var] + " exceeds 10^6");
      }
      skip_space();
    } while (consume('*'));
    return p;
  }

  std::size_t variable() {
    const std::size_t start = pos_;
    if (at_end() || !std::isalpha(static_cast<unsigned char>(peek()))) syntax_error("expected a variable", pos_);
    while (!at_end() && std::isalnum(static_cast<unsigned char>(peek()))) ++pos_;
    const std::string name(text_.substr(start, pos_ - start));
    if (auto it = std::find(names_.begin(), names_.end(), name); it != names_.end()) {
      return static_cast<std::size_t>(it - names_.begin());
    }
    if (name.size() > 1 && name[0] == 'x') {
      std::size_t index = 0;
      auto [end, ec] = std::from_chars(name.data() + 1, name.data() + name.size(), index);
      if (ec == std::errc() && end == name.data() + name.size() && index >= 1 && index <= dim_) return index - 1;
    }
    throw LechError(ErrorKind::UnknownVariable,
                    "unknown variable '" + name + "' at position " + std::to_string(start) + " for dimension " +
                        std::to_string(dim_),
                    start);
  }

  std::int64_t natural() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) syntax_error("expected a natural number", start);
    const auto digits = text_.substr(start, pos_ - start);
    std::int64_t value = 0;
    auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (ec == std::errc::result_out_of_range || value > kMaxParsedExponent) {
      throw LechError(ErrorKind::ExponentOverflow, "exponent " + std::string(digits) + " exceeds 10^6", start);
    }
    return value;
  }

  char peek() const { return text_[pos_]; }
  bool at_end() const { return pos_ >= text_.size(); }
  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool consume(char c) {
    if (!at_end() && peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::string_view text_;
  std::size_t dim_;
  std::vector<std::string> names_;
  std::size_t pos_ = 0;
};

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(first, last - first + 1));
}

std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

template <class T>
T get_or(const Json& obj, const char* key, T fallback) {
  if (!obj.contains(key)) return fallback;
  try {
    return obj.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    fail(ErrorKind::InvalidConfig, std::string("config key '") + key + "' has the wrong type");
  }
}

void reject_unknown_keys(const Json& obj, std::initializer_list<const char*> known, const std::string& where) {
  for (const auto& [key, value] : obj.items()) {
    const bool ok = std::any_of(known.begin(), known.end(), [&](const char* k) { return key == k; });
    if (!ok) fail(ErrorKind::InvalidConfig, "unknown key '" + key + "' in " + where);
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::InvalidConfig, "cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& err) {
    throw LechError(ErrorKind::SyntaxError, "malformed JSON in '" + path + "': " + err.what(), err.byte);
  }
}

}  // namespace

Ring parse_ring_spec(std::string_view text) {
  const std::string spec = trim(text);
  if (spec.rfind("poly:", 0) == 0) {
    std::size_t dim = 0;
    const char* begin = spec.data() + 5;
    const char* end = spec.data() + spec.size();
    auto [ptr, ec] = std::from_chars(begin, end, dim);
    if (ec != std::errc() || ptr != end || dim < 1) {
      fail(ErrorKind::InvalidRing, "ring spec 'poly:d' needs a positive dimension, got '" + spec + "'");
    }
    if (dim > 64) fail(ErrorKind::InvalidRing, "dimension above 64 is not supported");
    return AmbientRing::polynomial(dim);
  }
  if (spec.rfind("semigroup:", 0) == 0) {
    const Json gens = parse_json_text(std::string_view(spec).substr(10), 10);
    if (!gens.is_array() || gens.empty() || !gens[0].is_array()) {
      fail(ErrorKind::InvalidRing, "semigroup spec needs a nonempty list of generator vectors");
    }
    return AmbientRing::semigroup(json_points(gens, gens[0].size()));
  }
  fail(ErrorKind::InvalidRing, "unknown ring spec '" + spec + "'; expected poly:d or semigroup:[[..],..]");
}

std::vector<std::string> variable_names(std::size_t dim) {
  static const char* const kShort[] = {"x", "y", "z"};
  std::vector<std::string> names;
  for (std::size_t i = 0; i < dim; ++i) {
    names.push_back(dim <= 3 ? std::string(kShort[i]) : "x" + std::to_string(i + 1));
  }
  return names;
}

MonomialIdeal parse_ideal(std::string_view text, const Ring& ring) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '[') {
    return MonomialIdeal(ring, json_points(parse_json_text(text, 0), ring->dim()));
  }
  if (trim(text) == "0") return MonomialIdeal::zero(ring);
  return MonomialIdeal(ring, MonomialParser(text, ring->dim()).parse());
}

std::string serialize_point(const ExponentVector& p, std::size_t dim) {
  if (p.is_zero()) return "1";
  const auto names = variable_names(dim);
  std::string out;
  for (std::size_t i = 0; i < dim; ++i) {
    if (p[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += names[i];
    if (p[i] != 1) out += '^' + std::to_string(p[i]);
  }
  return out;
}

std::string serialize_ideal(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) return "0";
  const auto& gens = ideal.generators();
  const bool nonnegative = std::all_of(gens.begin(), gens.end(), [](const auto& g) {
    return std::all_of(g.coords().begin(), g.coords().end(), [](auto x) { return x >= 0; });
  });
  std::string out;
  if (nonnegative) {
    for (const auto& g : gens) {
      if (!out.empty()) out += ", ";
      out += serialize_point(g, ideal.dim());
    }
    return out;
  }
  out = "[";
  for (const auto& g : gens) {
    if (out.size() > 1) out += ",";
    out += "[";
    for (std::size_t i = 0; i < g.dim(); ++i) out += (i ? "," : "") + std::to_string(g[i]);
    out += "]";
  }
  return out + "]";
}

Json json_integer(const BigInt& n) {
  static const BigInt kLimit = BigInt(1) << 53;
  if (n < kLimit && n > -kLimit) return Json(static_cast<std::int64_t>(n));
  return Json(n.str());
}

Json error_json(const LechError& err) {
  Json out;
  out["error"] = std::string(error_kind_name(err.kind()));
  out["message"] = err.what();
  if (err.position()) out["position"] = *err.position();
  return out;
}

TGradedSpec parse_tgraded(const Json& doc) {
  if (!doc.is_object()) fail(ErrorKind::InvalidConfig, "T-graded spec must be a JSON object");
  reject_unknown_keys(doc, {"base", "components", "K", "generators"}, "T-graded spec");
  if (!doc.contains("base") || !doc["base"].is_string()) fail(ErrorKind::InvalidConfig, "missing string key 'base'");
  const Ring base = parse_ring_spec(doc["base"].get<std::string>());

  std::optional<std::vector<TGenerator>> generators;
  if (doc.contains("generators")) {
    std::vector<TGenerator> gens;
    for (const auto& g : json_points(doc["generators"], base->dim() + 1)) {
      ExponentVector a(base->dim());
      for (std::size_t i = 0; i < base->dim(); ++i) a[i] = g[i];
      gens.push_back({a, g[base->dim()]});
    }
    generators = std::move(gens);
  }

  if (!doc.contains("components")) {
    if (!generators) fail(ErrorKind::InvalidConfig, "T-graded spec needs 'components' or 'generators'");
    auto ideal = t_ideal_from_generators(base, *generators);
    if (doc.contains("K") && get_or<std::size_t>(doc, "K", 0) != ideal.k()) {
      fail(ErrorKind::InvalidConfig, "'K' disagrees with the generators");
    }
    return {std::move(ideal), std::move(generators)};
  }
  const Json& comps = doc["components"];
  if (!comps.is_array()) fail(ErrorKind::InvalidConfig, "'components' must be a list");
  std::vector<MonomialIdeal> components;
  for (const auto& c : comps) {
    if (c.is_string()) components.push_back(parse_ideal(c.get<std::string>(), base));
    else components.emplace_back(base, json_points(c, base->dim()));
  }
  if (doc.contains("K") && get_or<std::size_t>(doc, "K", 0) != components.size()) {
    fail(ErrorKind::InvalidConfig, "'K' must equal the number of components");
  }
  return {TGradedIdeal(base, std::move(components)), std::move(generators)};
}

TGradedSpec load_tgraded(const std::string& path) { return parse_tgraded(read_json_file(path)); }

std::vector<BoundKind> parse_bound_list(std::string_view text) {
  std::vector<BoundKind> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string name = trim(text.substr(start, end - start));
    if (!name.empty()) {
      auto kind = parse_bound_name(name);
      if (!kind) fail(ErrorKind::InvalidConfig, "unknown bound '" + name + "'");
      if (std::find(out.begin(), out.end(), *kind) == out.end()) out.push_back(*kind);
    }
    start = end + 1;
  }
  if (out.empty()) fail(ErrorKind::InvalidConfig, "empty bound list");
  return out;
}

std::vector<std::uint64_t> parse_uint_list(std::string_view text) {
  std::vector<std::uint64_t> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string item = trim(text.substr(start, end - start));
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size()) {
      throw LechError(ErrorKind::SyntaxError, "expected a natural number, got '" + item + "'", start);
    }
    out.push_back(value);
    start = end + 1;
  }
  return out;
}

RunConfig parse_run_config(const Json& doc) {
  if (!doc.is_object()) fail(ErrorKind::InvalidConfig, "config must be a JSON object");
  reject_unknown_keys(doc, {"ring", "n_max", "seed", "enumeration", "bounds", "format", "output", "jobs"}, "config");
  RunConfig config;
  if (!doc.contains("ring")) fail(ErrorKind::InvalidConfig, "config needs 'ring'");
  config.ring = parse_ring_spec(get_or<std::string>(doc, "ring", ""));
  config.n_max = get_or<unsigned>(doc, "n_max", 0);
  config.seed = get_or<std::uint64_t>(doc, "seed", 1);
  config.jobs = std::max(1u, get_or<unsigned>(doc, "jobs", 1));
  config.output = get_or<std::string>(doc, "output", "");

  const auto format = get_or<std::string>(doc, "format", "json");
  if (format == "json") config.format = OutputFormat::Json;
  else if (format == "csv") config.format = OutputFormat::Csv;
  else fail(ErrorKind::InvalidConfig, "format must be json or csv");

  if (doc.contains("bounds")) {
    const Json& b = doc["bounds"];
    if (b.is_string()) {
      config.bounds = parse_bound_list(b.get<std::string>());
    } else if (b.is_array()) {
      std::string joined;
      for (const auto& name : b) {
        if (!name.is_string()) fail(ErrorKind::InvalidConfig, "bound names must be strings");
        joined += name.get<std::string>() + ",";
      }
      config.bounds = parse_bound_list(joined);
    } else {
      fail(ErrorKind::InvalidConfig, "'bounds' must be a list or comma-separated string");
    }
  }

  auto& e = config.enumeration;
  e.ambient = config.ring;
  e.seed = config.seed;
  const Json en = doc.value("enumeration", Json::object());
  if (!en.is_object()) fail(ErrorKind::InvalidConfig, "'enumeration' must be an object");
  reject_unknown_keys(en, {"mode", "max_colength", "max_generators", "max_degree", "count", "filter"}, "enumeration");
  const auto mode = get_or<std::string>(en, "mode", "by_colength");
  if (mode == "by_colength") e.mode = EnumerationMode::ByColength;
  else if (mode == "by_generators") e.mode = EnumerationMode::ByGenerators;
  else if (mode == "random") e.mode = EnumerationMode::Random;
  else fail(ErrorKind::InvalidConfig, "enumeration mode must be by_colength, by_generators or random");
  e.max_colength = get_or<std::uint64_t>(en, "max_colength", e.max_colength);
  e.max_generators = get_or<std::size_t>(en, "max_generators", e.max_generators);
  e.max_degree = get_or<std::int64_t>(en, "max_degree", e.max_degree);
  e.count = get_or<std::size_t>(en, "count", e.count);
  const auto filter = get_or<std::string>(en, "filter", "all");
  if (filter == "all") e.filter = EnumerationFilter::All;
  else if (filter == "closed") e.filter = EnumerationFilter::IntegrallyClosed;
  else fail(ErrorKind::InvalidConfig, "enumeration filter must be all or closed");
  return config;
}

RunConfig load_run_config(const std::string& path) { return parse_run_config(read_json_file(path)); }

void write_reports_csv(std::ostream& out, const std::vector<RatioReport>& reports) {
  out << "ideal,colength,mu,e,ratio_num,ratio_den,bound_name,bound_num,bound_den,hypothesis_met,satisfied\n";
  for (const auto& r : reports) {
    const std::string prefix = csv_quote(serialize_ideal(r.ideal)) + "," + std::to_string(r.inv.colength) + "," +
                               std::to_string(r.inv.mu) + "," + r.inv.e.str() + "," +
                               numerator(r.inv.ratio).str() + "," + denominator(r.inv.ratio).str() + ",";
    for (const auto& b : r.bounds) {
      out << prefix << bound_name(b.kind) << "," << numerator(b.value).str() << "," << denominator(b.value).str()
          << "," << (b.hypothesis_met ? "true" : "false") << "," << (b.satisfied ? "true" : "false") << "\n";
    }
  }
}

Json report_json(const RatioReport& r) {
  Json rows = Json::array();
  for (const auto& b : r.bounds) {
    Json row;
    row["ideal"] = serialize_ideal(r.ideal);
    row["colength"] = json_integer(r.inv.colength);
    row["mu"] = json_integer(r.inv.mu);
    row["e"] = json_integer(r.inv.e);
    row["ratio_num"] = json_integer(numerator(r.inv.ratio));
    row["ratio_den"] = json_integer(denominator(r.inv.ratio));
    row["bound_name"] = std::string(bound_name(b.kind));
    row["bound_num"] = json_integer(numerator(b.value));
    row["bound_den"] = json_integer(denominator(b.value));
    row["hypothesis_met"] = b.hypothesis_met;
    row["satisfied"] = b.satisfied;
    row["ratio"] = to_fraction_string(r.inv.ratio);
    row["bound"] = to_fraction_string(b.value);
    row["constant"] = to_fraction_string(b.constant);
    row["tight"] = b.tight;
    row["strict"] = b.strict;
    if (!b.note.empty()) row["note"] = b.note;
    rows.push_back(std::move(row));
  }
  return rows;
}

Json reports_json(const std::vector<RatioReport>& reports) {
  Json rows = Json::array();
  for (const auto& r : reports) {
    for (auto& row : report_json(r)) rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace lech::io
