#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "lech/enumerate.hpp"
#include "lech/errors.hpp"
#include "lech/inequalities.hpp"
#include "lech/monomial_ideal.hpp"
#include "lech/tgraded.hpp"

namespace lech::io {

using Json = nlohmann::ordered_json;

inline constexpr std::int64_t kMaxParsedExponent = 1'000'000;

/// "poly:d" or "semigroup:[[2,0],[1,1],[0,2]]".
Ring parse_ring_spec(std::string_view text);

/// Variable names for dimension d: x, y, z when d <= 3, else x1..xd.
std::vector<std::string> variable_names(std::size_t dim);

/// Either the monomial grammar
///   ideal := monomial (',' monomial)*, monomial := factor ('*' factor)* | '1'
///   factor := var ('^' natural)?
/// or an exponent list "[[3,0],[1,1]]". "0" is the zero ideal.
/// x1..xd names are accepted in every dimension.
MonomialIdeal parse_ideal(std::string_view text, const Ring& ring);

/// Canonical form: generators in descending lexicographic order, joined by
/// ", ". Monomial syntax when every coordinate is nonnegative, exponent-list
/// syntax otherwise.
std::string serialize_ideal(const MonomialIdeal& ideal);
std::string serialize_point(const ExponentVector& p, std::size_t dim);

/// JSON number when |n| < 2^53, decimal string otherwise.
Json json_integer(const BigInt& n);
Json error_json(const LechError& err);

struct TGradedSpec {
  TGradedIdeal ideal;
  std::optional<std::vector<TGenerator>> generators;
};

/// {"base": ring spec, "components": [[gens] or "expr", ...], "K": k,
///  "generators": optional [[base exponents..., t degree], ...]}
TGradedSpec parse_tgraded(const Json& doc);
TGradedSpec load_tgraded(const std::string& path);

enum class OutputFormat { Json, Csv };

struct RunConfig {
  Ring ring;
  unsigned n_max = 0;  // 0: default for the dimension
  std::uint64_t seed = 1;
  EnumerationSpec enumeration;
  std::vector<BoundKind> bounds{BoundKind::Lech};
  OutputFormat format = OutputFormat::Json;
  std::string output;  // empty: stdout
  unsigned jobs = 1;
};

/// Throws InvalidConfig naming the offending key.
RunConfig parse_run_config(const Json& doc);
RunConfig load_run_config(const std::string& path);

std::vector<BoundKind> parse_bound_list(std::string_view text);
std::vector<std::uint64_t> parse_uint_list(std::string_view text);

/// One row per (ideal, bound).
void write_reports_csv(std::ostream& out, const std::vector<RatioReport>& reports);
Json reports_json(const std::vector<RatioReport>& reports);
Json report_json(const RatioReport& report);

}  // namespace lech::io
