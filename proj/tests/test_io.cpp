#include <doctest.h>

#include <sstream>

#include "lech/enumerate.hpp"
#include "lech/errors.hpp"
#include "lech/io.hpp"
#include "support/generators.hpp"

using namespace lech;

namespace {

Ring veronese() { return AmbientRing::semigroup({{2, 0}, {1, 1}, {0, 2}}); }

LechError error_of(auto&& f) {
  try {
    f();
  } catch (const LechError& e) {
    return e;
  }
  FAIL("expected an error");
  return LechError(ErrorKind::InvalidConfig, "");
}

std::vector<std::string> split_csv_row(const std::string& line) {
  std::vector<std::string> out;
  std::string cell;
  bool quoted = false;
  for (char c : line) {
    if (c == '"') quoted = !quoted;
    else if (c == ',' && !quoted) {
      out.push_back(cell);
      cell.clear();
    } else {
      cell += c;
    }
  }
  out.push_back(cell);
  return out;
}

std::string json_scalar(const io::Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  return v.dump();
}

}  // namespace

TEST_CASE("parse worked examples") {
  auto r = AmbientRing::polynomial(2);
  CHECK(io::parse_ideal("x^3, x*y, y^3", r).generators() == std::vector<ExponentVector>{{3, 0}, {1, 1}, {0, 3}});
  CHECK(io::parse_ideal("x, y", r) == MonomialIdeal::maximal(r));
  CHECK(io::parse_ideal("x^2*y, y^3", r).generators() == std::vector<ExponentVector>{{2, 1}, {0, 3}});
  CHECK(io::parse_ideal("x*x*y^2", r).generators() == std::vector<ExponentVector>{{2, 2}});
  CHECK(io::parse_ideal("x1^2, x2", r) == io::parse_ideal("x^2, y", r));
  CHECK(io::parse_ideal("[[3,0],[1,1],[0,3]]", r) == io::parse_ideal("x^3,x*y,y^3", r));
  CHECK(io::parse_ideal("1", r).is_unit());
  CHECK(io::parse_ideal("0", r).is_zero());
  auto r5 = AmbientRing::polynomial(5);
  CHECK(io::parse_ideal("x5^2*x1", r5).generators().front() == ExponentVector{1, 0, 0, 0, 2});
}

TEST_CASE("parse errors carry kinds and positions") {
  auto r = AmbientRing::polynomial(2);
  auto e = error_of([&] { io::parse_ideal("x^3, x*", r); });
  CHECK(e.kind() == ErrorKind::SyntaxError);
  CHECK(e.position() == 7u);
  e = error_of([&] { io::parse_ideal("x^3, z", r); });
  CHECK(e.kind() == ErrorKind::UnknownVariable);
  CHECK(e.position() == 5u);
  CHECK(error_of([&] { io::parse_ideal("x^1000001", r); }).kind() == ErrorKind::ExponentOverflow);
  CHECK(error_of([&] { io::parse_ideal("x^99999999999999999999999", r); }).kind() == ErrorKind::ExponentOverflow);
  CHECK(error_of([&] { io::parse_ideal("x^600000*x^600000", r); }).kind() == ErrorKind::ExponentOverflow);
  CHECK(error_of([&] { io::parse_ideal("x^", r); }).kind() == ErrorKind::SyntaxError);
  CHECK(error_of([&] { io::parse_ideal("", r); }).kind() == ErrorKind::SyntaxError);
  CHECK(error_of([&] { io::parse_ideal("x y", r); }).kind() == ErrorKind::SyntaxError);
  CHECK(error_of([&] { io::parse_ideal("x3", r); }).kind() == ErrorKind::UnknownVariable);
  CHECK(error_of([&] { io::parse_ideal("[[1,0],[0", r); }).kind() == ErrorKind::SyntaxError);
  CHECK(error_of([&] { io::parse_ideal("x", veronese()); }).kind() == ErrorKind::InvalidGenerator);
}

TEST_CASE("ring specs") {
  CHECK(io::parse_ring_spec("poly:3")->dim() == 3);
  auto v = io::parse_ring_spec("semigroup:[[2,0],[1,1],[0,2]]");
  CHECK(v->lattice_covolume() == 2);
  CHECK(same_ring(io::parse_ring_spec(v->spec()), v));
  for (auto bad : {"poly:0", "poly:x", "ring:2", "semigroup:[[1,0],[0,2],[1,1]]", "semigroup:[[1,0]"}) {
    CAPTURE(bad);
    const auto kind = error_of([&] { io::parse_ring_spec(bad); }).kind();
    CHECK((kind == ErrorKind::InvalidRing || kind == ErrorKind::SyntaxError));
  }
}

TEST_CASE("serialization is canonical and round-trips") {
  auto r = AmbientRing::polynomial(2);
  CHECK(io::serialize_ideal(io::parse_ideal("y^3,x*y , x^3", r)) == "x^3, x*y, y^3");
  CHECK(io::serialize_ideal(MonomialIdeal::unit(r)) == "1");
  CHECK(io::serialize_ideal(MonomialIdeal::zero(r)) == "0");
  SplitMix64 rng(51);
  for (int trial = 0; trial < 100; ++trial) {
    auto ring = AmbientRing::polynomial(1 + rng.below(5));
    auto i = gen::poly_ideal(ring, rng);
    const auto text = io::serialize_ideal(i);
    CHECK(io::parse_ideal(text, ring) == i);
    CHECK(io::serialize_ideal(io::parse_ideal(text, ring)) == text);
  }
  auto rot = AmbientRing::semigroup({{1, 0}, {1, 1}, {1, -1}});
  MonomialIdeal neg(rot, {{2, -1}, {1, 1}, {3, 0}});
  const auto text = io::serialize_ideal(neg);
  CHECK(text.front() == '[');
  CHECK(io::parse_ideal(text, rot) == neg);
}

TEST_CASE("integers switch to strings at 2^53") {
  const BigInt limit = BigInt(1) << 53;
  CHECK(io::json_integer(limit - 1).is_number_integer());
  CHECK(io::json_integer(limit).is_string());
  CHECK(io::json_integer(limit).get<std::string>() == limit.str());
}

TEST_CASE("CSV and JSON carry the same numbers") {
  EnumerationSpec spec{AmbientRing::polynomial(2)};
  spec.max_colength = 6;
  std::vector<RatioReport> reports;
  for (const auto& i : enumerate_ideals(spec)) {
    reports.push_back(evaluate(i, {BoundKind::Lech, BoundKind::HanesC, BoundKind::Dim2MFull}, 1));
  }
  std::ostringstream csv;
  io::write_reports_csv(csv, reports);
  const auto rows = io::reports_json(reports);
  std::istringstream lines(csv.str());
  std::string line;
  std::getline(lines, line);
  const auto header = split_csv_row(line);
  CHECK(header.size() == 11);
  std::size_t n = 0;
  while (std::getline(lines, line)) {
    const auto cells = split_csv_row(line);
    REQUIRE(n < rows.size());
    for (std::size_t c = 0; c < header.size(); ++c) CHECK(cells[c] == json_scalar(rows[n][header[c]]));
    CHECK(rows[n]["ratio"] == cells[4] + "/" + cells[5]);
    ++n;
  }
  CHECK(n == rows.size());
  CHECK(n == reports.size() * 3);
}

TEST_CASE("T-graded spec files") {
  auto spec = io::parse_tgraded(io::Json::parse(R"({"base": "poly:1", "components": [[[2]], "x"], "K": 2})"));
  CHECK(spec.ideal.k() == 2);
  CHECK_FALSE(spec.generators);
  spec = io::parse_tgraded(io::Json::parse(R"({"base": "poly:1", "generators": [[2,0],[1,1],[0,2]]})"));
  CHECK(spec.ideal.k() == 2);
  REQUIRE(spec.generators);
  CHECK(spec.generators->size() == 3);
  CHECK(error_of([] { io::parse_tgraded(io::Json::parse(R"({"base": "poly:1", "components": [[[2]]], "K": 3})")); })
            .kind() == ErrorKind::InvalidConfig);
  CHECK(error_of([] { io::parse_tgraded(io::Json::parse(R"({"base": "poly:1", "components": [[[1]], [[2]]]})")); })
            .kind() == ErrorKind::InvalidChain);
}

TEST_CASE("run configs") {
  const auto config = io::parse_run_config(io::Json::parse(R"({
    "ring": "semigroup:[[2,0],[1,1],[0,2]]", "seed": 7, "jobs": 3, "format": "csv",
    "bounds": ["lech", "hanes"],
    "enumeration": {"mode": "random", "count": 12, "max_degree": 3, "filter": "closed"}})"));
  CHECK(config.ring->lattice_covolume() == 2);
  CHECK(config.enumeration.seed == 7);
  CHECK(config.enumeration.mode == EnumerationMode::Random);
  CHECK(config.enumeration.filter == EnumerationFilter::IntegrallyClosed);
  CHECK(config.bounds == std::vector<BoundKind>{BoundKind::Lech, BoundKind::HanesC});
  CHECK(config.format == io::OutputFormat::Csv);
  CHECK(config.jobs == 3);
  const auto defaults = io::parse_run_config(io::Json::parse(R"({"ring": "poly:2"})"));
  CHECK(defaults.enumeration.mode == EnumerationMode::ByColength);
  CHECK(defaults.bounds == std::vector<BoundKind>{BoundKind::Lech});
  CHECK(error_of([] { io::parse_run_config(io::Json::parse(R"({"ring": "poly:2", "colour": 1})")); }).kind() ==
        ErrorKind::InvalidConfig);
  CHECK(error_of([] { io::parse_run_config(io::Json::parse(R"({"ring": "poly:2", "seed": "x"})")); }).kind() ==
        ErrorKind::InvalidConfig);
}

TEST_CASE("list arguments") {
  CHECK(io::parse_uint_list("2,4, 8") == std::vector<std::uint64_t>{2, 4, 8});
  CHECK(io::parse_bound_list("lech,hanes,lech").size() == 2);
  CHECK(error_of([] { io::parse_bound_list("lech,bogus"); }).kind() == ErrorKind::InvalidConfig);
  CHECK(error_of([] { io::parse_uint_list("2,,4"); }).kind() == ErrorKind::SyntaxError);
}
