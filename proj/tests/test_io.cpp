#include <fstream>
#include <sstream>

#include "doctest.h"
#include "selmer3/report.hpp"
#include "selmer3/table2.hpp"

using namespace selmer3;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<Table2Row> parse(const std::string& s) {
  std::istringstream in(s);
  return table2::parse_csv(in);
}

}  // namespace

TEST_CASE("bundled table round-trips byte for byte") {
  const std::string text = slurp(SELMER3_TABLE_PATH);
  REQUIRE_FALSE(text.empty());
  const auto rows = parse(text);
  CHECK(rows.size() == 42);
  CHECK(table2::render_csv(rows) == text);
  CHECK(table2::load_csv(SELMER3_TABLE_PATH) == rows);
}

TEST_CASE("csv edge cases") {
  CHECK(parse("").empty());
  CHECK(parse(std::string(table2::kHeader) + "\n").empty());
  const auto r = parse(std::string(table2::kHeader) + "\n79,131,,131,,2,2,0..2,2,4,2,10\n");
  REQUIRE(r.size() == 1);
  CHECK(r[0].S1.empty());
  CHECK(r[0].S2 == std::vector<std::string>{"131"});
  CHECK(r[0].r_is_interval);
  CHECK(r[0].r == RankInterval{0, 2});
}

TEST_CASE("parse errors carry line numbers") {
  const std::string h = std::string(table2::kHeader) + "\n";
  for (const std::string bad : {"79,131,,131,,2,2,0..2,2,4,2\n", "79,x,,131,,2,2,0..2,2,4,2,10\n",
                                "79,131,,131,,2,2,2..0,2,4,2,10\n", "79,131,,7c,,2,2,0,2,4,2,10\n"}) {
    try {
      parse(h + "137,143,2,11,4409,1,1,1,1,6,1,13\n" + bad);
      FAIL("no ParseError for " << bad);
    } catch (const ParseError& e) {
      CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
  }
  CHECK_THROWS_AS(parse("a,b\n"), ParseError);
  CHECK_THROWS_AS(table2::load_csv("/nonexistent/table.csv"), ParseError);
}

TEST_CASE("table check flags corrupted rows") {
  auto rows = table2::load_csv(SELMER3_TABLE_PATH);
  const auto clean = table2::check(rows, 2);
  int pass = 0, flagged = 0, fail = 0;
  for (const auto& c : clean) {
    pass += c.status == RowStatus::Pass;
    flagged += c.status == RowStatus::Flagged;
    fail += c.status == RowStatus::Fail;
  }
  CHECK(pass == 39);
  CHECK(flagged == 3);
  CHECK(fail == 0);
  for (std::size_t i = 0; i < rows.size(); ++i) CHECK(clean[i].expected == rows[i]);

  std::size_t idx = 0;
  while (clean[idx].status != RowStatus::Pass) ++idx;
  rows[idx].h12 += 1;
  const auto bad = table2::check({rows[idx]}, 1);
  REQUIRE(bad.size() == 1);
  CHECK(bad[0].status == RowStatus::Fail);
  REQUIRE(bad[0].diffs.size() == 1);
  CHECK(bad[0].diffs[0].rfind("h12:", 0) == 0);
}

TEST_CASE("report JSON round-trips") {
  for (auto [a, b] : std::vector<std::pair<i64, i64>>{{79, 131}, {137, 143}, {15, 21}, {4, 1}, {2230, 48}}) {
    const auto r = descent::analyze(a, b, RankInterval{0, 2});
    const auto j = report::to_json(r);
    CHECK(report::to_json(report::from_json(j)) == j);
    CHECK(report::json::parse(j.dump()) == j);
  }
  const auto j = report::to_json(descent::analyze(79, 131, RankInterval{0, 2}));
  CHECK(j["sl_psi"] == 2);
  CHECK(j["su_psi"] == 4);
  CHECK(j["sl3"] == 2);
  CHECK(j["su3"] == 10);
  CHECK(j["psi"]["upper"] == 4);
  CHECK_THROWS_AS(report::from_json(report::json::parse(R"({"params": 3})")), ParseError);
}

TEST_CASE("family and class group JSON") {
  const auto jm = report::to_json(families::biquadratic_family(5, 1)[0]);
  CHECK(jm["a"] == 80);
  CHECK(jm["j_invariant"] == "-37188567040/174587");
  const auto jg = report::to_json(*formclass::class_group(-3299));
  CHECK(jg["order"] == 27);
  CHECK(jg["three_rank"] == 2);
}
