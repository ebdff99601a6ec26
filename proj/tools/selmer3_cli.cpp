// selmer3 command-line tool. Talks to the library only through selmer3.h.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "selmer3/selmer3.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitDegenerate = 2;
constexpr int kExitOutOfRange = 3;
constexpr int kExitUsage = 64;
constexpr int kExitData = 65;

#ifndef SELMER3_DEFAULT_TABLE
#define SELMER3_DEFAULT_TABLE "data/table2.csv"
#endif

int exit_for(selmer3_status s) {
  switch (s) {
    case SELMER3_OK:
      return kExitOk;
    case SELMER3_E_DEGENERATE_CURVE:
      return kExitDegenerate;
    case SELMER3_E_OUT_OF_RANGE:
      return kExitOutOfRange;
    case SELMER3_E_INVALID_ARGUMENT:
    case SELMER3_E_PRECONDITION:
      return kExitUsage;
    case SELMER3_E_PARSE:
      return kExitData;
    default:
      return kExitFailure;
  }
}

int report_error(selmer3_status s) {
  std::cerr << "selmer3: " << selmer3_status_name(s) << ": " << selmer3_last_error() << "\n";
  return exit_for(s);
}

// Takes ownership of a library string.
std::string take(char* p) {
  std::string s = p ? p : "";
  selmer3_string_free(p);
  return s;
}

struct RankArg {
  std::int64_t lo = 0, hi = 0;
};

std::optional<RankArg> parse_rank(const std::string& text) {
  try {
    RankArg r;
    const auto dots = text.find("..");
    std::size_t pos = 0;
    if (dots == std::string::npos) {
      r.lo = r.hi = std::stoll(text, &pos);
      if (pos != text.size()) return std::nullopt;
    } else {
      const std::string lo = text.substr(0, dots), hi = text.substr(dots + 2);
      r.lo = std::stoll(lo, &pos);
      if (pos != lo.size()) return std::nullopt;
      r.hi = std::stoll(hi, &pos);
      if (pos != hi.size()) return std::nullopt;
    }
    if (r.lo < 0 || r.lo > r.hi) return std::nullopt;
    return r;
  } catch (const std::logic_error&) {
    return std::nullopt;
  }
}

int cmd_analyze(std::int64_t a, std::int64_t b, const std::string& rank_text, bool as_json) {
  std::optional<RankArg> rank;
  if (!rank_text.empty()) {
    rank = parse_rank(rank_text);
    if (!rank) {
      std::cerr << "selmer3: --rank expects N or LO..HI with 0 <= LO <= HI\n";
      return kExitUsage;
    }
  }
  selmer3_report* rep = nullptr;
  selmer3_status s = selmer3_analyze(a, b, rank ? 1 : 0, rank ? rank->lo : 0, rank ? rank->hi : 0, &rep);
  if (s != SELMER3_OK) return report_error(s);
  char* out = nullptr;
  s = as_json ? selmer3_report_json(rep, &out) : selmer3_report_text(rep, &out);
  selmer3_report_free(rep);
  if (s != SELMER3_OK) return report_error(s);
  std::cout << take(out) << (as_json ? "\n" : "");
  return kExitOk;
}

int cmd_table_check(const std::string& path, unsigned threads, bool as_json) {
  char* out = nullptr;
  const selmer3_status s = selmer3_table_check(path.c_str(), threads, &out);
  if (s != SELMER3_OK) return report_error(s);
  const auto j = nlohmann::json::parse(take(out));
  if (as_json) {
    std::cout << j.dump(2) << "\n";
  } else {
    for (const auto& row : j.at("rows")) {
      std::cout << row.at("status").get<std::string>() << " " << row.at("a") << "," << row.at("b") << "\n";
      for (const auto& d : row.at("diffs")) std::cout << "    " << d.get<std::string>() << "\n";
      const auto note = row.at("note").get<std::string>();
      if (!note.empty() && row.at("status") != "PASS") std::cout << "    note: " << note << "\n";
    }
    const auto& sm = j.at("summary");
    std::cout << sm.at("total") << " rows: " << sm.at("pass") << " PASS, " << sm.at("flagged") << " FLAGGED, "
              << sm.at("fail") << " FAIL\n";
  }
  return j.at("summary").at("fail").get<int>() == 0 ? kExitOk : kExitFailure;
}

int print_owned(selmer3_status s, char* out) {
  if (s != SELMER3_OK) return report_error(s);
  std::cout << take(out);
  return kExitOk;
}

int cmd_classgroup(std::int64_t D, bool as_json) {
  selmer3_classgroup* g = nullptr;
  selmer3_status s = selmer3_classgroup_new(D, &g);
  if (s != SELMER3_OK) return report_error(s);
  char* out = nullptr;
  s = selmer3_classgroup_json(g, &out);
  selmer3_classgroup_free(g);
  if (s != SELMER3_OK) return report_error(s);
  const auto j = nlohmann::json::parse(take(out));
  if (as_json) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "disc " << j.at("disc") << (j.at("narrow").get<bool>() ? " (narrow)" : "") << "\n"
              << "order " << j.at("order") << "\n"
              << "divisors " << j.at("divisors").dump() << "\n"
              << "3-rank " << j.at("three_rank") << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bounds on 3-isogeny and 3-Selmer ranks of y^2 = x^3 + a(x - b)^2 over Q(zeta_3)"};
  app.require_subcommand(1);
  app.set_version_flag("--version", selmer3_version());
  std::int64_t max_disc = 0;
  app.add_option("--max-disc", max_disc, "Largest |D| for class-group enumeration");

  int rc = kExitOk;

  auto* analyze = app.add_subcommand("analyze", "Analyze E_{a,b}");
  std::int64_t a = 0, b = 0;
  std::string rank_text;
  bool as_json = false;
  analyze->add_option("a", a)->required();
  analyze->add_option("b", b)->required();
  analyze->add_option("--rank", rank_text, "Mordell-Weil rank input: N or LO..HI");
  analyze->add_flag("--json", as_json, "JSON output");
  analyze->callback([&] { rc = cmd_analyze(a, b, rank_text, as_json); });

  auto* table = app.add_subcommand("table-check", "Recompute the reference table and diff");
  std::string path = SELMER3_DEFAULT_TABLE;
  unsigned threads = 0;
  table->add_option("path", path, "CSV file")->capture_default_str();
  table->add_option("--threads", threads, "Worker threads (0 = all cores)");
  table->add_flag("--json", as_json, "JSON output");
  table->callback([&] { rc = cmd_table_check(path, threads, as_json); });

  auto* family = app.add_subcommand("family", "Explicit curve families (JSON lines)");
  family->require_subcommand(1);
  auto* large = family->add_subcommand("large-rank", "b = 1, a = (p_1...p_{2n+1} - 27)/4");
  int n = 0, count = 1;
  large->add_option("--n", n)->required()->check(CLI::NonNegativeNumber);
  large->add_option("--count", count)->check(CLI::PositiveNumber);
  large->callback([&] {
    char* out = nullptr;
    const selmer3_status s = selmer3_family_large_rank(n, count, &out);
    rc = print_owned(s, out);
  });
  auto* biquad = family->add_subcommand("biquadratic", "E_{a,l} sharing K(sqrt a')");
  std::int64_t aprime = 0;
  biquad->add_option("--aprime", aprime)->required();
  biquad->add_option("--count", count)->check(CLI::PositiveNumber);
  biquad->callback([&] {
    char* out = nullptr;
    const selmer3_status s = selmer3_family_biquadratic(aprime, count, &out);
    rc = print_owned(s, out);
  });

  auto* density = app.add_subcommand("density", "Eligible-n density experiment");
  std::int64_t xmax = 0;
  density->add_option("--xmax", xmax)->required()->check(CLI::PositiveNumber);
  density->add_option("--threads", threads, "Worker threads (0 = all cores)");
  density->callback([&] {
    char* out = nullptr;
    const selmer3_status s = selmer3_density(xmax, threads, &out);
    rc = print_owned(s, out);
    if (s == SELMER3_OK) std::cout << "\n";
  });

  auto* cg = app.add_subcommand("classgroup", "Form class group of a fundamental discriminant");
  std::int64_t D = 0;
  cg->add_option("D", D)->required();
  cg->add_flag("--json", as_json, "JSON output");
  cg->callback([&] { rc = cmd_classgroup(D, as_json); });

  app.parse_complete_callback([&] {
    if (max_disc > 0) {
      const selmer3_status s = selmer3_set_max_disc(max_disc);
      if (s != SELMER3_OK) throw CLI::ValidationError("--max-disc", selmer3_last_error());
    }
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }
  return rc;
}
