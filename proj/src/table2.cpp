#include "selmer3/table2.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <istream>
#include <sstream>
#include <thread>

namespace selmer3 {

const char* row_status_name(RowStatus s) {
  switch (s) {
    case RowStatus::Pass:
      return "PASS";
    case RowStatus::Fail:
      return "FAIL";
    case RowStatus::Flagged:
      return "FLAGGED";
  }
  return "FAIL";
}

namespace table2 {

const char* const kHeader = "a,b,S1,S2,S3,h12,h13,r,slpsi,supsi,sl3,su3";

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream ss(s);
  while (std::getline(ss, cur, sep)) out.push_back(cur);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

i64 parse_int(const std::string& s, const char* column, int line) {
  try {
    std::size_t pos = 0;
    const long long v = std::stoll(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::logic_error&) {
    throw ParseError("line " + std::to_string(line) + ": column " + column + ": not an integer: '" + s + "'");
  }
}

std::vector<std::string> parse_set(const std::string& s, int line) {
  std::vector<std::string> out;
  if (s.empty()) return out;
  for (const auto& lab : split(s, ';')) {
    try {
      eisenstein::parse_label(lab);
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(line) + ": " + e.what());
    }
    out.push_back(lab);
  }
  return out;
}

std::string join(const std::vector<std::string>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ";" : "") + v[i];
  return s;
}

std::string labels(const std::vector<SMember>& S) {
  std::vector<std::string> v;
  for (const auto& m : S) v.push_back(m.q.label());
  return join(v);
}

std::vector<std::string> canonical(const std::vector<std::string>& labs) {
  std::vector<KPrime> ps;
  for (const auto& l : labs) ps.push_back(eisenstein::parse_label(l));
  std::sort(ps.begin(), ps.end());
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(p.label());
  return out;
}

const KnownDiscrepancy* find_known(i64 a, i64 b) {
  for (const auto& k : known_discrepancies())
    if (k.a == a && k.b == b) return &k;
  return nullptr;
}

}  // namespace

std::vector<Table2Row> parse_csv(std::istream& in) {
  std::vector<Table2Row> rows;
  std::string text;
  int line = 0;
  bool header_seen = false;
  while (std::getline(in, text)) {
    ++line;
    if (!text.empty() && text.back() == '\r') text.pop_back();
    if (text.empty()) continue;
    if (!header_seen) {
      header_seen = true;
      if (text != kHeader) throw ParseError("line 1: unexpected header '" + text + "'");
      continue;
    }
    const auto f = split(text, ',');
    if (f.size() != 12)
      throw ParseError("line " + std::to_string(line) + ": expected 12 columns, found " + std::to_string(f.size()));
    Table2Row r;
    r.a = parse_int(f[0], "a", line);
    r.b = parse_int(f[1], "b", line);
    r.S1 = parse_set(f[2], line);
    r.S2 = parse_set(f[3], line);
    r.S3 = parse_set(f[4], line);
    r.h12 = parse_int(f[5], "h12", line);
    r.h13 = parse_int(f[6], "h13", line);
    const auto dots = f[7].find("..");
    if (dots == std::string::npos) {
      r.r.lo = r.r.hi = parse_int(f[7], "r", line);
    } else {
      r.r_is_interval = true;
      r.r.lo = parse_int(f[7].substr(0, dots), "r", line);
      r.r.hi = parse_int(f[7].substr(dots + 2), "r", line);
    }
    if (r.r.lo < 0 || r.r.lo > r.r.hi)
      throw ParseError("line " + std::to_string(line) + ": rank interval must satisfy 0 <= lo <= hi");
    r.sl_psi = parse_int(f[8], "slpsi", line);
    r.su_psi = parse_int(f[9], "supsi", line);
    r.sl3 = parse_int(f[10], "sl3", line);
    r.su3 = parse_int(f[11], "su3", line);
    for (i64 v : {r.h12, r.h13, r.sl_psi, r.su_psi, r.sl3, r.su3})
      if (v < 0) throw ParseError("line " + std::to_string(line) + ": negative bound");
    rows.push_back(std::move(r));
  }
  return rows;
}

std::vector<Table2Row> load_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return parse_csv(in);
}

std::string render_csv(const std::vector<Table2Row>& rows) {
  std::ostringstream out;
  out << kHeader << '\n';
  for (const auto& r : rows) {
    out << r.a << ',' << r.b << ',' << join(r.S1) << ',' << join(r.S2) << ',' << join(r.S3) << ','
        << r.h12 << ',' << r.h13 << ',';
    if (r.r_is_interval)
      out << r.r.lo << ".." << r.r.hi;
    else
      out << r.r.lo;
    out << ',' << r.sl_psi << ',' << r.su_psi << ',' << r.sl3 << ',' << r.su3 << '\n';
  }
  return out.str();
}

const std::vector<KnownDiscrepancy>& known_discrepancies() {
  static const std::vector<KnownDiscrepancy> k = {
      {43063, 7, "printed h = 4 with psi bounds (3,4) and s_u^3 = 9 do not follow from the bound formulas, which give (4,5) and 11"},
      {529987, 108,
       "printed h12 = 3; 728^2 - 529987 = -3 makes the prime above 3 principal in Q(sqrt 529987), so h12 = h13 = 4"},
      {137, 127,
       "printed s_u^3 = 12 implies a psi-hat upper bound of 7, above psi_upper + |S2| - |S3| + 1 = 5 from the "
       "exact relation; computed s_u^3 = 10"},
  };
  return k;
}

Table2Row compute_row(i64 a, i64 b, const RankInterval& r, bool r_is_interval) {
  const SelmerReport rep = descent::analyze(a, b, r);
  Table2Row row;
  row.a = a;
  row.b = b;
  row.S1 = split(labels(rep.ssets.S1), ';');
  row.S2 = split(labels(rep.ssets.S2), ';');
  row.S3 = split(labels(rep.ssets.S3), ';');
  for (auto* S : {&row.S1, &row.S2, &row.S3})
    if (S->size() == 1 && S->front().empty()) S->clear();
  row.h12 = rep.h12.value_or(-1);
  row.h13 = rep.h13.value_or(-1);
  row.r = r;
  row.r_is_interval = r_is_interval;
  row.sl_psi = rep.psi.lower;
  row.su_psi = rep.psi.upper.value_or(-1);
  row.sl3 = rep.sel3.lower;
  row.su3 = rep.sel3.upper.value_or(-1);
  return row;
}

std::vector<RowCheck> check(const std::vector<Table2Row>& rows, unsigned threads) {
  std::vector<RowCheck> out(rows.size());
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, std::max<std::size_t>(rows.size(), 1));
  std::atomic<std::size_t> next{0};

  auto work = [&] {
    for (std::size_t i = next++; i < rows.size(); i = next++) {
      const Table2Row& e = rows[i];
      RowCheck& c = out[i];
      c.expected = e;
      try {
        c.computed = compute_row(e.a, e.b, e.r, e.r_is_interval);
      } catch (const std::exception& ex) {
        c.status = RowStatus::Fail;
        c.note = ex.what();
        continue;
      }
      const Table2Row& g = *c.computed;
      auto cmp_set = [&](const char* name, const std::vector<std::string>& x, const std::vector<std::string>& y) {
        if (canonical(x) != canonical(y))
          c.diffs.push_back(std::string(name) + ": expected {" + join(x) + "}, found {" + join(y) + "}");
      };
      auto cmp = [&](const char* name, i64 x, i64 y) {
        if (x != y)
          c.diffs.push_back(std::string(name) + ": expected " + std::to_string(x) + ", found " + std::to_string(y));
      };
      cmp_set("S1", e.S1, g.S1);
      cmp_set("S2", e.S2, g.S2);
      cmp_set("S3", e.S3, g.S3);
      cmp("h12", e.h12, g.h12);
      cmp("h13", e.h13, g.h13);
      cmp("slpsi", e.sl_psi, g.sl_psi);
      cmp("supsi", e.su_psi, g.su_psi);
      cmp("sl3", e.sl3, g.sl3);
      cmp("su3", e.su3, g.su3);
      if (c.diffs.empty()) {
        c.status = RowStatus::Pass;
      } else if (const auto* k = find_known(e.a, e.b)) {
        c.status = RowStatus::Flagged;
        c.note = k->reason;
      } else {
        c.status = RowStatus::Fail;
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work);
  for (auto& t : pool) t.join();
  return out;
}

}  // namespace table2
}  // namespace selmer3
