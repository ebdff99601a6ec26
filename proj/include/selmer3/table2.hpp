#pragma once

// The bundled reference table: CSV parsing and rendering, and the regression
// harness that recomputes every column from (a, b, r).

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "selmer3/descent.hpp"

namespace selmer3 {

struct Table2Row {
  i64 a = 0;
  i64 b = 0;
  std::vector<std::string> S1, S2, S3;  // prime labels
  i64 h12 = 0;
  i64 h13 = 0;
  RankInterval r;
  bool r_is_interval = false;  // "lo..hi" rather than a single value
  i64 sl_psi = 0;
  i64 su_psi = 0;
  i64 sl3 = 0;
  i64 su3 = 0;
  bool operator==(const Table2Row&) const = default;
};

enum class RowStatus { Pass, Fail, Flagged };
const char* row_status_name(RowStatus s);

struct RowCheck {
  Table2Row expected;
  std::optional<Table2Row> computed;  // empty when the computation threw
  RowStatus status = RowStatus::Fail;
  std::vector<std::string> diffs;     // "h12: expected 3, found 4"
  std::string note;                   // discrepancy reason or error text
};

struct KnownDiscrepancy {
  i64 a;
  i64 b;
  const char* reason;
};

namespace table2 {

extern const char* const kHeader;

/// Throws ParseError naming the offending line.
std::vector<Table2Row> parse_csv(std::istream& in);
std::vector<Table2Row> load_csv(const std::string& path);
std::string render_csv(const std::vector<Table2Row>& rows);

const std::vector<KnownDiscrepancy>& known_discrepancies();

/// Recomputes the columns of one row from (a, b, r).
Table2Row compute_row(i64 a, i64 b, const RankInterval& r, bool r_is_interval);

/// Checks every row; results are in input order. threads = 0 uses the
/// hardware concurrency.
std::vector<RowCheck> check(const std::vector<Table2Row>& rows, unsigned threads = 0);

}  // namespace table2
}  // namespace selmer3
