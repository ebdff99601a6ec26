#include "selmer3/selmer3.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <sstream>
#include <string>

#include "selmer3/descent.hpp"
#include "selmer3/families.hpp"
#include "selmer3/formclass.hpp"
#include "selmer3/report.hpp"
#include "selmer3/table2.hpp"

struct selmer3_report {
  selmer3::SelmerReport rep;
};

struct selmer3_classgroup {
  std::shared_ptr<const selmer3::formclass::ClassGroup> group;
};

namespace {

using namespace selmer3;

thread_local std::string g_last_error;

selmer3_status code_of(ErrorCode c) {
  switch (c) {
    case ErrorCode::kDegenerateCurve:
      return SELMER3_E_DEGENERATE_CURVE;
    case ErrorCode::kOutOfRange:
      return SELMER3_E_OUT_OF_RANGE;
    case ErrorCode::kDiscMismatch:
      return SELMER3_E_DISC_MISMATCH;
    case ErrorCode::kPreconditionViolated:
      return SELMER3_E_PRECONDITION;
    case ErrorCode::kUnfactorable:
      return SELMER3_E_UNFACTORABLE;
    case ErrorCode::kBadReductionPrime:
      return SELMER3_E_BAD_REDUCTION_PRIME;
    case ErrorCode::kParse:
      return SELMER3_E_PARSE;
    case ErrorCode::kInvalidArgument:
      return SELMER3_E_INVALID_ARGUMENT;
  }
  return SELMER3_E_INTERNAL;
}

template <class F>
selmer3_status guarded(F&& f) {
  try {
    g_last_error.clear();
    f();
    return SELMER3_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return code_of(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return SELMER3_E_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return SELMER3_E_INTERNAL;
  }
}

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

void require(const void* p, const char* what) {
  if (!p) throw InvalidArgument(std::string(what) + " must not be null");
}

std::string set_text(const std::vector<SMember>& S) {
  if (S.empty()) return "{}";
  std::string s = "{";
  for (std::size_t i = 0; i < S.size(); ++i) s += (i ? ", " : "") + S[i].q.label();
  return s + "}";
}

std::string bound_text(const Bounds& b) {
  return "[" + std::to_string(b.lower) + ", " + (b.upper ? std::to_string(*b.upper) : "?") + "]";
}

template <class T>
std::string opt_text(const std::optional<T>& v) {
  return v ? std::to_string(*v) : "n/a";
}

}  // namespace

extern "C" {

const char* selmer3_version(void) { return "1.0.0"; }

const char* selmer3_last_error(void) { return g_last_error.c_str(); }

const char* selmer3_status_name(selmer3_status s) {
  switch (s) {
    case SELMER3_OK:
      return "ok";
    case SELMER3_E_DEGENERATE_CURVE:
      return "degenerate curve";
    case SELMER3_E_OUT_OF_RANGE:
      return "out of range";
    case SELMER3_E_DISC_MISMATCH:
      return "discriminant mismatch";
    case SELMER3_E_PRECONDITION:
      return "precondition violated";
    case SELMER3_E_UNFACTORABLE:
      return "unfactorable";
    case SELMER3_E_BAD_REDUCTION_PRIME:
      return "bad reduction prime";
    case SELMER3_E_PARSE:
      return "parse error";
    case SELMER3_E_INVALID_ARGUMENT:
      return "invalid argument";
    case SELMER3_E_INTERNAL:
      return "internal error";
  }
  return "unknown status";
}

void selmer3_string_free(char* s) { std::free(s); }

selmer3_status selmer3_set_max_disc(int64_t bound) {
  return guarded([&] {
    if (bound < 0) throw InvalidArgument("bound must be nonnegative");
    formclass::set_max_disc(bound);
  });
}

selmer3_status selmer3_analyze(int64_t a, int64_t b, int has_rank, int64_t rank_lo, int64_t rank_hi,
                               selmer3_report** out) {
  return guarded([&] {
    require(out, "out");
    *out = nullptr;
    std::optional<RankInterval> rank;
    if (has_rank) rank = RankInterval{rank_lo, rank_hi};
    auto r = std::make_unique<selmer3_report>();
    r->rep = descent::analyze(a, b, rank);
    *out = r.release();
  });
}

void selmer3_report_free(selmer3_report* r) { delete r; }

selmer3_status selmer3_report_bounds(const selmer3_report* r, selmer3_bound_kind kind, selmer3_bounds* out) {
  return guarded([&] {
    require(r, "report");
    require(out, "out");
    const Bounds* b = nullptr;
    switch (kind) {
      case SELMER3_BOUND_PSI:
        b = &r->rep.psi;
        break;
      case SELMER3_BOUND_PSIHAT:
        b = &r->rep.psihat;
        break;
      case SELMER3_BOUND_SEL3:
        b = &r->rep.sel3;
        break;
      default:
        throw InvalidArgument("unknown bound kind");
    }
    out->lower = b->lower;
    out->has_upper = b->upper ? 1 : 0;
    out->upper = b->upper.value_or(0);
  });
}

selmer3_status selmer3_report_params(const selmer3_report* r, int64_t* a, int64_t* b) {
  return guarded([&] {
    require(r, "report");
    require(a, "a");
    require(b, "b");
    *a = r->rep.params.a;
    *b = r->rep.params.b;
  });
}

selmer3_status selmer3_report_root_number(const selmer3_report* r, int* out) {
  return guarded([&] {
    require(r, "report");
    require(out, "out");
    *out = r->rep.root_number.value_or(0);
  });
}

selmer3_status selmer3_report_json(const selmer3_report* r, char** json_out) {
  return guarded([&] {
    require(r, "report");
    require(json_out, "json_out");
    *json_out = dup(report::to_json(r->rep).dump(2));
  });
}

selmer3_status selmer3_report_text(const selmer3_report* r, char** text_out) {
  return guarded([&] {
    require(r, "report");
    require(text_out, "text_out");
    const SelmerReport& x = r->rep;
    std::ostringstream o;
    o << "curve        E_{" << x.params.a << "," << x.params.b << "}";
    if (x.params.scale != 1) o << "  (normalized from " << x.params.input_a << "," << x.params.input_b << ")";
    o << "\n";
    o << "d            " << x.params.d << "\n";
    o << "disc         " << x.params.disc.str() << "\n";
    o << "a in K*^2    " << (x.a_square_in_K ? "yes" : "no") << "\n";
    o << "S1 S2 S3     " << set_text(x.ssets.S1) << " " << set_text(x.ssets.S2) << " " << set_text(x.ssets.S3)
      << "\n";
    o << "h12 h13      " << opt_text(x.h12) << " " << opt_text(x.h13) << "\n";
    o << "|S(L)|       " << opt_text(x.sL12) << " " << opt_text(x.sL13) << "\n";
    o << "psi          " << bound_text(x.psi) << "\n";
    o << "psi-hat      " << bound_text(x.psihat) << "\n";
    o << "sel3         " << bound_text(x.sel3) << "\n";
    if (x.sel3_upper_loose) o << "sel3 (loose) " << *x.sel3_upper_loose << "\n";
    o << "root number  " << (x.root_number ? std::to_string(*x.root_number) : "n/a") << "\n";
    for (const auto& n : x.notes) o << "note         " << n << "\n";
    *text_out = dup(o.str());
  });
}

selmer3_status selmer3_table_check(const char* csv_path, unsigned threads, char** json_out) {
  return guarded([&] {
    require(csv_path, "csv_path");
    require(json_out, "json_out");
    const auto rows = table2::load_csv(csv_path);
    const auto checks = table2::check(rows, threads);
    report::json arr = report::json::array();
    int pass = 0, fail = 0, flagged = 0;
    for (const auto& c : checks) {
      report::json j{{"a", c.expected.a},
                     {"b", c.expected.b},
                     {"status", row_status_name(c.status)},
                     {"diffs", c.diffs},
                     {"note", c.note}};
      arr.push_back(j);
      if (c.status == RowStatus::Pass) ++pass;
      if (c.status == RowStatus::Fail) ++fail;
      if (c.status == RowStatus::Flagged) ++flagged;
    }
    report::json out{{"rows", arr},
                     {"summary", {{"total", checks.size()}, {"pass", pass}, {"fail", fail}, {"flagged", flagged}}}};
    *json_out = dup(out.dump(2));
  });
}

selmer3_status selmer3_family_large_rank(int n, int count, char** jsonl_out) {
  return guarded([&] {
    require(jsonl_out, "jsonl_out");
    std::string s;
    for (const auto& m : families::large_rank_family(n, count)) s += report::to_json(m).dump() + "\n";
    *jsonl_out = dup(s);
  });
}

selmer3_status selmer3_family_biquadratic(int64_t a_prime, int count, char** jsonl_out) {
  return guarded([&] {
    require(jsonl_out, "jsonl_out");
    std::string s;
    for (const auto& m : families::biquadratic_family(a_prime, count)) s += report::to_json(m).dump() + "\n";
    *jsonl_out = dup(s);
  });
}

selmer3_status selmer3_density(int64_t xmax, unsigned threads, char** json_out) {
  return guarded([&] {
    require(json_out, "json_out");
    *json_out = dup(report::to_json(families::density_experiment(xmax, threads)).dump(2));
  });
}

selmer3_status selmer3_classgroup_new(int64_t disc, selmer3_classgroup** out) {
  return guarded([&] {
    require(out, "out");
    *out = nullptr;
    if (!formclass::is_fundamental(disc)) throw InvalidArgument("not a fundamental discriminant");
    auto g = std::make_unique<selmer3_classgroup>();
    g->group = formclass::class_group(disc);
    *out = g.release();
  });
}

void selmer3_classgroup_free(selmer3_classgroup* g) { delete g; }

selmer3_status selmer3_classgroup_order(const selmer3_classgroup* g, int64_t* order) {
  return guarded([&] {
    require(g, "group");
    require(order, "order");
    *order = g->group->order();
  });
}

selmer3_status selmer3_classgroup_three_rank(const selmer3_classgroup* g, int* rank) {
  return guarded([&] {
    require(g, "group");
    require(rank, "rank");
    *rank = g->group->three_rank();
  });
}

selmer3_status selmer3_classgroup_json(const selmer3_classgroup* g, char** json_out) {
  return guarded([&] {
    require(g, "group");
    require(json_out, "json_out");
    *json_out = dup(report::to_json(*g->group).dump(2));
  });
}

}  // extern "C"
