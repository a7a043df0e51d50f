#pragma once

// Command-line front end: eval, table, check and scan.
//
// Exit codes: 0 success, 1 check failure, 2 usage error, 3 domain error,
// 4 convergence error, 5 I/O error.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <exception>
#include <fstream>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gentrig/checks.hpp"
#include "gentrig/config.hpp"
#include "gentrig/error.hpp"
#include "gentrig/gen_trig.hpp"
#include "gentrig/param_analysis.hpp"
#include "gentrig/quadrature.hpp"
#include "gentrig/table.hpp"
#include "gentrig/types.hpp"

namespace gentrig::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitDomain = 3;
inline constexpr int kExitConvergence = 4;
inline constexpr int kExitIo = 5;

class UsageError : public std::runtime_error {
 public:
  explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

namespace detail {

struct CommonOptions {
  std::string format = "csv";
  std::string output;
  std::optional<double> rel_tol;
  std::optional<double> abs_tol;
  std::optional<std::size_t> max_terms;
  std::optional<std::size_t> max_iters;
};

inline void add_common(CLI::App* cmd, CommonOptions& o) {
  cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"csv", "jsonl"}));
  cmd->add_option("--output,-o", o.output, "Write to FILE instead of standard output");
  cmd->add_option("--rel-tol", o.rel_tol, "Relative tolerance of series and root finders");
  cmd->add_option("--abs-tol", o.abs_tol, "Absolute residual target of root finders");
  cmd->add_option("--max-terms", o.max_terms, "Series term cap");
  cmd->add_option("--max-iters", o.max_iters, "Root-finder iteration cap");
}

inline EvalConfig make_config(const CommonOptions& o) {
  EvalConfig cfg = EvalConfig::from_environment();
  if (o.rel_tol) cfg.rel_tol = *o.rel_tol;
  if (o.abs_tol) cfg.abs_tol = *o.abs_tol;
  if (o.max_terms) cfg.max_terms = *o.max_terms;
  if (o.max_iters) cfg.max_iters = *o.max_iters;
  cfg.validate();
  return cfg;
}

inline io::Format make_format(const CommonOptions& o) { return *io::parse_format(o.format); }

inline FnKind make_kind(const std::string& name) {
  const auto k = parse_kind(name);
  if (!k) throw UsageError("unknown function kind: " + name);
  return *k;
}

/// Destination stream: the file named by --output, or `fallback`.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : path_(path), os_(&fallback) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path, std::ios::binary | std::ios::trunc);
      if (!*file_) throw IoError("cannot open output file: " + path);
      os_ = file_.get();
    }
  }

  std::ostream& stream() { return *os_; }

  void finish() {
    os_->flush();
    if (!*os_) throw IoError(path_.empty() ? "write to standard output failed" : "write failed: " + path_);
  }

 private:
  std::string path_;
  std::unique_ptr<std::ofstream> file_;
  std::ostream* os_;
};

inline void emit(const io::Table& t, const CommonOptions& o, std::ostream& out) {
  Sink sink(o.output, out);
  io::write_table(t, make_format(o), sink.stream());
  sink.finish();
}

inline std::string status_of(const std::exception_ptr& ep) {
  try {
    std::rethrow_exception(ep);
  } catch (const DomainError&) {
    return "domain_error";
  } catch (const ConvergenceError&) {
    return "convergence_error";
  } catch (const UnsupportedError&) {
    return "unsupported";
  } catch (...) {
    return "error";
  }
}

}  // namespace detail

// ---------------------------------------------------------------------------
// eval
// ---------------------------------------------------------------------------

struct EvalOptions {
  detail::CommonOptions common;
  std::string kind;
  double p = 0.0;
  double q = 0.0;
  std::optional<double> y;
  std::optional<double> x;
  bool inverse = false;
};

/// One row: value, derivative in the argument, and for inverse kinds the
/// defining integral by quadrature with its error estimate.
inline io::Table eval_table(const EvalOptions& o, const EvalConfig& cfg) {
  if (o.y.has_value() == o.x.has_value()) throw UsageError("eval: give exactly one of --y or --x");
  FnKind kind = detail::make_kind(o.kind);
  if (o.inverse) kind = inverse_of(kind);
  const double arg = o.y ? *o.y : *o.x;
  const Params params(o.p, o.q);
  const double value = evaluate(kind, params, arg, cfg);
  io::Cell derivative = std::monostate{};
  try {
    derivative = derivative_y(kind, params, arg, cfg);
  } catch (const DomainError&) {
  }
  io::Cell quadrature = std::monostate{};
  io::Cell quad_error = std::monostate{};
  if (is_inverse(kind) && std::isfinite(arg)) {
    const quad::QuadratureResult r = quad::defining_integral(kind, params, arg);
    quadrature = r.value;
    quad_error = r.error_estimate;
  }
  io::Table t;
  t.columns = {"kind", "p", "q", "arg", "value", "derivative", "quadrature", "quadrature_error"};
  t.add({std::string(to_string(kind)), o.p, o.q, arg, value, derivative, quadrature, quad_error});
  return t;
}

// ---------------------------------------------------------------------------
// table
// ---------------------------------------------------------------------------

struct TableOptions {
  detail::CommonOptions common;
  std::string kind;
  std::vector<double> p;
  std::vector<double> q;
  double from = 0.0;
  double to = 0.0;
  double step = 0.0;
};

/// Rows in lexicographic (p, q, arg) order with arg_i = from + i step.
/// Points where evaluation fails keep an empty value and a status.
inline io::Table table_table(const TableOptions& o, const EvalConfig& cfg) {
  if (!(o.step > 0.0) || !std::isfinite(o.step)) throw UsageError("table: --step must be positive");
  if (!std::isfinite(o.from) || !std::isfinite(o.to)) throw UsageError("table: range must be finite");
  const FnKind kind = detail::make_kind(o.kind);
  io::Table t;
  t.columns = {"kind", "p", "q", "arg", "value", "status"};
  const double span = (o.to - o.from) / o.step;
  const long long count = span < 0.0 ? 0 : static_cast<long long>(std::floor(span * (1.0 + 1e-12) + 1e-9)) + 1;
  for (double p : o.p) {
    for (double q : o.q) {
      const Params params(p, q);
      for (long long i = 0; i < count; ++i) {
        const double arg = o.from + static_cast<double>(i) * o.step;
        try {
          t.add({std::string(to_string(kind)), p, q, arg, evaluate(kind, params, arg, cfg), std::string("ok")});
        } catch (const std::exception&) {
          t.add({std::string(to_string(kind)), p, q, arg, std::monostate{},
                 detail::status_of(std::current_exception())});
        }
      }
    }
  }
  return t;
}

// ---------------------------------------------------------------------------
// check
// ---------------------------------------------------------------------------

struct CheckOptions {
  detail::CommonOptions common;
  std::string suite;
  std::size_t n = 0;
  std::uint64_t seed = 7;
};

inline checks::SuiteResult check_suite(const CheckOptions& o, const EvalConfig& cfg) {
  const auto suite = checks::parse_suite(o.suite);
  if (!suite) throw UsageError("unknown check suite: " + o.suite);
  switch (*suite) {
    case checks::Suite::Identities: return checks::identities(cfg);
    case checks::Suite::Lemma1: return checks::lemma1(cfg);
    case checks::Suite::Connections: return checks::connections(cfg);
    case checks::Suite::Thm5: return checks::thm5(o.n ? o.n : 20, o.seed, cfg);
    case checks::Suite::Cor5: return checks::cor5(o.n ? o.n : 10, o.seed, cfg);
  }
  throw UsageError("unknown check suite: " + o.suite);
}

// ---------------------------------------------------------------------------
// scan
// ---------------------------------------------------------------------------

struct ScanOptions {
  detail::CommonOptions common;
  std::string kind;
  std::string axis;
  std::vector<double> p;
  std::vector<double> q;
  std::vector<double> y;
  std::vector<double> x;
  bool convexity = false;
  bool log_scale = false;
  bool conjugate = false;
};

inline const std::vector<double>& default_scan_exponents() {
  static const std::vector<double> v{1.2, 1.5, 2.0, 3.0, 5.0};
  return v;
}

inline analysis::ScanReport scan_report(const ScanOptions& o, const EvalConfig& cfg) {
  const FnKind kind = detail::make_kind(o.kind);
  if (is_inverse(kind)) throw UsageError("scan: expects a direct function kind");
  const auto axis = analysis::parse_axis(o.axis);
  if (!axis) throw UsageError("scan: --axis must be p or q");
  if (!o.y.empty() && !o.x.empty()) throw UsageError("scan: give at most one of --y or --x");
  if (o.log_scale && !o.convexity) throw UsageError("scan: --log requires --convexity");
  analysis::ScanGrid grid;
  grid.p_values = o.p.empty() ? default_scan_exponents() : o.p;
  grid.q_values = o.q.empty() ? default_scan_exponents() : o.q;
  grid.conjugate = o.conjugate;
  if (!o.x.empty()) {
    grid.fixed_x = true;
    grid.y_values = o.x;
  } else if (!o.y.empty()) {
    grid.y_values = o.y;
  } else {
    grid.y_values = {0.3, 0.5, 0.7, 0.9};
  }
  return o.convexity ? analysis::classify_convexity(kind, *axis, grid, o.log_scale, cfg)
                     : analysis::scan_monotonicity(kind, *axis, grid, cfg);
}

inline io::Table scan_table(const analysis::ScanReport& r) {
  io::Table t;
  t.columns = {"kind", "axis", "p", "q", "y", "x", "estimate", "classification",
               "corollary_lhs", "d1", "d2", "ok", "error"};
  for (const auto& pt : r.points) {
    std::vector<io::Cell> row{std::string(to_string(r.kind)), std::string(analysis::to_string(r.axis)),
                              pt.point.p, pt.point.q, pt.point.y};
    if (r.grid.fixed_x) row.emplace_back(pt.x); else row.emplace_back(std::monostate{});
    if (pt.ok) row.emplace_back(pt.estimate); else row.emplace_back(std::monostate{});
    if (pt.certificate) {
      const auto& c = *pt.certificate;
      row.emplace_back(std::string(analysis::to_string(c.classification)));
      row.push_back(checks::detail::cell_or_empty(c.lhs_value));
      row.push_back(checks::detail::cell_or_empty(c.discriminant_d1));
      row.push_back(checks::detail::cell_or_empty(c.discriminant_d2));
    } else {
      row.insert(row.end(), {std::monostate{}, std::monostate{}, std::monostate{}, std::monostate{}});
    }
    row.emplace_back(pt.ok);
    row.emplace_back(pt.error);
    t.add(std::move(row));
  }
  return t;
}

inline std::string describe(const analysis::Counterexample& c, analysis::Axis axis) {
  auto pt = [&](const analysis::ParamPoint& p) {
    return "(p=" + io::format_double(p.p) + ", q=" + io::format_double(p.q) + ", y=" + io::format_double(p.y) + ")";
  };
  return std::string(analysis::to_string(axis)) + " " + pt(c.first) + " " + io::format_double(c.first_estimate) +
         " -> " + pt(c.second) + " " + io::format_double(c.second_estimate);
}

inline void write_scan(const analysis::ScanReport& r, io::Format f, std::ostream& os) {
  io::write_table(scan_table(r), f, os);
  std::vector<std::string> ces;
  for (const auto& c : r.counterexamples) ces.push_back(describe(c, r.axis));
  if (f == io::Format::Csv) {
    os << "# summary: " << r.summary() << '\n';
    for (const auto& c : ces) os << "# counterexample: " << c << '\n';
    return;
  }
  nlohmann::ordered_json s = nlohmann::ordered_json::object();
  s["record"] = "summary";
  s["summary"] = r.summary();
  s["counterexamples"] = ces;
  os << s.dump() << '\n';
}

// ---------------------------------------------------------------------------
// Entry point
// ---------------------------------------------------------------------------

/// Runs one command line (without the program name).
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generalized (p,q)-trigonometric functions", "gentrig"};
  app.require_subcommand(1);

  EvalOptions ev;
  auto* eval_cmd = app.add_subcommand("eval", "Evaluate one function at one point");
  eval_cmd->add_option("kind", ev.kind, "Function kind (sin, cos, ..., arctamh)")->required();
  eval_cmd->add_option("--p", ev.p, "Exponent p")->required();
  eval_cmd->add_option("--q", ev.q, "Exponent q")->required();
  eval_cmd->add_option("--y", ev.y, "Argument of a direct function");
  eval_cmd->add_option("--x", ev.x, "Argument of an inverse function");
  eval_cmd->add_flag("--inverse", ev.inverse, "Evaluate the inverse of KIND");
  detail::add_common(eval_cmd, ev.common);

  TableOptions tb;
  auto* table_cmd = app.add_subcommand("table", "Tabulate a function over a grid");
  table_cmd->add_option("kind", tb.kind, "Function kind")->required();
  table_cmd->add_option("--p", tb.p, "Exponents p")->required()->delimiter(',');
  table_cmd->add_option("--q", tb.q, "Exponents q")->required()->delimiter(',');
  table_cmd->add_option("--from", tb.from, "First argument");
  table_cmd->add_option("--to", tb.to, "Last argument")->required();
  table_cmd->add_option("--step", tb.step, "Argument step")->required();
  detail::add_common(table_cmd, tb.common);

  CheckOptions ck;
  auto* check_cmd = app.add_subcommand("check", "Run an identity or dual-path suite");
  check_cmd->add_option("suite", ck.suite, "identities, lemma1, connections, thm5 or cor5")->required();
  check_cmd->add_option("--n", ck.n, "Specs per family (thm5: 20, cor5: 10)");
  check_cmd->add_option("--seed", ck.seed, "Generator seed");
  detail::add_common(check_cmd, ck.common);

  ScanOptions sc;
  auto* scan_cmd = app.add_subcommand("scan", "Scan monotonicity or convexity in a parameter");
  scan_cmd->add_option("kind", sc.kind, "Direct function kind")->required();
  scan_cmd->add_option("--axis", sc.axis, "p or q")->required();
  scan_cmd->add_option("--p", sc.p, "Exponents p")->delimiter(',');
  scan_cmd->add_option("--q", sc.q, "Exponents q")->delimiter(',');
  scan_cmd->add_option("--y", sc.y, "Arguments")->delimiter(',');
  scan_cmd->add_option("--x", sc.x, "Function values; the argument is recovered per point")->delimiter(',');
  scan_cmd->add_flag("--convexity", sc.convexity, "Classify convexity instead of monotonicity");
  scan_cmd->add_flag("--log", sc.log_scale, "Classify log-convexity");
  scan_cmd->add_flag("--conjugate", sc.conjugate, "Use pairs (p', p)");
  detail::add_common(scan_cmd, sc.common);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (eval_cmd->parsed()) {
      detail::emit(eval_table(ev, detail::make_config(ev.common)), ev.common, out);
    } else if (table_cmd->parsed()) {
      detail::emit(table_table(tb, detail::make_config(tb.common)), tb.common, out);
    } else if (check_cmd->parsed()) {
      const checks::SuiteResult r = check_suite(ck, detail::make_config(ck.common));
      detail::emit(r.table, ck.common, out);
      for (const auto& f : r.failing) err << "FAIL " << f << '\n';
      if (!r.passed()) {
        err << r.failures << " of " << r.table.rows.size() << " checks failed\n";
        return kExitCheckFailed;
      }
    } else if (scan_cmd->parsed()) {
      const analysis::ScanReport r = scan_report(sc, detail::make_config(sc.common));
      detail::Sink sink(sc.common.output, out);
      write_scan(r, detail::make_format(sc.common), sink.stream());
      sink.finish();
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const UnsupportedError& e) {
    err << "domain error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const ConvergenceError& e) {
    err << "convergence error: " << e.what() << " (partial " << io::format_double(e.partial())
        << ", error estimate " << io::format_double(e.error_estimate()) << ")\n";
    return kExitConvergence;
  }
  return kExitOk;
}

}  // namespace gentrig::cli
