#pragma once

// Identity and dual-path check suites on default grids. Each suite returns a
// table with one row per check and a boolean `pass` column.

#include <cmath>
#include <cstdint>
#include <exception>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gentrig/config.hpp"
#include "gentrig/gen_trig.hpp"
#include "gentrig/hyper_integrals.hpp"
#include "gentrig/quadrature.hpp"
#include "gentrig/table.hpp"
#include "gentrig/types.hpp"

namespace gentrig::checks {

inline constexpr double kIdentityTol = 1e-9;
inline constexpr double kLemmaTol = 1e-8;
inline constexpr double kConnectionTol = 1e-9;
inline constexpr double kConstantTol = 1e-10;

inline const std::vector<double>& default_exponents() {
  static const std::vector<double> v{1.3, 2.0, 3.0, 5.0};
  return v;
}

enum class Suite { Identities, Lemma1, Connections, Thm5, Cor5 };

inline std::optional<Suite> parse_suite(std::string_view s) {
  if (s == "identities") return Suite::Identities;
  if (s == "lemma1") return Suite::Lemma1;
  if (s == "connections") return Suite::Connections;
  if (s == "thm5") return Suite::Thm5;
  if (s == "cor5") return Suite::Cor5;
  return std::nullopt;
}

struct SuiteResult {
  io::Table table;
  std::size_t failures = 0;
  /// Human-readable description of each failing row.
  std::vector<std::string> failing;

  bool passed() const { return failures == 0; }
};

namespace detail {

inline std::string describe(const io::Table& t, const std::vector<io::Cell>& row) {
  std::string s;
  for (std::size_t i = 0; i < t.columns.size() && i < row.size(); ++i) {
    const std::string v = io::to_text(row[i]);
    if (v.empty()) continue;
    if (!s.empty()) s += ' ';
    s += t.columns[i] + "=" + v;
  }
  return s;
}

inline void add_row(SuiteResult& r, std::vector<io::Cell> row, bool pass) {
  row.emplace_back(pass);
  if (!pass) {
    ++r.failures;
    r.failing.push_back(describe(r.table, row));
  }
  r.table.add(std::move(row));
}

inline io::Cell cell_or_empty(std::optional<double> v) {
  if (v) return *v;
  return std::monostate{};
}

}  // namespace detail

/// sin^q + cos^p = 1 over [-2 pi_pq, 2 pi_pq] and cosh^p - sinh^q = 1 on the
/// hyperbolic principal domain. Hyperbolic residuals are relative to
/// max(1, cosh^p).
inline SuiteResult identities(const EvalConfig& cfg = {}) {
  SuiteResult r;
  r.table.columns = {"identity", "p", "q", "y", "residual", "tolerance", "error", "pass"};
  for (double p : default_exponents()) {
    for (double q : default_exponents()) {
      const Params pr(p, q);
      const double period = 2.0 * half_pi_pq(pr);
      for (int k = 0; k <= 40; ++k) {
        const double y = -2.0 * period + 4.0 * period * k / 40.0;
        std::optional<double> res;
        std::string err;
        try {
          const SinCos sc = sincos_pq(pr, y, cfg);
          res = std::fabs(std::pow(std::fabs(sc.sin), q) + std::pow(std::fabs(sc.cos), p) - 1.0);
        } catch (const std::exception& e) {
          err = e.what();
        }
        detail::add_row(r, {std::string("sin^q+cos^p"), p, q, y, detail::cell_or_empty(res), kIdentityTol, err},
                        res && *res <= kIdentityTol);
      }
      const Bound hat = half_hat_pi_pq(pr);
      const double upper = hat.is_finite() ? 0.95 * hat.value() : 3.0;
      for (int k = 1; k <= 8; ++k) {
        const double y = upper * k / 8.0;
        std::optional<double> res;
        std::string err;
        try {
          const SinhCosh sc = sinhcosh_pq(pr, y, cfg);
          const double cp = std::pow(sc.cosh, p);
          res = std::fabs(cp - std::pow(sc.sinh, q) - 1.0) / std::max(1.0, cp);
        } catch (const std::exception& e) {
          err = e.what();
        }
        detail::add_row(r, {std::string("cosh^p-sinh^q"), p, q, y, detail::cell_or_empty(res), kIdentityTol, err},
                        res && *res <= kIdentityTol);
      }
    }
  }
  return r;
}

/// arccos and arccosh through their arcsin/arcsinh paths against quadrature
/// of the defining integrals.
inline SuiteResult lemma1(const EvalConfig& cfg = {}) {
  SuiteResult r;
  r.table.columns = {"function", "p", "q", "x", "value", "quadrature", "gap", "tolerance", "error", "pass"};
  const std::vector<double> xs_cos{0.05, 0.2, 0.35, 0.5, 0.65, 0.8, 0.95};
  const std::vector<double> xs_cosh{1.05, 1.2, 1.5, 2.0, 3.0, 5.0, 10.0};
  for (double p : default_exponents()) {
    for (double q : default_exponents()) {
      const Params pr(p, q);
      for (int which = 0; which < 2; ++which) {
        const FnKind kind = which == 0 ? FnKind::Arccos : FnKind::Arccosh;
        for (double x : which == 0 ? xs_cos : xs_cosh) {
          std::optional<double> value, quad, gap;
          std::string err;
          try {
            value = evaluate(kind, pr, x, cfg);
            quad = quad::defining_integral(kind, pr, x, hyper::kQuadTol).value;
            gap = std::fabs(*value - *quad);
          } catch (const std::exception& e) {
            err = e.what();
          }
          detail::add_row(r,
                          {std::string(to_string(kind)), p, q, x, detail::cell_or_empty(value),
                           detail::cell_or_empty(quad), detail::cell_or_empty(gap), kLemmaTol, err},
                          gap && *gap <= kLemmaTol);
        }
      }
    }
  }
  return r;
}

/// For p < q with r = pq/(pq + p - q): tam_pq = sinh_rq, tamh_pq = sin_rq and
/// pihat_pq = pi_rq. On every pair: 1 + tam^q = cos^{-p}, residual relative
/// to max(1, cos^{-p}).
inline SuiteResult connections(const EvalConfig& cfg = {}) {
  SuiteResult r;
  r.table.columns = {"relation", "p", "q", "y", "lhs", "rhs", "gap", "tolerance", "error", "pass"};
  auto run = [&](const std::string& name, double p, double q, double y, double tol, auto&& f) {
    std::optional<double> lhs, rhs, gap;
    std::string err;
    try {
      const auto [a, b, g] = f();
      lhs = a;
      rhs = b;
      gap = g;
    } catch (const std::exception& e) {
      err = e.what();
    }
    detail::add_row(r,
                    {name, p, q, y, detail::cell_or_empty(lhs), detail::cell_or_empty(rhs),
                     detail::cell_or_empty(gap), tol, err},
                    gap && *gap <= tol);
  };
  struct Triple {
    double lhs, rhs, gap;
  };
  for (double p : default_exponents()) {
    for (double q : default_exponents()) {
      const Params pr(p, q);
      const double half = half_pi_pq(pr);
      for (int k = 1; k <= 8; ++k) {
        const double y = 0.9 * half * k / 8.0;
        run("1+tam^q=cos^-p", p, q, y, kIdentityTol, [&] {
          const double t = tam_pq(pr, y, cfg);
          const double cp = std::pow(cos_pq(pr, y, cfg), -p);
          const double lhs = 1.0 + std::pow(t, q);
          return Triple{lhs, cp, std::fabs(lhs - cp) / std::max(1.0, cp)};
        });
      }
      if (!(p < q)) continue;
      const Params rq = *pr.connected();
      run("pihat_pq=pi_rq", p, q, 0.0, kConstantTol, [&] {
        const double a = half_hat_pi_pq(pr).value();
        const double b = half_pi_pq(rq);
        return Triple{a, b, std::fabs(a - b)};
      });
      const double hat = half_hat_pi_pq(pr).value();
      for (int k = 1; k <= 8; ++k) {
        const double y = 0.9 * half * k / 8.0;
        run("tam_pq=sinh_rq", p, q, y, kConnectionTol, [&] {
          const double a = tam_pq(pr, y, cfg);
          const double b = sinh_pq(rq, y, cfg);
          return Triple{a, b, std::fabs(a - b) / std::max(1.0, std::fabs(b))};
        });
      }
      for (int k = 1; k <= 8; ++k) {
        const double y = 0.9 * hat * k / 8.0;
        run("tamh_pq=sin_rq", p, q, y, kConnectionTol, [&] {
          const double a = tamh_pq(pr, y, cfg);
          const double b = sin_pq(rq, y, cfg);
          return Triple{a, b, std::fabs(a - b)};
        });
      }
    }
  }
  return r;
}

/// Closed form against quadrature for n seeded specs per family.
inline SuiteResult thm5(std::size_t n, std::uint64_t seed, const EvalConfig& cfg = {}) {
  using namespace hyper;
  SuiteResult r;
  r.table.columns = {"family", "p", "q", "alpha", "beta", "s", "closed_form", "quadrature",
                     "gap", "tolerance", "error", "pass"};
  for (Family fam : {Family::ArcsinInt, Family::ArccosInt, Family::ArcsinhInt, Family::ArccoshInt}) {
    const auto specs = admissible_specs(fam, n, seed);
    struct Outcome {
      std::optional<VerifiedValue> v;
      std::string err;
    };
    const auto outcomes = parallel_map(specs, [&](const IntegralSpec& s) {
      Outcome o;
      try {
        o.v = thm5_verify(s, cfg);
      } catch (const std::exception& e) {
        o.err = e.what();
      }
      return o;
    });
    for (std::size_t i = 0; i < specs.size(); ++i) {
      const IntegralSpec& s = specs[i];
      const Outcome& o = outcomes[i];
      std::vector<io::Cell> row{std::string(to_string(fam)), s.params.p(), s.params.q(), s.alpha, s.beta, s.s};
      if (o.v) {
        const double tol = dual_path_tolerance(s, o.v->closed_form);
        row.insert(row.end(), {o.v->closed_form, o.v->quadrature.value, o.v->abs_gap, tol, std::string()});
        detail::add_row(r, std::move(row), o.v->quadrature.converged && o.v->abs_gap <= tol);
      } else {
        row.insert(row.end(), {std::monostate{}, std::monostate{}, std::monostate{}, std::monostate{}, o.err});
        detail::add_row(r, std::move(row), false);
      }
    }
  }
  return r;
}

/// Direct-function integrals for n seeded cases per family, then the
/// difference identity sin^q(x) - sin^q(t) = cos^p(t) - cos^p(x).
inline SuiteResult cor5(std::size_t n, std::uint64_t seed, const EvalConfig& cfg = {}) {
  using namespace hyper;
  SuiteResult r;
  r.table.columns = {"check", "p", "q", "x", "t", "alpha", "beta", "lhs", "rhs",
                     "gap", "tolerance", "error", "pass"};
  for (Family fam : {Family::ArcsinInt, Family::ArccosInt, Family::ArcsinhInt, Family::ArccoshInt}) {
    const auto cases = corollary_cases(fam, n, seed, cfg);
    struct Outcome {
      std::optional<VerifiedValue> v;
      std::string err;
    };
    const auto outcomes = parallel_map(cases, [&](const CorollaryCase& c) {
      Outcome o;
      try {
        o.v = cor5_verify(c.family, c.params, c.x, c.alpha, c.beta, cfg);
      } catch (const std::exception& e) {
        o.err = e.what();
      }
      return o;
    });
    for (std::size_t i = 0; i < cases.size(); ++i) {
      const CorollaryCase& c = cases[i];
      const Outcome& o = outcomes[i];
      std::vector<io::Cell> row{std::string(to_string(fam)), c.params.p(), c.params.q(), c.x,
                                std::monostate{}, c.alpha, c.beta};
      if (o.v) {
        const double tol = kCorollaryTol * std::max(1.0, std::fabs(o.v->closed_form));
        row.insert(row.end(), {o.v->quadrature.value, o.v->closed_form, o.v->abs_gap, tol, std::string()});
        detail::add_row(r, std::move(row), o.v->quadrature.converged && o.v->abs_gap <= tol);
      } else {
        row.insert(row.end(), {std::monostate{}, std::monostate{}, std::monostate{}, std::monostate{}, o.err});
        detail::add_row(r, std::move(row), false);
      }
    }
  }
  for (double p : default_exponents()) {
    for (double q : default_exponents()) {
      const Params pr(p, q);
      const double half = half_pi_pq(pr);
      for (double fx : {0.2, 0.5, 0.8}) {
        for (double ft : {0.2, 0.5, 0.8}) {
          const double x = fx * half;
          const double t = ft * half;
          std::optional<double> gap;
          std::string err;
          try {
            gap = remark_identity_gap(pr, x, t, cfg);
          } catch (const std::exception& e) {
            err = e.what();
          }
          detail::add_row(r,
                          {std::string("remark"), p, q, x, t, std::monostate{}, std::monostate{},
                           std::monostate{}, std::monostate{}, detail::cell_or_empty(gap), kRemarkTol, err},
                          gap && *gap <= kRemarkTol);
        }
      }
    }
  }
  return r;
}

}  // namespace gentrig::checks
