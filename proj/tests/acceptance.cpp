// Prints one PASS/FAIL line per acceptance criterion; exits nonzero if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "gentrig/gentrig.hpp"

using gentrig::FnKind;
using gentrig::Params;
namespace ga = gentrig::analysis;
namespace gh = gentrig::hyper;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

double rel(double a, double b) { return std::fabs(a - b) / std::max(1.0, std::fabs(b)); }

std::string num(double v) { return gentrig::io::format_double(v); }

Outcome classical_reduction() {
  const Params two(2.0, 2.0);
  double worst = 0.0;
  for (int i = 0; i < 50; ++i) {
    const double y = -7.0 + 14.0 * i / 49.0;
    const double yh = 3.0 * (i + 0.5) / 50.0;
    const double yt = 1.5 * (i + 0.5) / 50.0;
    worst = std::max({worst, std::fabs(gentrig::sin_pq(two, y) - std::sin(y)),
                      std::fabs(gentrig::cos_pq(two, y) - std::cos(y)),
                      rel(gentrig::sinh_pq(two, yh), std::sinh(yh)),
                      rel(gentrig::cosh_pq(two, yh), std::cosh(yh)),
                      rel(gentrig::tam_pq(two, yt), std::tan(yt)),
                      std::fabs(gentrig::tamh_pq(two, yh) - std::tanh(yh))});
  }
  const double pi_gap = std::fabs(2.0 * gentrig::half_pi_pq(two) - std::numbers::pi);
  return {worst <= 1e-10 && pi_gap <= 1e-12, "worst " + num(worst) + ", |pi_22 - pi| " + num(pi_gap)};
}

Outcome round_trip() {
  const FnKind directs[] = {FnKind::Sin, FnKind::Cos, FnKind::Sinh, FnKind::Cosh, FnKind::Tam, FnKind::Tamh};
  double worst = 0.0;
  std::size_t n = 0;
  for (double p : {1.2, 1.5, 2.0, 3.0, 5.0}) {
    for (double q : {1.2, 1.5, 2.0, 3.0, 5.0}) {
      const Params pq(p, q);
      for (FnKind kind : directs) {
        for (int i = 1; i <= 9; ++i) {
          // cosh takes values in [1, inf): the grid is shifted by one.
          const double x = 0.1 * i + (kind == FnKind::Cosh ? 1.0 : 0.0);
          const double y = gentrig::evaluate(gentrig::inverse_of(kind), pq, x);
          worst = std::max(worst, std::fabs(gentrig::evaluate(kind, pq, y) - x));
          ++n;
        }
      }
    }
  }
  return {worst <= 1e-9, std::to_string(n) + " points, worst gap " + num(worst)};
}

Outcome from_suite(const gentrig::checks::SuiteResult& r) {
  Outcome o{r.passed(), std::to_string(r.table.rows.size()) + " checks, " + std::to_string(r.failures) + " failed"};
  if (!r.failing.empty()) o.detail += "; first: " + r.failing.front();
  return o;
}

Outcome derivative_formulas() {
  const double h = 1e-5;
  double worst = 0.0;
  std::size_t n = 0;
  for (double p : {1.5, 2.5, 4.0}) {
    for (double q : {1.5, 2.5, 4.0}) {
      const Params pq(p, q);
      const double half = gentrig::half_pi_pq(pq);
      auto check = [&](FnKind k, double y) {
        const double fd = (gentrig::evaluate(k, pq, y + h) - gentrig::evaluate(k, pq, y - h)) / (2.0 * h);
        const double cf = gentrig::derivative_y(k, pq, y);
        worst = std::max(worst, std::fabs(cf - fd) / std::max(1.0, std::fabs(cf)));
        ++n;
      };
      for (FnKind k : {FnKind::Sin, FnKind::Cos, FnKind::Tam}) {
        for (double f : {0.2, 0.5, 0.8}) check(k, f * half);
      }
      for (FnKind k : {FnKind::Sinh, FnKind::Cosh, FnKind::Tamh}) {
        for (double y : {0.3, 0.6, 0.9}) check(k, y);
      }
    }
  }
  return {worst <= 1e-6, std::to_string(n) + " points, worst relative gap " + num(worst)};
}

ga::ScanGrid signed_grid() {
  ga::ScanGrid g;
  g.p_values = {1.3, 2.0, 3.0, 5.0};
  g.q_values = {1.3, 2.0, 3.0, 5.0};
  g.y_values = {0.1, 0.3, 0.5, 0.7, 0.9};
  return g;
}

Outcome monotonicity_signs() {
  struct Case {
    FnKind kind;
    ga::Axis axis;
    int sign;
  };
  const Case cases[] = {{FnKind::Sin, ga::Axis::P, 1},   {FnKind::Sin, ga::Axis::Q, 1},
                        {FnKind::Sinh, ga::Axis::P, -1}, {FnKind::Cosh, ga::Axis::P, -1},
                        {FnKind::Tamh, ga::Axis::P, -1}, {FnKind::Tam, ga::Axis::P, 1},
                        {FnKind::Tamh, ga::Axis::Q, 1}};
  std::size_t wrong = 0, total = 0;
  for (const auto& c : cases) {
    const auto r = ga::scan_monotonicity(c.kind, c.axis, signed_grid());
    for (const auto& pt : r.points) {
      ++total;
      if (!pt.ok || (pt.estimate > 0.0 ? 1 : -1) != c.sign) ++wrong;
    }
  }
  const double a = ga::param_derivative_closed_at_x(FnKind::Sinh, ga::Axis::Q, Params(5.0, 3.0), 1.3);
  const double b = ga::param_derivative_closed_at_x(FnKind::Sinh, ga::Axis::Q, Params(5.0, 5.0), 1.3);
  const bool sinh_flip = a < 0.0 && b > 0.0;
  bool reversal = false;
  const double qs[] = {1.5, 2.0, 2.5, 3.0};
  for (double qa : qs) {
    for (double qb : qs) {
      if (!(qa < qb)) continue;
      const bool lo = gentrig::cosh_pq(Params(1.7, qa), 0.88) < gentrig::cosh_pq(Params(1.7, qb), 0.88);
      const bool hi = gentrig::cosh_pq(Params(1.7, qa), 0.99) < gentrig::cosh_pq(Params(1.7, qb), 0.99);
      if (lo != hi) reversal = true;
    }
  }
  return {wrong == 0 && sinh_flip && reversal,
          std::to_string(total) + " signed points, " + std::to_string(wrong) + " wrong; d/dq sinh_{5,q}(1.3) at q=3: " +
              num(a) + ", q=5: " + num(b) + "; cosh ordering reversal " + (reversal ? "found" : "missing")};
}

struct ConvexityCase {
  const char* name;
  FnKind kind;
  ga::Axis axis;
  bool log_scale;
  bool conjugate;
  ga::Classification expected;
};

ga::ScanReport convexity_report(const ConvexityCase& c) {
  ga::ScanGrid g = signed_grid();
  if (c.conjugate) {
    g.p_values = {1.3, 1.6, 2.0, 2.5, 3.0, 4.0, 5.0};
    g.conjugate = true;
  }
  return ga::classify_convexity(c.kind, c.axis, g, c.log_scale);
}

const ConvexityCase kConvexityCases[] = {
    {"sin/p", FnKind::Sin, ga::Axis::P, false, false, ga::Classification::Concave},
    {"sin/q", FnKind::Sin, ga::Axis::Q, false, false, ga::Classification::Concave},
    {"sinh/p log", FnKind::Sinh, ga::Axis::P, true, false, ga::Classification::LogConvex},
    {"tamh(p',p) log", FnKind::Tamh, ga::Axis::P, true, true, ga::Classification::LogConcave},
};

Outcome convexity_certificates() {
  Outcome o;
  for (const auto& c : kConvexityCases) {
    const auto r = convexity_report(c);
    std::size_t wrong = 0;
    for (const auto& pt : r.points) {
      if (!pt.ok || !pt.certificate) {
        ++wrong;
        continue;
      }
      const auto cls = pt.certificate->classification;
      if (cls != c.expected && cls != ga::Classification::Indeterminate) ++wrong;
    }
    const double frac = r.points.empty() ? 1.0 : static_cast<double>(r.indeterminate) / r.points.size();
    if (wrong != 0 || frac >= 0.05) o.pass = false;
    if (!o.detail.empty()) o.detail += "; ";
    o.detail += std::string(c.name) + ": " + std::to_string(r.points.size()) + " points, " + std::to_string(wrong) +
                " wrong, indeterminate " + num(frac);
  }
  return o;
}

Outcome convexity_conditions() {
  std::size_t guaranteed = 0, wrong_sign = 0;
  for (double p : {1.3, 2.0, 3.0, 5.0}) {
    for (double q : {1.3, 2.0, 3.0, 5.0}) {
      const Params pq(p, q);
      for (double x : {0.1, 0.3, 0.5, 0.7, 0.9}) {
        for (int which : {1, 2, 3}) {
          ++guaranteed;
          if (ga::corollary_lhs(which, pq, x) < -ga::kConvexityNoise) ++wrong_sign;
        }
      }
    }
  }
  std::size_t disagreements = 0, compared = 0;
  const std::pair<FnKind, ga::Axis> plain[] = {{FnKind::Sin, ga::Axis::P}, {FnKind::Sin, ga::Axis::Q}};
  for (const auto& [k, a] : plain) {
    const auto r = ga::classify_convexity(k, a, signed_grid(), false);
    disagreements += r.disagreements;
    compared += r.points.size();
  }
  for (ga::Axis a : {ga::Axis::P, ga::Axis::Q}) {
    const auto r = ga::classify_convexity(FnKind::Sinh, a, signed_grid(), true);
    disagreements += r.disagreements;
    compared += r.points.size();
  }
  return {wrong_sign == 0 && disagreements == 0,
          std::to_string(guaranteed) + " guaranteed signs, " + std::to_string(wrong_sign) + " wrong; " +
              std::to_string(compared) + " classified points, " + std::to_string(disagreements) + " disagreements"};
}

Outcome inverse_integrals() {
  const auto suite = gentrig::checks::thm5(20, 7);
  Outcome o = from_suite(suite);
  double worst = 0.0;
  for (const auto& row : suite.table.rows) {
    if (const double* g = std::get_if<double>(&row[8])) {
      const double tol = std::get<double>(row[9]);
      worst = std::max(worst, *g / tol);
    }
  }
  const gh::IntegralSpec classical{gh::Family::ArcsinInt, Params(2.0, 2.0), 0.0, 0.0, 1.0};
  const double gap = std::fabs(gh::thm5_closed_form(classical) - (std::numbers::pi / 2.0 - 1.0));
  o.pass = o.pass && gap <= 1e-8;
  o.detail += ", worst gap/tolerance " + num(worst) + ", (2,2,0,0,1) gap " + num(gap);
  return o;
}

Outcome d1_inequality() {
  double largest = -std::numeric_limits<double>::infinity();
  for (double p : {1.2, 2.0, 4.0, 8.0}) {
    for (int k = 1; k <= 9; ++k) largest = std::max(largest, ga::theorem2_d1(p, 0.1 * k));
  }
  // |D1| shrinks monotonically to 0 along x = 1e-1, ..., 1e-6.
  bool decays = true;
  double at_min = 0.0;
  for (double p : {1.2, 2.0, 4.0, 8.0}) {
    double prev = std::numeric_limits<double>::infinity();
    for (double x = 1e-1; x > 5e-7; x /= 10.0) {
      const double v = std::fabs(ga::theorem2_d1(p, x));
      if (!(v < prev)) decays = false;
      prev = v;
    }
    at_min = std::max(at_min, prev);
  }
  return {largest < 0.0 && decays && at_min < 1e-10,
          "max D1 over interior grid " + num(largest) + ", max |D1(1e-6)| " + num(at_min) +
              (decays ? ", monotone decay to 0" : ", decay not monotone")};
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"AC1 classical reduction", classical_reduction},
      {"AC2 round-trip inversion", round_trip},
      {"AC3 Pythagorean identities", [] { return from_suite(gentrig::checks::identities()); }},
      {"AC4 arccos/arccosh paths vs quadrature", [] { return from_suite(gentrig::checks::lemma1()); }},
      {"AC5 connections", [] { return from_suite(gentrig::checks::connections()); }},
      {"AC6 derivative formulas", derivative_formulas},
      {"AC7 monotonicity signs and witnesses", monotonicity_signs},
      {"AC8 convexity certificates", convexity_certificates},
      {"AC9 corollary conditions", convexity_conditions},
      {"AC10 integrals of inverse functions", inverse_integrals},
      {"AC11 integrals of direct functions", [] { return from_suite(gentrig::checks::cor5(10, 7)); }},
      {"AC12 D1 inequality", d1_inequality},
  };
  int failed = 0;
  for (const auto& [name, fn] : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s %s: %s [%.2fs]\n", o.pass ? "PASS" : "FAIL", name, o.detail.c_str(), secs);
    if (!o.pass) ++failed;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(std::size(criteria)) - failed, std::size(criteria));
  return failed == 0 ? 0 : 1;
}
