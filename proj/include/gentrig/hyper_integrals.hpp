#pragma once

// Closed-form integrals of the inverse functions against x^{-alpha}(1 -+ x^k)^{-beta}
// weights, the matching direct-function integrals, and quadrature cross-checks.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <future>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "gentrig/config.hpp"
#include "gentrig/error.hpp"
#include "gentrig/gen_trig.hpp"
#include "gentrig/quadrature.hpp"
#include "gentrig/special_core.hpp"
#include "gentrig/types.hpp"

namespace gentrig::hyper {

enum class Family { ArcsinInt, ArccosInt, ArcsinhInt, ArccoshInt };

inline constexpr std::string_view to_string(Family f) noexcept {
  switch (f) {
    case Family::ArcsinInt: return "arcsin";
    case Family::ArccosInt: return "arccos";
    case Family::ArcsinhInt: return "arcsinh";
    case Family::ArccoshInt: return "arccosh";
  }
  return "?";
}

inline std::optional<Family> parse_family(std::string_view name) {
  for (Family f : {Family::ArcsinInt, Family::ArccosInt, Family::ArcsinhInt, Family::ArccoshInt}) {
    if (to_string(f) == name) return f;
  }
  return std::nullopt;
}

inline constexpr double kDualPathTol = 1e-6;
inline constexpr double kSlowCornerTol = 1e-4;
inline constexpr double kCorollaryTol = 1e-5;
inline constexpr double kRemarkTol = 1e-10;
inline constexpr double kQuadTol = 1e-11;
// Distance from 1 below which a computed 3F2 argument is taken as exactly 1.
inline constexpr double kUnitSnap = 64.0 * std::numeric_limits<double>::epsilon();

/// One integral of the family:
///   arcsin:  int_0^1   arcsin(s x)  x^{-alpha} (1 - x^q)^{-beta} dx
///   arccos:  int_0^1   arccos(s x)  x^{-alpha} (1 - x^p)^{-beta} dx
///   arcsinh: int_0^inf arcsinh(s x) x^{alpha q - 1} (1 + x^q)^{-beta} dx
///   arccosh: int_1^inf arccosh(s x) x^{-alpha p} (x^p - 1)^{-beta} dx
struct IntegralSpec {
  Family family;
  Params params;
  double alpha;
  double beta;
  double s;

  void validate() const {
    const double p = params.p();
    const double q = params.q();
    auto fail = [&](const std::string& why) {
      throw DomainError("IntegralSpec(" + std::string(to_string(family)) + "): " + why);
    };
    if (!std::isfinite(alpha) || !std::isfinite(beta) || !std::isfinite(s)) fail("non-finite field");
    switch (family) {
      case Family::ArcsinInt:
        if (!(alpha < 2.0)) fail("requires alpha < 2");
        if (!(beta < 1.0)) fail("requires beta < 1");
        if (!(s >= 0.0 && s <= 1.0)) fail("requires 0 <= s <= 1");
        break;
      case Family::ArccosInt:
        if (!(alpha < 1.0)) fail("requires alpha < 1");
        if (!(beta < 1.0)) fail("requires beta < 1");
        if (!(s >= 0.0 && s <= 1.0)) fail("requires 0 <= s <= 1");
        break;
      case Family::ArcsinhInt:
        if (!(q * alpha > -1.0)) fail("requires q alpha > -1");
        if (!(q * (alpha - beta) - std::min(1.0, q / p) < -1.0)) {
          fail("requires q (alpha - beta) - min(1, q/p) < -1");
        }
        if (!(s >= 0.0 && s <= 1.0)) fail("requires 0 <= s <= 1");
        break;
      case Family::ArccoshInt:
        if (!(p < q)) fail("requires p < q");
        if (!(s >= 1.0)) fail("requires s >= 1");
        if (!(beta < 1.0)) fail("requires beta < 1");
        if (!((alpha + beta) * p > 1.0)) fail("requires (alpha + beta) p > 1");
        break;
    }
  }
};

struct VerifiedValue {
  double closed_form = 0.0;
  quad::QuadratureResult quadrature;
  double abs_gap = 0.0;
};

namespace detail {

inline double f32(double a1, double a2, double a3, double b1, double b2, double z,
                  const EvalConfig& cfg) {
  return special::hyper_3f2({{a1, a2, a3}, {b1, b2}, z}, cfg).value;
}

inline double f21(double a, double b, double c, double z, const EvalConfig& cfg) {
  return special::gauss_2f1(a, b, c, z, cfg).value;
}

/// Which 3F2 excess Sum b - Sum a decides convergence at unit argument.
inline double unit_excess(const IntegralSpec& spec) {
  const double p = spec.params.p();
  const double q = spec.params.q();
  switch (spec.family) {
    case Family::ArcsinInt:
    case Family::ArcsinhInt: return 2.0 - spec.beta - 1.0 / p;
    case Family::ArccosInt:
    case Family::ArccoshInt: return 1.0 - spec.beta + 1.0 / q;
  }
  return 0.0;
}

}  // namespace detail

/// True where the closed form sums a 3F2 at z = 1 with excess below 0.2.
inline bool slow_corner(const IntegralSpec& spec) {
  const bool unit = spec.s == 1.0;
  return unit && detail::unit_excess(spec) < 0.2;
}

/// Dual-path acceptance threshold for the spec at a given value.
inline double dual_path_tolerance(const IntegralSpec& spec, double value) {
  return (slow_corner(spec) ? kSlowCornerTol : kDualPathTol) * std::max(1.0, std::fabs(value));
}

// ---------------------------------------------------------------------------
// Closed forms
// ---------------------------------------------------------------------------

inline double thm5_closed_form(const IntegralSpec& spec, const EvalConfig& cfg = {}) {
  spec.validate();
  const double p = spec.params.p();
  const double q = spec.params.q();
  const double a = spec.alpha;
  const double b = spec.beta;
  const double s = spec.s;
  using special::beta;
  using special::beta_general;
  switch (spec.family) {
    case Family::ArcsinInt: {
      if (s == 0.0) return 0.0;
      const double c = (2.0 - a) / q;
      return s / q * beta(c, 1.0 - b) *
             detail::f32(1.0 / p, c, 1.0 / q, c + 1.0 - b, 1.0 / q + 1.0, std::pow(s, q), cfg);
    }
    case Family::ArccosInt: {
      const double constant = beta((p - 1.0) / p, 1.0 / q) * beta((1.0 - a) / p, 1.0 - b) / (p * q);
      if (s == 0.0) return constant;
      return constant - std::pow(s, p - 1.0) / (q * (p - 1.0)) * beta(1.0 - a / p, 1.0 - b) *
                            detail::f32(1.0 - 1.0 / q, 1.0 - a / p, (p - 1.0) / p, 2.0 - a / p - b,
                                        (2.0 * p - 1.0) / p, std::pow(s, p), cfg);
    }
    case Family::ArcsinhInt: {
      if (s == 0.0) return 0.0;
      const double z = std::pow(s, q);
      const double d = b - a;
      const double first = s / q * beta_general(a + 1.0 / q, d - 1.0 / q) *
                           detail::f32(1.0 / p, a + 1.0 / q, 1.0 / q, 1.0 / q - d + 1.0,
                                       1.0 / q + 1.0, z, cfg);
      const double second = std::pow(s, q * d) / (q * q * d) *
                            beta_general(1.0 / q - d, d + 1.0 / p - 1.0 / q) *
                            detail::f32(b, d + 1.0 / p - 1.0 / q, d, d - 1.0 / q + 1.0, d + 1.0, z,
                                        cfg);
      return first + second;
    }
    case Family::ArccoshInt: {
      const double constant =
          beta(1.0 / p - 1.0 / q, 1.0 / q) * beta(1.0 - b, b + a - 1.0 / p) / (p * q);
      return constant + std::pow(s, p / q - 1.0) / (p - q) * beta(b + a - 1.0 / q, 1.0 - b) *
                            detail::f32(1.0 - 1.0 / q, b + a - 1.0 / q, 1.0 / p - 1.0 / q,
                                        a + 1.0 - 1.0 / q, 1.0 / p - 1.0 / q + 1.0,
                                        std::pow(s, -p), cfg);
    }
  }
  return 0.0;
}

/// d/ds of the integral as the single 2F1 obtained by differentiating under
/// the integral sign.
inline double thm5_derivative(const IntegralSpec& spec, const EvalConfig& cfg = {}) {
  spec.validate();
  const double p = spec.params.p();
  const double q = spec.params.q();
  const double a = spec.alpha;
  const double b = spec.beta;
  const double s = spec.s;
  switch (spec.family) {
    case Family::ArcsinInt: {
      const double c = (2.0 - a) / q;
      return special::beta(c, 1.0 - b) / q * detail::f21(1.0 / p, c, c + 1.0 - b, std::pow(s, q), cfg);
    }
    case Family::ArccosInt:
      return -std::pow(s, p - 2.0) / q * special::beta(1.0 - a / p, 1.0 - b) *
             detail::f21(1.0 - 1.0 / q, 1.0 - a / p, 2.0 - a / p - b, std::pow(s, p), cfg);
    case Family::ArcsinhInt:
      return special::gamma_ratio({a + 1.0 / q, b - a + 1.0 / p - 1.0 / q}, {b + 1.0 / p}) / q *
             detail::f21(1.0 / p, a + 1.0 / q, b + 1.0 / p, -std::expm1(q * std::log(s)), cfg);
    case Family::ArccoshInt:
      return std::pow(s, p / q - 2.0) / q * special::beta(b + a - 1.0 / q, 1.0 - b) *
             detail::f21(1.0 - 1.0 / q, b + a - 1.0 / q, a + 1.0 - 1.0 / q, std::pow(s, -p), cfg);
  }
  return 0.0;
}

// ---------------------------------------------------------------------------
// Quadrature of the defining integrals
// ---------------------------------------------------------------------------

inline quad::QuadratureResult thm5_quadrature(const IntegralSpec& spec, const EvalConfig& cfg = {}) {
  spec.validate();
  using quad::SingularEnd;
  const Params& pr = spec.params;
  const double p = pr.p();
  const double q = pr.q();
  const double a = spec.alpha;
  const double b = spec.beta;
  const double s = spec.s;
  auto sum = [](const quad::QuadratureResult& x, const quad::QuadratureResult& y) {
    return quad::QuadratureResult{x.value + y.value, x.error_estimate + y.error_estimate,
                                  x.subdivisions + y.subdivisions, x.converged && y.converged};
  };
  if (s == 0.0 && (spec.family == Family::ArcsinInt || spec.family == Family::ArcsinhInt)) {
    return {0.0, 0.0, 0, true};
  }
  switch (spec.family) {
    case Family::ArcsinInt:
    case Family::ArccosInt: {
      const bool sine = spec.family == Family::ArcsinInt;
      const double k = sine ? q : p;
      auto inv = [&](double x) {
        const double u = std::min(1.0, s * x);
        return sine ? arcsin_pq(pr, u, cfg) : arccos_pq(pr, u, cfg);
      };
      auto lower = [&](double x) {
        return inv(x) * std::pow(x, -a) * std::pow(-std::expm1(k * std::log(x)), -b);
      };
      // 1 - x^k from the distance d = 1 - x.
      auto upper = [&](double x, double d) {
        return inv(x) * std::pow(x, -a) * std::pow(-std::expm1(k * std::log1p(-d)), -b);
      };
      const double lo_hint = std::min(0.0, sine ? 1.0 - a : -a);
      return sum(quad::integrate_singular(lower, 0.0, 0.5, SingularEnd::Lower, lo_hint, kQuadTol),
                 quad::integrate_singular(upper, 0.5, 1.0, SingularEnd::Upper, std::min(0.0, -b),
                                          kQuadTol));
    }
    case Family::ArcsinhInt: {
      auto near = [&](double x) {
        return arcsinh_pq(pr, s * x, cfg) * std::pow(x, a * q - 1.0) *
               std::pow(1.0 + std::pow(x, q), -b);
      };
      // x = 1/u on (1, inf): arcsinh(s/u) u^{q(beta - alpha) - 1} (1 + u^q)^{-beta}.
      auto far = [&](double u) {
        return arcsinh_pq(pr, s / u, cfg) * std::pow(u, q * (b - a) - 1.0) *
               std::pow(1.0 + std::pow(u, q), -b);
      };
      const double growth = p > q ? 1.0 - q / p : 0.0;
      const double far_hint = std::min(0.0, q * (b - a) - 1.0 - growth);
      return sum(quad::integrate_singular(near, 0.0, 1.0, SingularEnd::Lower,
                                          std::min(0.0, a * q), kQuadTol),
                 quad::integrate_singular(far, 0.0, 1.0, SingularEnd::Lower, far_hint, kQuadTol));
    }
    case Family::ArccoshInt: {
      auto near = [&](double x, double d) {
        return arccosh_pq(pr, s * x, cfg) * std::pow(x, -a * p) *
               std::pow(std::expm1(p * std::log1p(d)), -b);
      };
      // x = 1/u on (2, inf): arccosh(s/u) u^{p(alpha + beta) - 2} (1 - u^p)^{-beta}.
      auto far = [&](double u) {
        return arccosh_pq(pr, s / u, cfg) * std::pow(u, p * (a + b) - 2.0) *
               std::pow(-std::expm1(p * std::log(u)), -b);
      };
      return sum(quad::integrate_singular(near, 1.0, 2.0, SingularEnd::Lower, std::min(0.0, -b),
                                          kQuadTol),
                 quad::integrate_singular(far, 0.0, 0.5, SingularEnd::Lower,
                                          std::min(0.0, p * (a + b) - 2.0), kQuadTol));
    }
  }
  return {};
}

inline VerifiedValue thm5_verify(const IntegralSpec& spec, const EvalConfig& cfg = {}) {
  VerifiedValue out;
  out.closed_form = thm5_closed_form(spec, cfg);
  out.quadrature = thm5_quadrature(spec, cfg);
  out.abs_gap = std::fabs(out.closed_form - out.quadrature.value);
  return out;
}

// ---------------------------------------------------------------------------
// Direct-function integrals
//   arcsin:  int_0^x     t S^{-alpha} C (S^q(x) - S^q(t))^{-beta} dt,           S, C = sin, cos
//   arccos:  int_x^{h}   t S^{q-1} C^{2-p-alpha} (C^p(x) - C^p(t))^{-beta} dt,   h = pi_{p,q}/2
//   arcsinh: int_0^{H}   t Ch Sh^{alpha q - 1} (Sh^q(x) + Sh^q(t))^{-beta} dt,   H = pi-hat_{p,q}/2
//   arccosh: int_x^{H}   t Sh^{q-1} Ch^{2-p(alpha+1)} (Ch^p(t) - Ch^p(x))^{-beta} dt
// ---------------------------------------------------------------------------

/// Principal-domain check for the direct-function integral of a family.
inline void validate_corollary(Family family, const Params& params, double x, double alpha,
                               double beta) {
  const auto who = "cor5(" + std::string(to_string(family)) + "): ";
  if (!std::isfinite(x)) throw DomainError(who + "x must be finite");
  const double half = half_pi_pq(params);
  switch (family) {
    case Family::ArcsinInt:
      if (!(x > 0.0 && x <= half)) throw DomainError(who + "x must lie in (0, pi_{p,q}/2]");
      break;
    case Family::ArccosInt:
      if (!(x >= 0.0 && x < half)) throw DomainError(who + "x must lie in [0, pi_{p,q}/2)");
      break;
    case Family::ArcsinhInt: {
      if (!(params.p() < params.q())) throw DomainError(who + "requires p < q");
      if (!(x >= 0.0)) throw DomainError(who + "x must be nonnegative");
      if (!(sinh_pq(params, x) <= 1.0 + kUnitSnap)) {
        throw DomainError(who + "requires sinh_{p,q}(x) <= 1");
      }
      break;
    }
    case Family::ArccoshInt: {
      if (!(params.p() < params.q())) throw DomainError(who + "requires p < q");
      if (!(x >= 0.0 && half_hat_pi_pq(params).exceeds(x))) {
        throw DomainError(who + "x must lie in [0, pi-hat_{p,q}/2)");
      }
      break;
    }
  }
  // The convergence conditions are those of the underlying integral.
  const double s_stub = family == Family::ArccoshInt ? 1.0 : 0.5;
  IntegralSpec{family, params, alpha, beta, s_stub}.validate();
}

/// Closed form of the direct-function integral.
inline double cor5_closed_form(Family family, const Params& params, double x, double alpha,
                               double beta, const EvalConfig& cfg = {}) {
  validate_corollary(family, params, x, alpha, beta);
  const double p = params.p();
  const double q = params.q();
  const double a = alpha;
  const double b = beta;
  using special::beta;
  using special::beta_general;
  switch (family) {
    case Family::ArcsinInt: {
      const double s = sin_pq(params, x, cfg);
      const double c = (2.0 - a) / q;
      return special::beta(c, 1.0 - b) / q * std::pow(s, 2.0 - a - q * b) *
             detail::f32(1.0 / p, c, 1.0 / q, c + 1.0 - b, 1.0 / q + 1.0, std::pow(s, q), cfg);
    }
    case Family::ArccosInt: {
      const double c = cos_pq(params, x, cfg);
      const double b1 = special::beta((p - 1.0) / p, 1.0 / q);
      const double b2 = special::beta((1.0 - a) / p, 1.0 - b);
      const double b3 = special::beta(1.0 - a / p, 1.0 - b);
      return std::pow(c, 1.0 - a - p * b) * b1 * b2 / (q * q) -
             p * std::pow(c, p * (1.0 - b) - a) / (q * q * (p - 1.0)) * b3 *
                 detail::f32(1.0 - 1.0 / q, 1.0 - a / p, (p - 1.0) / p, 2.0 - a / p - b,
                             (2.0 * p - 1.0) / p, std::pow(c, p), cfg);
    }
    case Family::ArcsinhInt: {
      const double sh = sinh_pq(params, x, cfg);
      // x = arcsinh(1) comes back within rounding of the unit argument.
      double z = std::pow(sh, q);
      if (std::fabs(z - 1.0) <= kUnitSnap) z = 1.0;
      const double d = b - a;
      const double first =
          sh == 0.0 ? 0.0
                    : std::pow(sh, q * (a - b) + 1.0) / q * beta_general(a + 1.0 / q, d - 1.0 / q) *
                          detail::f32(1.0 / p, a + 1.0 / q, 1.0 / q, 1.0 / q - d + 1.0,
                                      1.0 / q + 1.0, z, cfg);
      const double second =
          beta_general(1.0 / q - d, d + 1.0 / p - 1.0 / q) / (q * q * d) *
          detail::f32(b, d + 1.0 / p - 1.0 / q, d, d - 1.0 / q + 1.0, d + 1.0, z, cfg);
      return first + second;
    }
    case Family::ArccoshInt: {
      const double ch = cosh_pq(params, x, cfg);
      return std::pow(ch, 1.0 - p * (a + b)) / (q * q) * special::beta(1.0 / p - 1.0 / q, 1.0 / q) *
                 special::beta(1.0 - b, b + a - 1.0 / p) +
             p / (q * (p - q)) * std::pow(ch, p / q - p * (a + b)) *
                 special::beta(b + a - 1.0 / q, 1.0 - b) *
                 detail::f32(1.0 - 1.0 / q, b + a - 1.0 / q, 1.0 / p - 1.0 / q, a + 1.0 - 1.0 / q,
                             1.0 / p - 1.0 / q + 1.0, std::pow(ch, -p), cfg);
    }
  }
  return 0.0;
}

namespace detail {

// Below this distance to a vanishing difference g(x) - g(t), the difference is
// taken as g'(midpoint) times the distance, exact to third order.
inline constexpr double kMidpointDistance = 1e-4;

struct LogState {
  double log_s;
  double log_c;
};

inline LogState log_state_sin(const Params& pr, double t, const EvalConfig& cfg) {
  const SinCos sc = sincos_pq(pr, t, cfg);
  return {std::log(sc.sin), std::log(sc.cos)};
}

inline LogState log_state_sin_from_half(const Params& pr, double d, const EvalConfig& cfg) {
  const SinCos sc = sincos_pq_from_half(pr, d, cfg);
  return {std::log(sc.sin), std::log(sc.cos)};
}

inline LogState log_state_hyp(const SinhCosh& sc, double p, double q) {
  // cosh^p = 1/v; sinh^q = (1 - v)/v once sinh may overflow.
  const double log_s = sc.v >= 0.5 ? std::log(sc.sinh) : (std::log1p(-sc.v) - sc.log_v) / q;
  return {log_s, -sc.log_v / p};
}

// log(e^x + e^y) without overflow.
inline double log_add(double x, double y) {
  const double m = std::max(x, y);
  if (std::isinf(m)) return m;
  return m + std::log1p(std::exp(std::min(x, y) - m));
}

}  // namespace detail

inline quad::QuadratureResult cor5_quadrature(Family family, const Params& pr, double x,
                                              double alpha, double beta,
                                              const EvalConfig& cfg = {}) {
  validate_corollary(family, pr, x, alpha, beta);
  using detail::LogState;
  using quad::SingularEnd;
  const double p = pr.p();
  const double q = pr.q();
  const double a = alpha;
  const double b = beta;
  auto sum = [](const quad::QuadratureResult& u, const quad::QuadratureResult& v) {
    return quad::QuadratureResult{u.value + v.value, u.error_estimate + v.error_estimate,
                                  u.subdivisions + v.subdivisions, u.converged && v.converged};
  };
  switch (family) {
    case Family::ArcsinInt: {
      const double half = half_pi_pq(pr);
      const bool full = x == half;
      const double sxq = std::pow(sin_pq(pr, x, cfg), q);
      auto body = [&](double t, const LogState& st, double log_diff) {
        return t * std::exp(-a * st.log_s + st.log_c - b * log_diff);
      };
      auto lower = [&](double t) {
        const LogState st = detail::log_state_sin(pr, t, cfg);
        return body(t, st, std::log(sxq - std::exp(q * st.log_s)));
      };
      auto upper = [&](double t, double d) {
        if (full) {
          // S^q(h) - S^q(t) = C^p(t).
          const LogState st = detail::log_state_sin_from_half(pr, d, cfg);
          return body(t, st, p * st.log_c);
        }
        const LogState st = detail::log_state_sin(pr, t, cfg);
        double log_diff;
        if (d < detail::kMidpointDistance * x) {
          const LogState m = detail::log_state_sin(pr, x - 0.5 * d, cfg);
          log_diff = std::log(q * d) + (q - 1.0) * m.log_s + m.log_c;
        } else {
          log_diff = std::log(sxq - std::exp(q * st.log_s));
        }
        return body(t, st, log_diff);
      };
      const double up_hint = full ? std::min(0.0, (1.0 - b * p) / (p - 1.0)) : std::min(0.0, -b);
      return sum(quad::integrate_singular(lower, 0.0, 0.5 * x, SingularEnd::Lower,
                                          std::min(0.0, 1.0 - a), kQuadTol),
                 quad::integrate_singular(upper, 0.5 * x, x, SingularEnd::Upper, up_hint, kQuadTol));
    }
    case Family::ArccosInt: {
      const double half = half_pi_pq(pr);
      const bool origin = x == 0.0;
      const double cxp = std::pow(cos_pq(pr, x, cfg), p);
      auto body = [&](double t, const LogState& st, double log_diff) {
        return t * std::exp((q - 1.0) * st.log_s + (2.0 - p - a) * st.log_c - b * log_diff);
      };
      auto lower = [&](double t, double d) {
        const LogState st = detail::log_state_sin(pr, t, cfg);
        double log_diff;
        if (origin) {
          log_diff = q * st.log_s;  // 1 - C^p(t) = S^q(t)
        } else if (d < detail::kMidpointDistance * std::max(x, half - x)) {
          const LogState m = detail::log_state_sin(pr, x + 0.5 * d, cfg);
          log_diff = std::log(q * d) + (q - 1.0) * m.log_s + m.log_c;
        } else {
          log_diff = std::log(cxp - std::exp(p * st.log_c));
        }
        return body(t, st, log_diff);
      };
      auto upper = [&](double t, double d) {
        const LogState st = detail::log_state_sin_from_half(pr, d, cfg);
        return body(t, st, std::log(cxp - std::exp(p * st.log_c)));
      };
      const double mid = 0.5 * (x + half);
      const double lo_hint = origin ? 0.0 : std::min(0.0, -b);
      const double up_hint = std::min(0.0, (2.0 - p - a) / (p - 1.0));
      return sum(quad::integrate_singular(lower, x, mid, SingularEnd::Lower, lo_hint, kQuadTol),
                 quad::integrate_singular(upper, mid, half, SingularEnd::Upper, up_hint, kQuadTol));
    }
    case Family::ArcsinhInt: {
      const double hh = half_hat_pi_pq(pr).value();
      const double log_sxq = x == 0.0 ? -std::numeric_limits<double>::infinity()
                                      : q * std::log(sinh_pq(pr, x, cfg));
      auto body = [&](double t, const LogState& st) {
        const double log_sum = detail::log_add(log_sxq, q * st.log_s);
        return t * std::exp(st.log_c + (a * q - 1.0) * st.log_s - b * log_sum);
      };
      auto lower = [&](double t) {
        return body(t, detail::log_state_hyp(sinhcosh_pq(pr, t, cfg), p, q));
      };
      auto upper = [&](double t, double d) {
        return body(t, detail::log_state_hyp(sinhcosh_pq_from_limit(pr, d, cfg), p, q));
      };
      const double kappa = p / (q - p);
      const double lo_hint = std::min(0.0, x == 0.0 ? q * (a - b) : a * q);
      const double up_hint = std::min(0.0, kappa * q * (b - a) - 1.0);
      return sum(quad::integrate_singular(lower, 0.0, 0.5 * hh, SingularEnd::Lower, lo_hint, kQuadTol),
                 quad::integrate_singular(upper, 0.5 * hh, hh, SingularEnd::Upper, up_hint,
                                          kQuadTol));
    }
    case Family::ArccoshInt: {
      const double hh = half_hat_pi_pq(pr).value();
      const bool origin = x == 0.0;
      const double chxp = std::pow(cosh_pq(pr, x, cfg), p);
      auto body = [&](double t, const LogState& st, double log_diff) {
        return t * std::exp((q - 1.0) * st.log_s + (2.0 - p * (a + 1.0)) * st.log_c - b * log_diff);
      };
      auto lower = [&](double t, double d) {
        const SinhCosh sc = sinhcosh_pq(pr, t, cfg);
        const LogState st = detail::log_state_hyp(sc, p, q);
        double log_diff;
        if (origin) {
          log_diff = q * st.log_s;  // Ch^p(t) - 1 = Sh^q(t)
        } else if (d < detail::kMidpointDistance * std::max(x, hh - x)) {
          const LogState m = detail::log_state_hyp(sinhcosh_pq(pr, x + 0.5 * d, cfg), p, q);
          log_diff = std::log(q * d) + (q - 1.0) * m.log_s + m.log_c;
        } else {
          log_diff = std::log(std::exp(p * st.log_c) - chxp);
        }
        return body(t, st, log_diff);
      };
      auto upper = [&](double t, double d) {
        const SinhCosh sc = sinhcosh_pq_from_limit(pr, d, cfg);
        const LogState st = detail::log_state_hyp(sc, p, q);
        // Ch^p(t) - Ch^p(x) = (1 - Ch^p(x) v)/v.
        return body(t, st, std::log1p(-chxp * sc.v) - sc.log_v);
      };
      const double mid = 0.5 * (x + hh);
      const double kappa = p / (q - p);
      const double lo_hint = origin ? 0.0 : std::min(0.0, -b);
      const double up_hint = std::min(0.0, kappa * (q * (a + b) + 1.0 - 2.0 * q / p));
      return sum(quad::integrate_singular(lower, x, mid, SingularEnd::Lower, lo_hint, kQuadTol),
                 quad::integrate_singular(upper, mid, hh, SingularEnd::Upper, up_hint, kQuadTol));
    }
  }
  return {};
}

inline VerifiedValue cor5_verify(Family family, const Params& params, double x, double alpha,
                                 double beta, const EvalConfig& cfg = {}) {
  VerifiedValue out;
  out.closed_form = cor5_closed_form(family, params, x, alpha, beta, cfg);
  out.quadrature = cor5_quadrature(family, params, x, alpha, beta, cfg);
  out.abs_gap = std::fabs(out.closed_form - out.quadrature.value);
  return out;
}

/// |sin^q(x) - sin^q(t) - (cos^p(t) - cos^p(x))|.
inline double remark_identity_gap(const Params& params, double x, double t, const EvalConfig& cfg = {}) {
  const SinCos a = sincos_pq(params, x, cfg);
  const SinCos b = sincos_pq(params, t, cfg);
  const double p = params.p();
  const double q = params.q();
  const double lhs = std::pow(std::fabs(a.sin), q) - std::pow(std::fabs(b.sin), q);
  const double rhs = std::pow(std::fabs(b.cos), p) - std::pow(std::fabs(a.cos), p);
  return std::fabs(lhs - rhs);
}

// ---------------------------------------------------------------------------
// Admissible pseudo-random specs
// ---------------------------------------------------------------------------

/// splitmix64 generator.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform on [0, 1).
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

 private:
  std::uint64_t state_;
};

/// One direct-function integral case.
struct CorollaryCase {
  Family family;
  Params params;
  double x;
  double alpha;
  double beta;
};

namespace detail {

inline double distance_to_integer(double v) { return std::fabs(v - std::nearbyint(v)); }

// Keeps clear of removable poles, where the closed form is a difference of
// large terms. `corollary` restricts to p < q and s <= 1 where needed.
inline IntegralSpec sample_spec(Family family, SplitMix64& rng, bool corollary) {
  for (;;) {
    const double beta = rng.uniform(-0.5, 0.7);
    const double unit_s = rng.uniform();
    switch (family) {
      case Family::ArcsinInt:
      case Family::ArccosInt: {
        const Params pr(rng.uniform(1.3, 4.0), rng.uniform(1.3, 4.0));
        const bool sine = family == Family::ArcsinInt;
        const double alpha = sine ? rng.uniform(-1.0, 1.6) : rng.uniform(-1.0, 0.8);
        const double s = unit_s < 0.25 ? 1.0 : rng.uniform(0.1, 0.95);
        return {family, pr, alpha, beta, s};
      }
      case Family::ArcsinhInt: {
        double p = rng.uniform(1.3, 4.0);
        double q = rng.uniform(1.3, 4.0);
        if (corollary && p > q) std::swap(p, q);
        if (std::fabs(p - q) < 0.1) continue;
        const Params pr(p, q);
        const double gap_min = (1.0 - std::min(1.0, q / p) + 0.1) / q;
        const double gap = rng.uniform(gap_min, gap_min + 1.0);
        if (distance_to_integer(gap - 1.0 / q) < 0.05) continue;
        // beta = alpha + gap <= 0.7 keeps the 3F2 excess at z = 1 above 0.3.
        const double alpha_lo = -1.0 / q + 0.1;
        const double alpha_hi = 0.7 - gap;
        if (!(alpha_hi > alpha_lo)) continue;
        const double alpha = rng.uniform(alpha_lo, alpha_hi);
        const double s = unit_s < 0.25 ? 1.0 : rng.uniform(0.1, 0.95);
        return {family, pr, alpha, alpha + gap, s};
      }
      case Family::ArccoshInt: {
        const double p = rng.uniform(1.3, 3.0);
        const double q = rng.uniform(p + 0.2, p + 2.5);
        const Params pr(p, q);
        const double alpha = (1.1 - beta * p) / p + rng.uniform(0.0, 1.2);
        const double s = unit_s < 0.25 ? 1.0 : rng.uniform(1.05, 3.0);
        return {family, pr, alpha, beta, s};
      }
    }
  }
}

inline double corollary_point(const IntegralSpec& spec, const EvalConfig& cfg) {
  switch (spec.family) {
    case Family::ArcsinInt: return arcsin_pq(spec.params, spec.s, cfg);
    case Family::ArccosInt: return arccos_pq(spec.params, spec.s, cfg);
    case Family::ArcsinhInt: return arcsinh_pq(spec.params, spec.s, cfg);
    case Family::ArccoshInt: return arccosh_pq(spec.params, spec.s, cfg);
  }
  return 0.0;
}

}  // namespace detail

/// n admissible specs of one family, reproducible from the seed.
inline std::vector<IntegralSpec> admissible_specs(Family family, std::size_t n, std::uint64_t seed) {
  SplitMix64 rng(seed ^ (0x51ed2701ULL * (static_cast<std::uint64_t>(family) + 1)));
  std::vector<IntegralSpec> out;
  out.reserve(n);
  while (out.size() < n) {
    IntegralSpec spec = detail::sample_spec(family, rng, false);
    spec.validate();
    out.push_back(spec);
  }
  return out;
}

/// n admissible direct-function cases; x is the inverse function at s.
inline std::vector<CorollaryCase> corollary_cases(Family family, std::size_t n, std::uint64_t seed,
                                                  const EvalConfig& cfg = {}) {
  SplitMix64 rng(seed ^ (0x7f4a7c15ULL * (static_cast<std::uint64_t>(family) + 1)));
  std::vector<CorollaryCase> out;
  out.reserve(n);
  while (out.size() < n) {
    const IntegralSpec spec = detail::sample_spec(family, rng, true);
    const double x = detail::corollary_point(spec, cfg);
    validate_corollary(family, spec.params, x, spec.alpha, spec.beta);
    out.push_back({family, spec.params, x, spec.alpha, spec.beta});
  }
  return out;
}

/// Applies fn to each item on a pool of threads, preserving order; the first
/// exception is rethrown.
template <class T, class Fn>
auto parallel_map(const std::vector<T>& items, Fn fn) {
  using R = decltype(fn(items.front()));
  std::vector<R> results(items.size());
  const std::size_t workers =
      std::max<std::size_t>(1, std::min<std::size_t>(items.size(), std::thread::hardware_concurrency()));
  std::vector<std::future<void>> tasks;
  tasks.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    tasks.push_back(std::async(std::launch::async, [&, w] {
      for (std::size_t i = w; i < items.size(); i += workers) results[i] = fn(items[i]);
    }));
  }
  for (auto& t : tasks) t.get();
  return results;
}

}  // namespace gentrig::hyper
