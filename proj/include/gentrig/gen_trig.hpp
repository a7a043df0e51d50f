#pragma once

// Generalized (p,q)-trigonometric and hyperbolic functions.
//
// Every inverse function is an integral of one of two kernels,
//   compact:    int_0^x (1 - t^q)^{-a} dt   (arcsin a = 1/p, arctamh a = 1/r)
//   hyperbolic: int_0^x (1 + t^q)^{-a} dt   (arcsinh a = 1/p, arctam a = 1/r)
// evaluated from hypergeometric series near the origin and, past the point
// v = 1/2 (v = 1 - x^q or v = 1/(1 + x^q)), from an incomplete-beta segment in
// v, where the series would converge slowly. Direct functions invert these
// integrals by bracketed Newton iteration.

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <utility>

#include "gentrig/config.hpp"
#include "gentrig/error.hpp"
#include "gentrig/special_core.hpp"
#include "gentrig/types.hpp"

namespace gentrig {

/// pi_{p,q}/2 = (1/q) B(1/q, 1 - 1/p).
inline double half_pi_pq(const Params& params) {
  return special::beta(1.0 / params.q(), 1.0 - 1.0 / params.p()) / params.q();
}

/// pi-hat_{p,q}/2 = (1/q) B(1/p - 1/q, 1/q) when p < q, infinite otherwise.
inline Bound half_hat_pi_pq(const Params& params) {
  if (!(params.p() < params.q())) {
    return Bound::infinite();
  }
  const double q = params.q();
  return Bound::finite(special::beta(1.0 / params.p() - 1.0 / q, 1.0 / q) / q);
}

namespace detail {

inline constexpr double kEps = std::numeric_limits<double>::epsilon();
inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// One of the two inverse-function kernels, with its split values cached.
class InverseKernel {
 public:
  InverseKernel(double a, double q, bool compact, const EvalConfig& cfg)
      : a_(a), q_(q), compact_(compact), cfg_(cfg) {
    b_ = compact ? 1.0 - a : a - 1.0 / q;
    if (compact) {
      split_ = series_form(std::pow(0.5, 1.0 / q), 0.5);
    } else {
      split_ = series_form(1.0, 1.0);
      split5_ = pfaff_form(std::pow(4.0, 1.0 / q), 4.0);
    }
    if (b_ > 0.0) {
      limit_ = special::beta(b_, 1.0 / q) / q;
    }
  }

  double a() const noexcept { return a_; }
  double q() const noexcept { return q_; }
  bool compact() const noexcept { return compact_; }
  /// Exponent of v in the v-form integrand v^{b-1} (1 - v)^{1/q - 1}.
  double b() const noexcept { return b_; }
  /// Value at v = 1/2 (x^q = 1/2 compact, x = 1 hyperbolic).
  double split_value() const noexcept { return split_; }
  double split_x() const noexcept { return compact_ ? std::pow(0.5, 1.0 / q_) : 1.0; }
  /// Value as v -> 0 (x -> 1 compact, x -> infinity hyperbolic); infinite if divergent.
  double limit() const noexcept { return limit_; }

  double integrand(double x) const {
    return compact_ ? std::pow(-std::expm1(q_ * std::log(x)), -a_)
                    : std::pow(1.0 + std::pow(x, q_), -a_);
  }

  /// int_0^x of the kernel.
  double at_x(double x) const {
    if (x == 0.0) return 0.0;
    if (compact_) {
      if (x == 1.0) {
        if (!(b_ > 0.0)) throw DomainError("inverse kernel: integral diverges at x = 1");
        return limit_;
      }
      const double z = std::pow(x, q_);
      if (z <= 0.5) return series_form(x, z);
      return at_v(-std::expm1(q_ * std::log(x)));
    }
    if (std::isinf(x)) {
      if (!(b_ > 0.0)) throw DomainError("inverse kernel: integral diverges at infinity");
      return limit_;
    }
    const double log_z = q_ * std::log(x);
    if (log_z <= 0.0) return series_form(x, std::pow(x, q_));
    if (log_z <= std::log(4.0)) return pfaff_form(x, std::pow(x, q_));
    // v = 1 / (1 + e^{log_z}) without overflow.
    const double e = std::exp(-log_z);
    return at_v(e / (1.0 + e));
  }

  /// The integral expressed through v in (0, 1/2]; v = 0 gives the limit.
  double at_v(double v) const {
    if (v == 0.0) {
      if (!(b_ > 0.0)) throw DomainError("inverse kernel: integral diverges");
      return limit_;
    }
    if (compact_) {
      if (v >= 0.5) return split_;
      return split_ + special::beta_segment(b_, 1.0 / q_, v, 0.5, cfg_).value / q_;
    }
    if (v >= 0.2) {
      const double z = (1.0 - v) / v;
      const double x = std::pow(z, 1.0 / q_);
      return z <= 1.0 ? series_form(x, z) : pfaff_form(x, z);
    }
    return split5_ + special::beta_segment(b_, 1.0 / q_, v, 0.2, cfg_).value / q_;
  }

 private:
  // x 2F1(a, 1/q; 1 + 1/q; -+z), z = x^q.
  double series_form(double x, double z) const {
    const double arg = compact_ ? z : -z;
    return x * special::gauss_2f1(a_, 1.0 / q_, 1.0 + 1.0 / q_, arg, cfg_).value;
  }
  // Hyperbolic only: x (1+z)^{-a} 2F1(a, 1; 1 + 1/q; z/(1+z)).
  double pfaff_form(double x, double z) const {
    const double w = z / (1.0 + z);
    return x * std::pow(1.0 + z, -a_) *
           special::gauss_2f1(a_, 1.0, 1.0 + 1.0 / q_, w, cfg_).value;
  }

  double a_;
  double q_;
  bool compact_;
  EvalConfig cfg_;
  double b_;
  double split_ = 0.0;
  double split5_ = 0.0;
  double limit_ = kInf;
};

inline InverseKernel sin_kernel(const Params& pq, const EvalConfig& cfg) {
  return {1.0 / pq.p(), pq.q(), true, cfg};
}
inline InverseKernel sinh_kernel(const Params& pq, const EvalConfig& cfg) {
  return {1.0 / pq.p(), pq.q(), false, cfg};
}
inline InverseKernel tam_kernel(const Params& pq, const EvalConfig& cfg) {
  return {pq.tam_exponent(), pq.q(), false, cfg};
}
inline InverseKernel tamh_kernel(const Params& pq, const EvalConfig& cfg) {
  return {pq.tam_exponent(), pq.q(), true, cfg};
}

/// Root of an increasing function g on [lo, hi] with g(lo) <= 0 <= g(hi).
/// `step(u)` returns {g(u), g'(u)}. Newton steps leaving the bracket are
/// replaced by bisection.
template <class Step>
double bracketed_newton(Step&& step, double lo, double hi, double guess, double y,
                        const EvalConfig& cfg, const char* who) {
  double u = std::clamp(guess, lo, hi);
  double best_residual = kInf;
  double best_u = u;
  for (std::size_t it = 0; it < cfg.max_iters; ++it) {
    const auto [r, d] = step(u);
    if (std::fabs(r) < best_residual) {
      best_residual = std::fabs(r);
      best_u = u;
    }
    if (r == 0.0) break;
    if (r < 0.0) {
      lo = u;
    } else {
      hi = u;
    }
    double next = u - r / d;
    if (!std::isfinite(next) || !(next > lo && next < hi)) {
      next = 0.5 * (lo + hi);
    }
    const double scale = std::max(std::fabs(u), std::fabs(next));
    if (std::fabs(next - u) <= 4.0 * kEps * scale || hi - lo <= 4.0 * kEps * std::max(std::fabs(lo), std::fabs(hi))) {
      const auto [r_next, d_next] = step(next);
      (void)d_next;
      if (std::fabs(r_next) < best_residual) {
        best_residual = std::fabs(r_next);
        best_u = next;
      }
      break;
    }
    u = next;
  }
  const double tol = std::max(cfg.abs_tol, 16.0 * kEps * std::max(1.0, std::fabs(y)));
  if (!(best_residual <= tol)) {
    throw ConvergenceError(std::string(who) + ": inversion did not reach tolerance", best_u,
                           best_residual);
  }
  return best_u;
}

/// Point x with K(x) = y, carrying v so that 1 -+ x^q is known accurately.
struct KernelRoot {
  double x;
  double v;      // 1 - x^q (compact) or 1/(1 + x^q) (hyperbolic)
  double log_v;  // log v, finite even when v underflows
};

/// Solves int_0^x kernel = y for 0 <= y < limit.
inline KernelRoot invert_kernel(const InverseKernel& k, double y, const EvalConfig& cfg,
                                const char* who) {
  const double q = k.q();
  if (y == 0.0) return {0.0, 1.0, 0.0};
  const double y_half = k.split_value();
  if (y <= y_half) {
    const double x_half = k.split_x();
    auto step = [&](double x) { return std::pair{k.at_x(x) - y, k.integrand(x)}; };
    const double x = bracketed_newton(step, 0.0, x_half, std::min(y, x_half), y, cfg, who);
    const double log_x = std::log(x);
    const double v = k.compact() ? -std::expm1(q * log_x) : 1.0 / (1.0 + std::exp(q * log_x));
    return {x, v, std::log(v)};
  }
  const double b = k.b();
  auto finish = [&](double log_v) {
    const double v = std::exp(log_v);
    // x^q = (1 - v) (compact) or (1 - v)/v (hyperbolic).
    const double log_xq = k.compact() ? std::log1p(-v) : std::log1p(-v) - log_v;
    return KernelRoot{std::exp(log_xq / q), v, log_v};
  };
  // chi = (1 - v^b)/b (-log v when b = 0) satisfies dK/dchi = (1/q)(1 - v)^{1/q - 1},
  // which lies in [1/q, 2^{1-1/q}/q]; that bounds the root explicitly. For
  // b > 0, chi = 1/b is the finite limit v = 0.
  const double limit = k.limit();
  if (b > 0.0 && y >= limit) return finish(-kInf);
  auto log_v_of = [&](double chi) { return b == 0.0 ? -chi : std::log1p(-b * chi) / b; };
  const double chi_half = b == 0.0 ? std::log(2.0) : -std::expm1(-b * std::log(2.0)) / b;
  double chi_hi = chi_half + q * (y - y_half);
  if (b > 0.0) chi_hi = std::min(chi_hi, 1.0 / b);
  auto step = [&](double chi) {
    const double log_v = log_v_of(chi);
    const double v = std::exp(log_v);
    return std::pair{k.at_v(v) - y, std::pow(1.0 - v, 1.0 / q - 1.0) / q};
  };
  const double slope = 0.5 * (1.0 + std::pow(2.0, 1.0 - 1.0 / q)) / q;
  const double guess = chi_half + (y - y_half) / slope;
  const double chi = bracketed_newton(step, chi_half, chi_hi, guess, y, cfg, who);
  return finish(log_v_of(chi));
}

/// Solves limit - int_0^x kernel = d for d >= 0 when the limit is finite. The
/// tail equals (1/q) B_v(b, 1/q), so small d keeps full relative accuracy.
inline KernelRoot invert_kernel_tail(const InverseKernel& k, double d, const EvalConfig& cfg,
                                     const char* who) {
  const double q = k.q();
  const double b = k.b();
  if (!(b > 0.0)) throw DomainError(std::string(who) + ": no finite limit");
  auto finish = [&](double log_v) {
    const double v = std::exp(log_v);
    const double log_xq = k.compact() ? std::log1p(-v) : std::log1p(-v) - log_v;
    return KernelRoot{std::exp(log_xq / q), v, log_v};
  };
  if (!(d > 0.0)) return finish(-kInf);
  if (d >= k.limit() - k.split_value()) return invert_kernel(k, k.limit() - d, cfg, who);
  // w = v^b / b has dT/dw = (1/q)(1 - v)^{1/q - 1} in [1/q, 2^{1-1/q}/q].
  auto log_v_of = [&](double w) { return std::log(b * w) / b; };
  auto step = [&](double w) {
    const double v = std::exp(log_v_of(w));
    return std::pair{special::beta_segment(b, 1.0 / q, 0.0, v, cfg).value / q - d,
                     std::pow(1.0 - v, 1.0 / q - 1.0) / q};
  };
  const double w_hi = std::min(q * d, std::exp(-b * std::log(2.0)) / b);
  const double w = bracketed_newton(step, 0.0, w_hi, w_hi / std::pow(2.0, 1.0 - 1.0 / q), d, cfg, who);
  return finish(log_v_of(w));
}

inline void require_finite(double x, const char* who) {
  if (std::isnan(x)) throw DomainError(std::string(who) + ": argument is NaN");
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Inverse functions
// ---------------------------------------------------------------------------

/// arcsin_{p,q}(x) = int_0^x (1 - t^q)^{-1/p} dt on [0, 1].
inline double arcsin_pq(const Params& params, double x, const EvalConfig& cfg = {}) {
  if (!(x >= 0.0 && x <= 1.0)) throw DomainError("arcsin_pq: x must lie in [0, 1]");
  if (x == 1.0) return half_pi_pq(params);
  return detail::sin_kernel(params, cfg).at_x(x);
}

/// arccos_{p,q}(x) = int_x^1 (p/q)(1 - u^p)^{1/q - 1} u^{p-2} du, evaluated as
/// x^{p-1} (1 - x^p)^{1/q} 2F1(1, 1 + 1/q - 1/p; 1 + 1/q; 1 - x^p).
inline double arccos_pq(const Params& params, double x, const EvalConfig& cfg = {}) {
  if (!(x >= 0.0 && x <= 1.0)) throw DomainError("arccos_pq: x must lie in [0, 1]");
  const double p = params.p();
  const double q = params.q();
  if (x == 1.0) return 0.0;
  if (x == 0.0) return half_pi_pq(params);
  const double log_x = std::log(x);
  const double xp = std::exp(p * log_x);
  if (xp < 0.05) {
    // arccos(x) = arcsin((1 - x^p)^{1/q}), written as a complement so the
    // incomplete beta argument x^p stays small.
    return half_pi_pq(params) - special::incomplete_beta_2f1(xp, 1.0 - 1.0 / p, 1.0 / q, cfg) / q;
  }
  const double u = -std::expm1(p * log_x);
  const double f = special::gauss_2f1(1.0, params.tam_exponent(), 1.0 + 1.0 / q, u, cfg).value;
  return std::exp((p - 1.0) * log_x) * std::pow(u, 1.0 / q) * f;
}

/// arcsinh_{p,q}(x) = int_0^x (1 + t^q)^{-1/p} dt; x = +inf gives pi-hat/2 when p < q.
inline double arcsinh_pq(const Params& params, double x, const EvalConfig& cfg = {}) {
  detail::require_finite(x, "arcsinh_pq");
  if (!(x >= 0.0)) throw DomainError("arcsinh_pq: x must be nonnegative");
  if (std::isinf(x)) {
    const Bound h = half_hat_pi_pq(params);
    if (h.is_infinite()) throw DomainError("arcsinh_pq: unbounded at infinity when q <= p");
    return h.value();
  }
  return detail::sinh_kernel(params, cfg).at_x(x);
}

/// arccosh_{p,q}(x) = int_1^x (p/q)(u^p - 1)^{1/q - 1} u^{p-2} du, evaluated as
/// (1/x)(x^p - 1)^{1/q} 2F1(1, 1/p; 1 + 1/q; 1 - x^{-p}).
inline double arccosh_pq(const Params& params, double x, const EvalConfig& cfg = {}) {
  detail::require_finite(x, "arccosh_pq");
  if (!(x >= 1.0)) throw DomainError("arccosh_pq: x must be >= 1");
  const double p = params.p();
  const double q = params.q();
  if (x == 1.0) return 0.0;
  if (std::isinf(x)) return arcsinh_pq(params, x, cfg);
  const double log_x = std::log(x);
  const double u = -std::expm1(-p * log_x);
  if (u <= 0.9) {
    const double f = special::gauss_2f1(1.0, 1.0 / p, 1.0 + 1.0 / q, u, cfg).value;
    return std::pow(std::expm1(p * log_x), 1.0 / q) / x * f;
  }
  // arccosh(x) = arcsinh((x^p - 1)^{1/q}), whose v-variable is exactly x^{-p}.
  return detail::sinh_kernel(params, cfg).at_v(std::exp(-p * log_x));
}

/// arctam_{p,q}(x) = int_0^x (1 + t^q)^{-(1 + 1/q - 1/p)} dt; x = +inf gives pi_{p,q}/2.
inline double arctam_pq(const Params& params, double x, const EvalConfig& cfg = {}) {
  detail::require_finite(x, "arctam_pq");
  if (!(x >= 0.0)) throw DomainError("arctam_pq: x must be nonnegative");
  if (std::isinf(x)) return half_pi_pq(params);
  return detail::tam_kernel(params, cfg).at_x(x);
}

/// arctamh_{p,q}(x) = int_0^x (1 - t^q)^{-(1 + 1/q - 1/p)} dt on [0, 1); x = 1
/// is admitted when p < q and gives pi-hat/2.
inline double arctamh_pq(const Params& params, double x, const EvalConfig& cfg = {}) {
  if (!(x >= 0.0 && x <= 1.0)) throw DomainError("arctamh_pq: x must lie in [0, 1)");
  if (x == 1.0) {
    const Bound h = half_hat_pi_pq(params);
    if (h.is_infinite()) throw DomainError("arctamh_pq: unbounded at x = 1 when q <= p");
    return h.value();
  }
  return detail::tamh_kernel(params, cfg).at_x(x);
}

// ---------------------------------------------------------------------------
// Direct functions
// ---------------------------------------------------------------------------

/// sin and cos at one point, evaluated together.
struct SinCos {
  double sin;
  double cos;
};

/// sinh and cosh on the principal domain, with v = 1/(1 + sinh^q) = cosh^{-p}.
struct SinhCosh {
  double sinh;
  double cosh;
  double v;
  double log_v;  // finite even where v underflows near pi-hat/2
};

namespace detail {

// Principal interval [0, pi_{p,q}/2].
inline SinCos sincos_principal(const Params& params, double y, const EvalConfig& cfg) {
  const auto k = sin_kernel(params, cfg);
  const double half = half_pi_pq(params);
  if (y >= half) return {1.0, 0.0};
  const KernelRoot root = invert_kernel(k, y, cfg, "sin_pq");
  return {root.x, std::exp(root.log_v / params.p())};
}

}  // namespace detail

/// sin_{p,q} and cos_{p,q} on the whole real line. sin is odd, cos even; both
/// have period 2 pi_{p,q}, with sin(pi_{p,q} - y) = sin(y) and
/// cos(pi_{p,q} - y) = -cos(y).
inline SinCos sincos_pq(const Params& params, double y, const EvalConfig& cfg = {}) {
  if (!std::isfinite(y)) throw DomainError("sin_pq: argument must be finite");
  const double period_half = 2.0 * half_pi_pq(params);
  const double half = 0.5 * period_half;
  double t = std::fmod(std::fabs(y), 2.0 * period_half);
  double sign = 1.0;
  if (t > period_half) {
    t -= period_half;
    sign = -1.0;
  }
  SinCos sc{};
  if (t > half) {
    const SinCos r = detail::sincos_principal(params, period_half - t, cfg);
    sc = {r.sin, -r.cos};
  } else {
    sc = detail::sincos_principal(params, t, cfg);
  }
  sc.sin *= sign;
  sc.cos *= sign;
  if (y < 0.0) sc.sin = -sc.sin;
  return sc;
}

inline double sin_pq(const Params& params, double y, const EvalConfig& cfg = {}) {
  return sincos_pq(params, y, cfg).sin;
}

inline double cos_pq(const Params& params, double y, const EvalConfig& cfg = {}) {
  return sincos_pq(params, y, cfg).cos;
}

/// sinh_{p,q} and cosh_{p,q} on [0, pi-hat_{p,q}/2).
inline SinhCosh sinhcosh_pq(const Params& params, double y, const EvalConfig& cfg = {}) {
  detail::require_finite(y, "sinh_pq");
  if (!(y >= 0.0)) throw DomainError("sinh_pq: y must be nonnegative");
  if (!half_hat_pi_pq(params).exceeds(y)) {
    throw DomainError("sinh_pq: y must be below pi-hat_{p,q}/2");
  }
  const auto k = detail::sinh_kernel(params, cfg);
  const detail::KernelRoot root = detail::invert_kernel(k, y, cfg, "sinh_pq");
  return {root.x, std::exp(-root.log_v / params.p()), root.v, root.log_v};
}

/// sin and cos at y = pi_{p,q}/2 - d, 0 <= d <= pi_{p,q}/2. Keeps relative
/// accuracy in cos as d -> 0, where y itself would round.
inline SinCos sincos_pq_from_half(const Params& params, double d, const EvalConfig& cfg = {}) {
  detail::require_finite(d, "sin_pq");
  if (!(d >= 0.0) || !(d <= half_pi_pq(params))) {
    throw DomainError("sin_pq: distance from pi_{p,q}/2 must lie in [0, pi_{p,q}/2]");
  }
  const auto k = detail::sin_kernel(params, cfg);
  const detail::KernelRoot root = detail::invert_kernel_tail(k, d, cfg, "sin_pq");
  return {root.x, std::exp(root.log_v / params.p())};
}

/// sinh and cosh at y = pi-hat_{p,q}/2 - d (p < q), accurate as d -> 0.
inline SinhCosh sinhcosh_pq_from_limit(const Params& params, double d, const EvalConfig& cfg = {}) {
  detail::require_finite(d, "sinh_pq");
  const Bound h = half_hat_pi_pq(params);
  if (h.is_infinite()) throw DomainError("sinh_pq: pi-hat_{p,q}/2 is infinite when q <= p");
  if (!(d > 0.0) || !(d <= h.value())) {
    throw DomainError("sinh_pq: distance from pi-hat_{p,q}/2 must lie in (0, pi-hat_{p,q}/2]");
  }
  const auto k = detail::sinh_kernel(params, cfg);
  const detail::KernelRoot root = detail::invert_kernel_tail(k, d, cfg, "sinh_pq");
  return {root.x, std::exp(-root.log_v / params.p()), root.v, root.log_v};
}

inline double sinh_pq(const Params& params, double y, const EvalConfig& cfg = {}) {
  return sinhcosh_pq(params, y, cfg).sinh;
}

inline double cosh_pq(const Params& params, double y, const EvalConfig& cfg = {}) {
  return sinhcosh_pq(params, y, cfg).cosh;
}

/// tam_{p,q} = sin / cos^{p/q} on [0, pi_{p,q}/2).
inline double tam_pq(const Params& params, double y, const EvalConfig& cfg = {}) {
  detail::require_finite(y, "tam_pq");
  if (!(y >= 0.0) || !(y < half_pi_pq(params))) {
    throw DomainError("tam_pq: y must lie in [0, pi_{p,q}/2)");
  }
  const auto k = detail::sin_kernel(params, cfg);
  const detail::KernelRoot root = detail::invert_kernel(k, y, cfg, "tam_pq");
  // cos^p = v and sin^q = 1 - v, so tam^q = (1 - v)/v.
  return std::exp((std::log1p(-root.v) - root.log_v) / params.q());
}

/// tamh_{p,q} = sinh / cosh^{p/q} on [0, pi-hat_{p,q}/2).
inline double tamh_pq(const Params& params, double y, const EvalConfig& cfg = {}) {
  const SinhCosh sc = sinhcosh_pq(params, y, cfg);
  // cosh^{p/q} = v^{-1/q}; this avoids forming 1 - v when v is near 1.
  return sc.sinh * std::exp(sc.log_v / params.q());
}

// ---------------------------------------------------------------------------
// Domains, dispatch and derivatives
// ---------------------------------------------------------------------------

inline PrincipalDomain principal_domain(FnKind kind, const Params& params) {
  const double half = half_pi_pq(params);
  const Bound hat = half_hat_pi_pq(params);
  switch (kind) {
    case FnKind::Sin:
    case FnKind::Cos:
      return {0.0, Bound::finite(half), "[0, pi_pq/2], extended to R by symmetry and periodicity"};
    case FnKind::Tam:
      return {0.0, Bound::finite(half), "[0, pi_pq/2)"};
    case FnKind::Sinh:
    case FnKind::Cosh:
    case FnKind::Tamh:
      return {0.0, hat, hat.is_finite() ? "[0, pihat_pq/2)" : "[0, inf)"};
    case FnKind::Arcsin:
    case FnKind::Arccos:
      return {0.0, Bound::finite(1.0), "[0, 1]"};
    case FnKind::Arcsinh:
    case FnKind::Arctam:
      return {0.0, Bound::infinite(), "[0, inf]"};
    case FnKind::Arccosh:
      return {1.0, Bound::infinite(), "[1, inf)"};
    case FnKind::Arctamh:
      return {0.0, Bound::finite(1.0), params.p() < params.q() ? "[0, 1]" : "[0, 1)"};
  }
  return {};
}

/// Value of any function of the family at one point.
inline double evaluate(FnKind kind, const Params& params, double arg, const EvalConfig& cfg = {}) {
  switch (kind) {
    case FnKind::Sin: return sin_pq(params, arg, cfg);
    case FnKind::Cos: return cos_pq(params, arg, cfg);
    case FnKind::Sinh: return sinh_pq(params, arg, cfg);
    case FnKind::Cosh: return cosh_pq(params, arg, cfg);
    case FnKind::Tam: return tam_pq(params, arg, cfg);
    case FnKind::Tamh: return tamh_pq(params, arg, cfg);
    case FnKind::Arcsin: return arcsin_pq(params, arg, cfg);
    case FnKind::Arccos: return arccos_pq(params, arg, cfg);
    case FnKind::Arcsinh: return arcsinh_pq(params, arg, cfg);
    case FnKind::Arccosh: return arccosh_pq(params, arg, cfg);
    case FnKind::Arctam: return arctam_pq(params, arg, cfg);
    case FnKind::Arctamh: return arctamh_pq(params, arg, cfg);
  }
  throw DomainError("evaluate: unknown function kind");
}

/// Derivative in the argument, from the closed-form differentiation rules.
inline double derivative_y(FnKind kind, const Params& params, double y, const EvalConfig& cfg = {}) {
  const double p = params.p();
  const double q = params.q();
  switch (kind) {
    case FnKind::Sin:
      return cos_pq(params, y, cfg);
    case FnKind::Cos: {
      const SinCos sc = sincos_pq(params, y, cfg);
      if (sc.cos == 0.0 && p > 2.0) {
        throw DomainError("derivative_y: cos' is singular where cos = 0 and p > 2");
      }
      const double s = std::fabs(sc.sin);
      return -(q / p) * std::copysign(std::pow(s, q - 1.0), sc.sin) *
             std::pow(std::fabs(sc.cos), 2.0 - p);
    }
    case FnKind::Sinh:
      return cosh_pq(params, y, cfg);
    case FnKind::Cosh: {
      const SinhCosh sc = sinhcosh_pq(params, y, cfg);
      return (q / p) * std::pow(sc.sinh, q - 1.0) * std::pow(sc.cosh, 2.0 - p);
    }
    case FnKind::Tam: {
      const double t = tam_pq(params, y, cfg);
      return std::pow(1.0 + std::pow(t, q), params.tam_exponent());
    }
    case FnKind::Tamh: {
      const SinhCosh sc = sinhcosh_pq(params, y, cfg);
      return std::pow(sc.v, params.tam_exponent());
    }
    case FnKind::Arcsin:
    case FnKind::Arctamh: {
      if (!(y >= 0.0 && y < 1.0)) throw DomainError("derivative_y: x must lie in [0, 1)");
      const double e = kind == FnKind::Arcsin ? 1.0 / p : params.tam_exponent();
      return std::pow(-std::expm1(q * std::log(y)), -e);
    }
    case FnKind::Arcsinh:
    case FnKind::Arctam: {
      if (!(y >= 0.0) || std::isinf(y)) throw DomainError("derivative_y: x must be finite and >= 0");
      const double e = kind == FnKind::Arcsinh ? 1.0 / p : params.tam_exponent();
      return std::pow(1.0 + std::pow(y, q), -e);
    }
    case FnKind::Arccos: {
      if (!(y > 0.0 && y < 1.0)) throw DomainError("derivative_y: x must lie in (0, 1)");
      return -(p / q) * std::pow(-std::expm1(p * std::log(y)), 1.0 / q - 1.0) * std::pow(y, p - 2.0);
    }
    case FnKind::Arccosh: {
      if (!(y > 1.0) || std::isinf(y)) throw DomainError("derivative_y: x must exceed 1");
      return (p / q) * std::pow(std::expm1(p * std::log(y)), 1.0 / q - 1.0) * std::pow(y, p - 2.0);
    }
  }
  throw DomainError("derivative_y: unknown function kind");
}

}  // namespace gentrig
