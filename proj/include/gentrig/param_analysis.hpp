#pragma once

// Derivatives with respect to the exponents p and q, the convexity
// discriminants, and grid scanners that classify monotonicity and
// (log-)convexity in a parameter.
//
// A direct function g(p, y) inverts y = f(p, x) = int_0^x phi(t, p) dt, so
//   dg/dp = -f'_p / f'_x = -(int_0^x phi'_p dt) / phi(x, p).

#include <cmath>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gentrig/config.hpp"
#include "gentrig/error.hpp"
#include "gentrig/gen_trig.hpp"
#include "gentrig/quadrature.hpp"
#include "gentrig/types.hpp"

namespace gentrig::analysis {

enum class Axis { P, Q };

inline constexpr std::string_view to_string(Axis a) noexcept { return a == Axis::P ? "p" : "q"; }

inline std::optional<Axis> parse_axis(std::string_view s) {
  if (s == "p" || s == "P") return Axis::P;
  if (s == "q" || s == "Q") return Axis::Q;
  return std::nullopt;
}

enum class Classification { Concave, Convex, LogConcave, LogConvex, Indeterminate };

inline constexpr std::string_view to_string(Classification c) noexcept {
  switch (c) {
    case Classification::Concave: return "concave";
    case Classification::Convex: return "convex";
    case Classification::LogConcave: return "log-concave";
    case Classification::LogConvex: return "log-convex";
    case Classification::Indeterminate: return "indeterminate";
  }
  return "?";
}

inline constexpr double kMonotoneNoise = 1e-9;
inline constexpr double kConvexityNoise = 1e-7;
inline constexpr double kFirstStep = 1e-4;
inline constexpr double kSecondStep = 1e-3;
inline constexpr double kDerivativeTol = 1e-12;

struct ParamPoint {
  double p = 0.0;
  double q = 0.0;
  double y = 0.0;
};

struct ConvexityCertificate {
  ParamPoint point;
  std::optional<double> lhs_value;
  std::optional<double> discriminant_d1;
  std::optional<double> discriminant_d2;
  double second_difference = 0.0;
  Classification classification = Classification::Indeterminate;
  /// False when a corollary applies and its sign contradicts the classification.
  bool lhs_agrees = true;
};

namespace detail {

// int_0^x f to relative accuracy: a first pass fixes the scale, a second
// integrates f / scale so the stopping rule is relative even for tiny values.
inline double integrate_to(const auto& f, double x) {
  if (x == 0.0) return 0.0;
  const double rough = quad::integrate(f, 0.0, x, kDerivativeTol).value;
  const double scale = std::fabs(rough);
  if (scale >= 1.0 || scale == 0.0) return rough;
  auto scaled = [&](double t) { return f(t) / scale; };
  return scale * quad::integrate(scaled, 0.0, x, kDerivativeTol).value;
}

// log(1 + sigma t^q) and 1 + sigma t^q without cancellation.
inline double log_base(double sigma, double t, double q) {
  const double tq = std::exp(q * std::log(t));
  return std::log1p(sigma * tq);
}

// d/dtheta of the inverse of int_0^x (1 + sigma t^q)^{-e} dt, where e(p, q)
// has partial derivative e_theta and q_theta = 1 on the q axis.
inline double kernel_param_derivative(double sigma, double e, double e_theta, double q,
                                      double q_theta, double x) {
  auto phi_theta = [&](double t) {
    const double tq = std::exp(q * std::log(t));
    const double base = 1.0 + sigma * tq;
    const double dlog = -e_theta * std::log1p(sigma * tq) - e * sigma * tq * std::log(t) * q_theta / base;
    return std::pow(base, -e) * dlog;
  };
  const double integral = integrate_to(phi_theta, x);
  const double base_x = 1.0 + sigma * std::exp(q * std::log(x));
  return -integral * std::pow(base_x, e);
}

// cosh in p or q, from u = sinh and x = cosh at the same argument.
// arccosh(x) = int_0^u (1 + t^q)^{-1/p} dt with u = (x^p - 1)^{1/q}.
inline double cosh_param_derivative(const Params& params, Axis axis, double u, double x) {
  const double p = params.p();
  const double q = params.q();
  const double scale = q * std::pow(u, q - 1.0) / (p * std::pow(x, p - 2.0));  // 1 / f'_x
  if (axis == Axis::P) {
    auto g = [&](double t) {
      const double l = log_base(1.0, t, q);
      return std::exp(-l / p) * l;
    };
    return -scale * integrate_to(g, u) / (p * p) - x * std::log(x) / p;
  }
  auto g = [&](double t) {
    const double tq = std::exp(q * std::log(t));
    return -tq * std::log(t) / (p * (1.0 + tq)) * std::pow(1.0 + tq, -1.0 / p);
  };
  const double f_q = integrate_to(g, u) - u * std::log(u) / (q * x);
  return -scale * f_q;
}

// cos = (1 - sin^q)^{1/p}, differentiated through sin at the same argument.
inline double cos_param_derivative(const Params& params, Axis axis, double s, double c) {
  const double p = params.p();
  const double q = params.q();
  const double cp = std::pow(c, p);  // 1 - s^q
  const double ds = kernel_param_derivative(-1.0, 1.0 / p, axis == Axis::P ? -1.0 / (p * p) : 0.0, q,
                                            axis == Axis::Q ? 1.0 : 0.0, s);
  const double sq1 = std::pow(s, q - 1.0);
  if (axis == Axis::P) {
    return c * (-std::log(c) / p - q * sq1 * ds / (p * cp));
  }
  return -c * (s * sq1 * std::log(s) + q * sq1 * ds) / (p * cp);
}

}  // namespace detail

/// Closed-form derivative of a direct function in p or q at argument x
/// (x = the function value at the point of interest).
inline double param_derivative_closed_at_x(FnKind kind, Axis axis, const Params& params, double x) {
  const double p = params.p();
  const double q = params.q();
  const double qt = axis == Axis::Q ? 1.0 : 0.0;
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw DomainError("param_derivative_closed: point must be interior");
  }
  switch (kind) {
    case FnKind::Sin:
    case FnKind::Sinh: {
      if (kind == FnKind::Sin && !(x < 1.0)) throw DomainError("param_derivative_closed: sin value must be < 1");
      const double sigma = kind == FnKind::Sin ? -1.0 : 1.0;
      const double e_theta = axis == Axis::P ? -1.0 / (p * p) : 0.0;
      return detail::kernel_param_derivative(sigma, 1.0 / p, e_theta, q, qt, x);
    }
    case FnKind::Tam:
    case FnKind::Tamh: {
      if (kind == FnKind::Tamh && !(x < 1.0)) throw DomainError("param_derivative_closed: tamh value must be < 1");
      const double sigma = kind == FnKind::Tamh ? -1.0 : 1.0;
      const double e_theta = axis == Axis::P ? 1.0 / (p * p) : -1.0 / (q * q);
      return detail::kernel_param_derivative(sigma, params.tam_exponent(), e_theta, q, qt, x);
    }
    case FnKind::Cosh: {
      if (!(x > 1.0)) throw DomainError("param_derivative_closed: cosh value must exceed 1");
      return detail::cosh_param_derivative(params, axis, std::pow(std::expm1(p * std::log(x)), 1.0 / q), x);
    }
    case FnKind::Cos: {
      if (!(x < 1.0)) throw DomainError("param_derivative_closed: cos value must be < 1");
      return detail::cos_param_derivative(params, axis, std::exp(std::log1p(-std::pow(x, p)) / q), x);
    }
    default:
      throw UnsupportedError("param_derivative_closed: no closed form for " +
                             std::string(gentrig::to_string(kind)));
  }
}

/// Closed-form derivative of a direct function in p or q at argument y.
inline double param_derivative_closed(FnKind kind, Axis axis, const Params& params, double y,
                                      const EvalConfig& cfg = {}) {
  if (is_inverse(kind)) {
    throw UnsupportedError("param_derivative_closed: only direct functions are supported");
  }
  if (!(y > 0.0)) throw DomainError("param_derivative_closed: y must be interior");
  if ((kind == FnKind::Sin || kind == FnKind::Cos) && !(y < half_pi_pq(params))) {
    throw DomainError("param_derivative_closed: y must lie inside (0, pi_pq/2)");
  }
  if (kind == FnKind::Cos) {
    const SinCos sc = sincos_pq(params, y, cfg);
    return detail::cos_param_derivative(params, axis, sc.sin, sc.cos);
  }
  if (kind == FnKind::Cosh) {
    if (!half_hat_pi_pq(params).exceeds(y)) throw DomainError("param_derivative_closed: y outside the domain");
    const SinhCosh sc = sinhcosh_pq(params, y, cfg);
    return detail::cosh_param_derivative(params, axis, sc.sinh, sc.cosh);
  }
  return param_derivative_closed_at_x(kind, axis, params, evaluate(kind, params, y, cfg));
}

namespace detail {

inline Params shifted(const Params& params, Axis axis, double delta, bool conjugate) {
  if (conjugate) return Params::conjugate_pair(params.q() + delta);
  return axis == Axis::P ? Params(params.p() + delta, params.q()) : Params(params.p(), params.q() + delta);
}

inline double value_for_fd(FnKind kind, const Params& params, double y, bool log_scale,
                           const EvalConfig& cfg) {
  const double v = evaluate(kind, params, y, cfg);
  if (!log_scale) return v;
  if (!(v > 0.0)) throw DomainError("param_derivative_fd: log scale needs a positive value");
  return std::log(v);
}

inline double central_difference(FnKind kind, Axis axis, const Params& params, double y, int order,
                                 double h, bool log_scale, bool conjugate, const EvalConfig& cfg) {
  if (order != 1 && order != 2) throw DomainError("param_derivative_fd: order must be 1 or 2");
  if (!(h > 0.0)) throw DomainError("param_derivative_fd: step must be positive");
  const double minus = value_for_fd(kind, shifted(params, axis, -h, conjugate), y, log_scale, cfg);
  const double plus = value_for_fd(kind, shifted(params, axis, h, conjugate), y, log_scale, cfg);
  if (order == 1) return (plus - minus) / (2.0 * h);
  const double centre = value_for_fd(kind, params, y, log_scale, cfg);
  return (plus - 2.0 * centre + minus) / (h * h);
}

}  // namespace detail

/// Central difference, first or second order, of the function (or its log)
/// in one parameter.
inline double param_derivative_fd(FnKind kind, Axis axis, const Params& params, double y, int order,
                                  double h, bool log_scale, const EvalConfig& cfg = {}) {
  return detail::central_difference(kind, axis, params, y, order, h, log_scale, false, cfg);
}

/// Second difference of p -> log tamh_{p', p}(y), p' = p/(p-1), along the conjugate curve.
inline double conjugate_tamh_second_difference(double p, double y, double h = kSecondStep,
                                               const EvalConfig& cfg = {}) {
  return detail::central_difference(FnKind::Tamh, Axis::P, Params::conjugate_pair(p), y, 2, h, true,
                                    true, cfg);
}

/// Left-hand side of the concavity / log-convexity conditions, at x = sin(y)
/// (which = 1: sin in p, 2: sin in q) or x = sinh(y) (3: sinh in p, 4: sinh in q).
///   d^2 sin / dp^2     = -L1 / (p^4 phi(x))     phi = (1 - x^q)^{-1/p}
///   d^2 sin / dq^2     = -L2 / (p^2 phi(x))
///   d^2 log sinh / dp^2 = L3 / (p^4 x phi(x))   phi = (1 + x^q)^{-1/p}
///   d^2 log sinh / dq^2 = -L4 / (p^2 x phi(x))
inline double corollary_lhs(int which, const Params& params, double x, const EvalConfig& cfg = {}) {
  (void)cfg;
  const double p = params.p();
  const double q = params.q();
  if (which < 1 || which > 4) throw DomainError("corollary_lhs: which must be 1..4");
  if (which <= 2 && !(x >= 0.0 && x < 1.0)) throw DomainError("corollary_lhs: x must lie in [0, 1)");
  if (which >= 3 && !(x >= 0.0) ) throw DomainError("corollary_lhs: x must be nonnegative");
  if (x == 0.0) return 0.0;
  const double xq = std::pow(x, q);
  const double log_x = std::log(x);
  switch (which) {
    case 1: {
      auto phi1 = [&](double t) {
        const double l = detail::log_base(-1.0, t, q);
        return l * std::exp(-l / p);
      };
      auto phi2 = [&](double t) {
        const double l = detail::log_base(-1.0, t, q);
        return l * (l - 2.0 * p) * std::exp(-l / p);
      };
      const double i1 = detail::integrate_to(phi1, x);
      const double i2 = detail::integrate_to(phi2, x);
      const double l = std::log1p(-xq);
      const double lead = q * std::pow(x, q - 1.0) / (p * std::exp((1.0 - 1.0 / p) * l));
      return lead * i1 * i1 - 2.0 * l * i1 + i2;
    }
    case 2: {
      auto beta1 = [&](double t) {
        const double tq = std::pow(t, q);
        return tq * std::log(t) * std::pow(1.0 - tq, -1.0 - 1.0 / p);
      };
      auto beta2 = [&](double t) {
        const double tq = std::pow(t, q);
        const double lt = std::log(t);
        return tq * (tq + p) * lt * lt * std::pow(1.0 - tq, -2.0 - 1.0 / p);
      };
      const double i1 = detail::integrate_to(beta1, x);
      const double i2 = detail::integrate_to(beta2, x);
      const double lead = q * std::pow(x, q - 1.0) / (p * std::pow(1.0 - xq, 1.0 - 1.0 / p));
      return lead * i1 * i1 - 2.0 * xq * log_x / (1.0 - xq) * i1 + i2;
    }
    case 3: {
      auto lambda1 = [&](double t) {
        const double l = detail::log_base(1.0, t, q);
        return l * std::exp(-l / p);
      };
      auto lambda2 = [&](double t) {
        const double l = detail::log_base(1.0, t, q);
        return (2.0 * p - l) * l * std::exp(-l / p);
      };
      const double i1 = detail::integrate_to(lambda1, x);
      const double i2 = detail::integrate_to(lambda2, x);
      const double l = std::log1p(xq);
      const double lead = ((q - p) * xq - p) / (p * x * std::exp((1.0 - 1.0 / p) * l));
      return lead * i1 * i1 + 2.0 * l * i1 + i2;
    }
    default: {
      auto alpha1 = [&](double t) {
        const double tq = std::pow(t, q);
        return -tq * std::log(t) * std::pow(1.0 + tq, -1.0 - 1.0 / p);
      };
      auto alpha2 = [&](double t) {
        const double tq = std::pow(t, q);
        const double lt = std::log(t);
        return tq * (tq - p) * lt * lt * std::pow(1.0 + tq, -2.0 - 1.0 / p);
      };
      const double i1 = detail::integrate_to(alpha1, x);
      const double i2 = detail::integrate_to(alpha2, x);
      const double lead = (p + (p - q) * xq) / (p * x * std::pow(1.0 + xq, 1.0 - 1.0 / p));
      return lead * i1 * i1 + 2.0 * xq * log_x / (1.0 + xq) * i1 + i2;
    }
  }
}

/// Second derivative implied by a corollary left-hand side (see corollary_lhs).
inline double corollary_second_derivative(int which, const Params& params, double x, double lhs) {
  const double p = params.p();
  const double q = params.q();
  const double xq = std::pow(x, q);
  switch (which) {
    case 1: return -lhs * std::pow(1.0 - xq, 1.0 / p) / std::pow(p, 4);
    case 2: return -lhs * std::pow(1.0 - xq, 1.0 / p) / (p * p);
    case 3: return lhs * std::pow(1.0 + xq, 1.0 / p) / (std::pow(p, 4) * x);
    case 4: return -lhs * std::pow(1.0 + xq, 1.0 / p) / (p * p * x);
    default: throw DomainError("corollary_second_derivative: which must be 1..4");
  }
}

namespace detail {

// Kernel w = (1 - t^p)^{-2/p} of arctamh_{p', p} and its p-derivatives.
struct ConjugateKernel {
  double p;
  double w(double t) const { return std::exp(-2.0 / p * std::log1p(-std::pow(t, p))); }
  double eta(double t) const {
    const double tp = std::pow(t, p);
    return tp * std::log(t) / (p * (1.0 - tp)) + std::log1p(-tp) / (p * p);
  }
  double phi_pp(double t) const {
    const double tp = std::pow(t, p);
    const double e = eta(t);
    const double lt = std::log(t);
    const double one = 1.0 - tp;
    return w(t) * (4.0 * e * e - 4.0 * e / p + 2.0 * tp * lt * lt / (p * one * one));
  }
};

}  // namespace detail

/// D1(x) = 4 x eta^2 (1 - x^p)/(1 + x^p) w - int_0^x phi''_pp dt for the kernel
/// phi = w = (1 - x^p)^{-2/p}; negative values certify log-concavity of
/// p -> tamh_{p', p}.
inline double theorem2_d1(double p, double x, const EvalConfig& cfg = {}) {
  (void)cfg;
  if (!(p > 1.0)) throw DomainError("theorem2_d1: p must exceed 1");
  if (!(x >= 0.0 && x < 1.0)) throw DomainError("theorem2_d1: x must lie in [0, 1)");
  if (x == 0.0) return 0.0;
  const detail::ConjugateKernel k{p};
  const double integral = detail::integrate_to([&](double t) { return k.phi_pp(t); }, x);
  const double xp = std::pow(x, p);
  const double e = k.eta(x);
  return 4.0 * x * e * e * (1.0 - xp) / (1.0 + xp) * k.w(x) - integral;
}

/// D2 = x (phi'_p)^2 - (1 + x phi'_x/phi) phi int_0^x phi''_pp dt for the same
/// kernel; D2 = D1 (1 + x^p) w / (1 - x^p).
inline double theorem2_d2(double p, double x, const EvalConfig& cfg = {}) {
  if (x == 0.0) return 0.0;
  const double xp = std::pow(x, p);
  const detail::ConjugateKernel k{p};
  return theorem2_d1(p, x, cfg) * (1.0 + xp) * k.w(x) / (1.0 - xp);
}

// ---------------------------------------------------------------------------
// Grid scans
// ---------------------------------------------------------------------------

/// Parameter grid. With `conjugate`, the pair is (p', p) for each p in
/// p_values and q_values is unused. With `fixed_x`, y_values hold function
/// values x and the argument is recovered as y = inverse(x) at each point.
struct ScanGrid {
  std::vector<double> p_values;
  std::vector<double> q_values;
  std::vector<double> y_values;
  bool conjugate = false;
  bool fixed_x = false;
};

struct ScanPoint {
  ParamPoint point;
  double x = 0.0;         // argument used by fixed-x grids
  double estimate = 0.0;  // first derivative (monotonicity) or second difference
  bool ok = true;
  std::string error;
  std::optional<ConvexityCertificate> certificate;
};

/// Points sharing y and the other parameter, ordered along the scanned axis.
struct ScanSlice {
  double other = 0.0;
  double y = 0.0;
  int sign = 0;  // common sign of the estimates, 0 if mixed or all below noise
  bool monotone = true;
};

struct Counterexample {
  ParamPoint first;
  ParamPoint second;
  double first_estimate = 0.0;
  double second_estimate = 0.0;
};

struct ScanReport {
  FnKind kind = FnKind::Sin;
  Axis axis = Axis::P;
  ScanGrid grid;
  bool convexity = false;
  bool log_scale = false;
  std::vector<ScanPoint> points;
  std::vector<ScanSlice> slices;
  std::vector<Counterexample> counterexamples;
  std::size_t failures = 0;
  std::size_t indeterminate = 0;
  std::size_t disagreements = 0;
  /// Slices of equal other parameter whose monotone directions differ.
  std::size_t reversals = 0;

  bool monotone() const {
    for (const auto& s : slices) {
      if (!s.monotone) return false;
    }
    return failures == 0;
  }

  /// Convexity verdict shared by every classified point, if any.
  std::optional<Classification> uniform_classification() const {
    std::optional<Classification> c;
    for (const auto& pt : points) {
      if (!pt.certificate || pt.certificate->classification == Classification::Indeterminate) continue;
      if (c && *c != pt.certificate->classification) return std::nullopt;
      c = pt.certificate->classification;
    }
    return c;
  }

  std::string summary() const {
    std::string s = std::string(gentrig::to_string(kind)) + " along " + std::string(to_string(axis)) + ": ";
    if (convexity) {
      const auto c = uniform_classification();
      s += c ? std::string(to_string(*c)) : std::string("mixed");
      s += " (" + std::to_string(points.size()) + " points, " + std::to_string(indeterminate) +
           " indeterminate, " + std::to_string(disagreements) + " corollary disagreements, " +
           std::to_string(failures) + " failures)";
    } else {
      int sign = 0;
      bool uniform = monotone();
      for (const auto& sl : slices) {
        if (sl.sign != 0) {
          if (sign != 0 && sign != sl.sign) uniform = false;
          sign = sl.sign;
        }
      }
      if (monotone() && uniform && sign != 0) {
        s += sign > 0 ? "monotone increasing" : "monotone decreasing";
      } else if (monotone() && reversals > 0) {
        s += "not monotone (direction reverses between slices)";
      } else if (monotone()) {
        s += "monotone on every slice";
      } else {
        s += "not monotone";
      }
      s += " (" + std::to_string(points.size()) + " points, " + std::to_string(counterexamples.size()) +
           " sign changes, " + std::to_string(failures) + " failures)";
    }
    return s;
  }
};

namespace detail {

inline int significant_sign(double v, double noise) {
  if (v > noise) return 1;
  if (v < -noise) return -1;
  return 0;
}

// Corollary matching a (kind, axis, log) second difference, or 0.
inline int corollary_for(FnKind kind, Axis axis, bool log_scale) {
  if (kind == FnKind::Sin && !log_scale) return axis == Axis::P ? 1 : 2;
  if (kind == FnKind::Sinh && log_scale) return axis == Axis::P ? 3 : 4;
  return 0;
}

struct GridPoint {
  std::size_t slice;
  ParamPoint point;
  double x;
};

// Points in slice-major order: for conjugate grids one slice per y, otherwise
// one per (y, other parameter), each ordered along the axis.
inline std::vector<GridPoint> enumerate(const ScanGrid& grid, Axis axis, std::vector<ScanSlice>& slices) {
  std::vector<GridPoint> out;
  const auto& along = (axis == Axis::P || grid.conjugate) ? grid.p_values : grid.q_values;
  std::vector<double> others = grid.conjugate ? std::vector<double>{0.0}
                                              : (axis == Axis::P ? grid.q_values : grid.p_values);
  for (double y : grid.y_values) {
    for (double other : others) {
      const std::size_t slice = slices.size();
      slices.push_back({other, y, 0, true});
      for (double a : along) {
        ParamPoint pt;
        if (grid.conjugate) {
          pt = {a / (a - 1.0), a, y};
        } else if (axis == Axis::P) {
          pt = {a, other, y};
        } else {
          pt = {other, a, y};
        }
        out.push_back({slice, pt, grid.fixed_x ? y : 0.0});
      }
    }
  }
  return out;
}

inline void record_slices(ScanReport& report, double noise) {
  std::map<std::size_t, std::vector<const ScanPoint*>> by_slice;
  std::size_t idx = 0;
  // Points were appended in slice-major order with a fixed slice length.
  const std::size_t per_slice = report.slices.empty() ? 0 : report.points.size() / report.slices.size();
  for (const auto& pt : report.points) {
    by_slice[per_slice ? idx / per_slice : 0].push_back(&pt);
    ++idx;
  }
  for (auto& [slice, pts] : by_slice) {
    ScanSlice& s = report.slices[slice];
    int sign = 0;
    const ScanPoint* prev = nullptr;
    for (const ScanPoint* pt : pts) {
      if (!pt->ok) {
        s.monotone = false;
        continue;
      }
      const int sg = significant_sign(pt->estimate, noise);
      if (sg == 0) continue;
      if (sign != 0 && sg != sign) {
        s.monotone = false;
        report.counterexamples.push_back({prev->point, pt->point, prev->estimate, pt->estimate});
      }
      sign = sg;
      prev = pt;
    }
    s.sign = s.monotone ? sign : 0;
  }
  // Direction reversal between consecutive slices that share the other parameter.
  for (std::size_t i = 0; i < report.slices.size(); ++i) {
    const ScanSlice& a = report.slices[i];
    if (a.sign == 0) continue;
    for (std::size_t j = i + 1; j < report.slices.size(); ++j) {
      const ScanSlice& b = report.slices[j];
      if (b.other != a.other || b.sign == 0) continue;
      if (b.sign != a.sign) {
        const ScanPoint& pa = *by_slice[i].front();
        const ScanPoint& pb = *by_slice[j].front();
        report.counterexamples.push_back({pa.point, pb.point, pa.estimate, pb.estimate});
        ++report.reversals;
      }
      break;
    }
  }
}

inline ParamPoint resolve_argument(FnKind kind, const ParamPoint& pt, const ScanGrid& grid,
                                   double x, const EvalConfig& cfg) {
  if (!grid.fixed_x) return pt;
  ParamPoint out = pt;
  out.y = evaluate(inverse_of(kind), Params(pt.p, pt.q), x, cfg);
  return out;
}

}  // namespace detail

/// First-derivative sign scan along one axis. Closed forms are used where
/// available, central differences (h = 1e-4) otherwise.
inline ScanReport scan_monotonicity(FnKind kind, Axis axis, const ScanGrid& grid,
                                    const EvalConfig& cfg = {}) {
  if (is_inverse(kind)) throw DomainError("scan_monotonicity: expects a direct function kind");
  ScanReport report;
  report.kind = kind;
  report.axis = axis;
  report.grid = grid;
  const auto pts = detail::enumerate(grid, axis, report.slices);
  for (const auto& gp : pts) {
    ScanPoint sp;
    sp.point = gp.point;
    sp.x = gp.x;
    try {
      sp.point = detail::resolve_argument(kind, gp.point, grid, gp.x, cfg);
      const Params params(sp.point.p, sp.point.q);
      if (grid.conjugate) {
        sp.estimate = detail::central_difference(kind, axis, params, sp.point.y, 1, kFirstStep, false,
                                                 true, cfg);
      } else {
        try {
          sp.estimate = param_derivative_closed(kind, axis, params, sp.point.y, cfg);
        } catch (const UnsupportedError&) {
          sp.estimate = param_derivative_fd(kind, axis, params, sp.point.y, 1, kFirstStep, false, cfg);
        }
      }
    } catch (const std::exception& e) {
      sp.ok = false;
      sp.error = e.what();
      ++report.failures;
    }
    report.points.push_back(std::move(sp));
  }
  detail::record_slices(report, kMonotoneNoise);
  return report;
}

/// Second-difference (h = 1e-3) classification of convexity, or of
/// log-convexity when log_scale is set. Where a corollary condition applies,
/// its left-hand side is evaluated and its sign compared with the
/// classification.
inline ScanReport classify_convexity(FnKind kind, Axis axis, const ScanGrid& grid, bool log_scale,
                                     const EvalConfig& cfg = {}) {
  if (is_inverse(kind)) throw DomainError("classify_convexity: expects a direct function kind");
  ScanReport report;
  report.kind = kind;
  report.axis = axis;
  report.grid = grid;
  report.convexity = true;
  report.log_scale = log_scale;
  const int corollary = grid.conjugate ? 0 : detail::corollary_for(kind, axis, log_scale);
  const auto pts = detail::enumerate(grid, axis, report.slices);
  for (const auto& gp : pts) {
    ScanPoint sp;
    sp.point = gp.point;
    sp.x = gp.x;
    try {
      sp.point = detail::resolve_argument(kind, gp.point, grid, gp.x, cfg);
      const Params params(sp.point.p, sp.point.q);
      ConvexityCertificate cert;
      cert.point = sp.point;
      const double d2 = detail::central_difference(kind, axis, params, sp.point.y, 2, kSecondStep,
                                                   log_scale, grid.conjugate, cfg);
      const double f0 = evaluate(kind, params, sp.point.y, cfg);
      const double scale = log_scale ? std::max(1.0, std::fabs(std::log(f0))) : std::max(1.0, std::fabs(f0));
      cert.second_difference = d2;
      const int sg = detail::significant_sign(d2, kConvexityNoise * scale);
      if (sg == 0) {
        cert.classification = Classification::Indeterminate;
        ++report.indeterminate;
      } else if (log_scale) {
        cert.classification = sg > 0 ? Classification::LogConvex : Classification::LogConcave;
      } else {
        cert.classification = sg > 0 ? Classification::Convex : Classification::Concave;
      }
      if (corollary != 0) {
        const double x = evaluate(kind, params, sp.point.y, cfg);
        const double lhs = corollary_lhs(corollary, params, x, cfg);
        cert.lhs_value = lhs;
        const int implied = detail::significant_sign(corollary_second_derivative(corollary, params, x, lhs), 0.0);
        if (std::fabs(lhs) > kConvexityNoise && sg != 0 && implied != sg) {
          cert.lhs_agrees = false;
          ++report.disagreements;
        }
      }
      if (grid.conjugate && kind == FnKind::Tamh) {
        const double x = evaluate(kind, params, sp.point.y, cfg);
        cert.discriminant_d1 = theorem2_d1(sp.point.q, x, cfg);
        cert.discriminant_d2 = theorem2_d2(sp.point.q, x, cfg);
      }
      sp.estimate = d2;
      sp.certificate = cert;
    } catch (const std::exception& e) {
      sp.ok = false;
      sp.error = e.what();
      ++report.failures;
    }
    report.points.push_back(std::move(sp));
  }
  return report;
}

}  // namespace gentrig::analysis
