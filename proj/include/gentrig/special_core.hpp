#pragma once

// Gamma/beta functions, Gauss and generalized hypergeometric series, and the
// incomplete beta integral in hypergeometric form.
//
// Every series here is summed term by term with the term ratio updated
// incrementally, so no Pochhammer symbol or factorial is ever formed
// explicitly. Sums run until the remaining tail is below machine precision;
// EvalConfig::rel_tol only decides whether a capped sum is acceptable.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numbers>
#include <numeric>
#include <string>
#include <vector>

#include "gentrig/config.hpp"
#include "gentrig/error.hpp"

namespace gentrig::special {

struct SeriesValue {
  double value = 0.0;
  std::size_t terms_used = 0;
  double tail_estimate = 0.0;
  bool converged = false;
};

/// Parameter lists of a generalized hypergeometric series pFq.
struct HyperParams {
  std::vector<double> numerator;
  std::vector<double> denominator;
  double argument = 0.0;
};

inline bool is_nonpositive_integer(double x) { return x <= 0.0 && x == std::nearbyint(x); }

// ---------------------------------------------------------------------------
// Gamma and beta
// ---------------------------------------------------------------------------

namespace detail {

// Lanczos approximation, g = 607/128 with 15 coefficients (Godfrey's set).
inline constexpr double kLanczosG = 607.0 / 128.0;
inline constexpr std::array<double, 15> kLanczosCoeffs = {
    0.99999999999999709182,     57.156235665862923517,     -59.597960355475491248,
    14.136097974741747174,      -0.49191381609762019978,   0.33994649984811888699e-4,
    0.46523628927048575665e-4,  -0.98374475304879564677e-4, 0.15808870322491248884e-3,
    -0.21026444172410488319e-3, 0.21743961811521264320e-3,  -0.16431810653676389022e-3,
    0.84418223983852743293e-4,  -0.26190838401581408670e-4, 0.36899182659531622704e-5};

// log Gamma(x) for x >= 0.5.
inline double lanczos_log_gamma(double x) {
  const double xm1 = x - 1.0;
  double series = kLanczosCoeffs[0];
  for (std::size_t i = 1; i < kLanczosCoeffs.size(); ++i) {
    series += kLanczosCoeffs[i] / (xm1 + static_cast<double>(i));
  }
  const double t = xm1 + kLanczosG + 0.5;
  constexpr double half_log_two_pi = 0.91893853320467274178;
  return half_log_two_pi + (xm1 + 0.5) * std::log(t) - t + std::log(series);
}

// sin(pi x) with the argument reduced exactly before scaling by pi.
inline double sin_pi(double x) {
  double r = x - 2.0 * std::nearbyint(0.5 * x);  // r in [-1, 1]
  if (r > 0.5) {
    r = 1.0 - r;
  } else if (r < -0.5) {
    r = -1.0 - r;
  }
  return std::sin(std::numbers::pi * r);
}

}  // namespace detail

/// Natural log of Gamma(x), x > 0.
inline double log_gamma(double x) {
  if (!(x > 0.0) || std::isinf(x)) {
    throw DomainError("log_gamma: argument must be positive and finite, got " + std::to_string(x));
  }
  if (x < 0.5) {
    // Upward recurrence keeps the Lanczos kernel on x >= 0.5.
    return detail::lanczos_log_gamma(x + 1.0) - std::log(x);
  }
  return detail::lanczos_log_gamma(x);
}

/// log|Gamma(x)| for any x that is not a pole.
inline double log_abs_gamma(double x) {
  if (is_nonpositive_integer(x)) {
    throw DomainError("log_abs_gamma: pole at " + std::to_string(x));
  }
  if (x > 0.0) {
    return log_gamma(x);
  }
  // Reflection: Gamma(x) Gamma(1-x) = pi / sin(pi x).
  return std::log(std::numbers::pi) - std::log(std::fabs(detail::sin_pi(x))) - log_gamma(1.0 - x);
}

/// Sign of Gamma(x) (x not a pole).
inline int gamma_sign(double x) {
  if (x > 0.0) {
    return 1;
  }
  if (is_nonpositive_integer(x)) {
    throw DomainError("gamma_sign: pole at " + std::to_string(x));
  }
  // Gamma alternates sign between consecutive negative integers.
  const double n = std::floor(x);
  return (static_cast<long long>(-n) % 2 == 1) ? -1 : 1;
}

/// Euler's beta function for positive arguments.
inline double beta(double a, double b) {
  if (!(a > 0.0) || !(b > 0.0)) {
    throw DomainError("beta: arguments must be positive");
  }
  return std::exp(log_gamma(a) + log_gamma(b) - log_gamma(a + b));
}

/// Gamma(a) Gamma(b) / Gamma(a + b) for arbitrary real a, b away from poles.
/// Returns 0 when a + b is a pole of Gamma.
inline double beta_general(double a, double b) {
  if (is_nonpositive_integer(a) || is_nonpositive_integer(b)) {
    throw DomainError("beta_general: argument at a pole of Gamma");
  }
  if (a > 0.0 && b > 0.0) {
    return beta(a, b);
  }
  if (is_nonpositive_integer(a + b)) {
    return 0.0;
  }
  const int sign = gamma_sign(a) * gamma_sign(b) * gamma_sign(a + b);
  return sign * std::exp(log_abs_gamma(a) + log_abs_gamma(b) - log_abs_gamma(a + b));
}

/// Product of Gamma(num[i]) over product of Gamma(den[j]); a pole in the
/// denominator yields 0.
inline double gamma_ratio(std::initializer_list<double> num, std::initializer_list<double> den) {
  double log_sum = 0.0;
  int sign = 1;
  for (double x : num) {
    log_sum += log_abs_gamma(x);
    sign *= gamma_sign(x);
  }
  for (double x : den) {
    if (is_nonpositive_integer(x)) {
      return 0.0;
    }
    log_sum -= log_abs_gamma(x);
    sign *= gamma_sign(x);
  }
  return sign * std::exp(log_sum);
}

// ---------------------------------------------------------------------------
// Series machinery
// ---------------------------------------------------------------------------

namespace detail {

inline constexpr double kEps = std::numeric_limits<double>::epsilon();

inline bool acceptable(double tail, double value, const EvalConfig& cfg) {
  return tail <= cfg.rel_tol * std::max(1.0, std::fabs(value));
}

// Sum of t_k, t_0 = 1, t_{k+1} = t_k * ratio(k). `ratio_limit` is |lim ratio(k)|,
// used to keep the tail bound conservative when the ratio increases towards it.
template <class Ratio>
SeriesValue sum_ratio_series(Ratio&& ratio, double ratio_limit, const EvalConfig& cfg) {
  SeriesValue out;
  double sum = 0.0;
  double term = 1.0;
  for (std::size_t k = 0; k < cfg.max_terms; ++k) {
    sum += term;
    const double r = ratio(k);
    const double next = term * r;
    out.terms_used = k + 1;
    if (next == 0.0) {
      out.value = sum;
      out.tail_estimate = 0.0;
      out.converged = true;
      return out;
    }
    const double r_bound = std::max(std::fabs(r), ratio_limit);
    double tail;
    if (r < 0.0 && ratio_limit <= 1.0 && std::fabs(r) < 1.0) {
      tail = std::fabs(next);  // alternating tail
    } else if (r_bound < 1.0) {
      tail = std::fabs(next) / (1.0 - r_bound);
    } else {
      tail = std::numeric_limits<double>::infinity();
    }
    if (tail <= 0.5 * kEps * std::fabs(sum)) {
      out.value = sum + next;
      out.tail_estimate = tail;
      out.converged = true;
      return out;
    }
    term = next;
    out.tail_estimate = r_bound < 1.0 ? std::fabs(next) / (1.0 - r_bound) : std::fabs(next);
  }
  out.value = sum;
  out.converged = acceptable(out.tail_estimate, sum, cfg) &&
                  std::isfinite(out.tail_estimate);
  return out;
}

// Ratio t_{k+1}/t_k of the pFq series.
struct PfqRatio {
  const std::vector<double>& num;
  const std::vector<double>& den;
  double z;
  double operator()(std::size_t k) const {
    const double kk = static_cast<double>(k);
    double r = z / (kk + 1.0);
    for (double a : num) r *= (a + kk);
    for (double b : den) r /= (b + kk);
    return r;
  }
};

// Unit-argument pFq (p = q + 1) with algebraically decaying terms
// t_k ~ C k^{-1-excess}. Partial sums at N0 * 2^i are combined by Richardson
// elimination of the tail terms N^{-(excess + j)}.
inline SeriesValue sum_unit_argument(const std::vector<double>& num, const std::vector<double>& den,
                                     double excess, const EvalConfig& cfg) {
  constexpr std::size_t kFirst = 256;
  constexpr std::size_t kLevels = 8;
  const std::size_t last = kFirst << (kLevels - 1);

  PfqRatio ratio{num, den, 1.0};
  std::vector<double> partial;
  partial.reserve(kLevels);
  double sum = 0.0;
  double term = 1.0;
  std::size_t next_checkpoint = kFirst;
  const std::size_t cap = std::min(cfg.max_terms, last);
  for (std::size_t k = 0; k < cap; ++k) {
    sum += term;
    term *= ratio(k);
    if (term == 0.0) {
      return {sum, k + 1, 0.0, true};
    }
    if (k + 1 == next_checkpoint) {
      partial.push_back(sum);
      next_checkpoint *= 2;
    }
    // Fast-converging parameter sets finish directly. The bound uses
    // t_{k+1} k / excess, the leading term of the algebraic tail.
    if (k > 32 && std::fabs(term) * (static_cast<double>(k) / excess + 1.0) <=
                      0.5 * kEps * std::fabs(sum)) {
      return {sum, k + 1, std::fabs(term) * static_cast<double>(k) / excess, true};
    }
  }
  if (partial.size() < 3) {
    SeriesValue out{sum, cap, std::fabs(term) * static_cast<double>(cap) / excess, false};
    out.converged = acceptable(out.tail_estimate, sum, cfg);
    return out;
  }

  // Richardson table over checkpoints doubling in N.
  std::vector<double> row = partial;
  double best = row.back();
  double previous = row.size() >= 2 ? row[row.size() - 2] : row.back();
  for (std::size_t j = 0; j + 1 < partial.size(); ++j) {
    const double factor = std::pow(2.0, excess + static_cast<double>(j));
    std::vector<double> next_row(row.size() - 1);
    for (std::size_t i = 0; i + 1 < row.size(); ++i) {
      next_row[i] = (factor * row[i + 1] - row[i]) / (factor - 1.0);
    }
    previous = best;
    best = next_row.back();
    row = std::move(next_row);
    if (row.size() == 1) break;
  }
  SeriesValue out{best, cap, std::fabs(best - previous), false};
  out.converged = acceptable(out.tail_estimate, best, cfg);
  return out;
}

inline void require_converged(const SeriesValue& s, const char* who) {
  if (!s.converged || !std::isfinite(s.value)) {
    throw ConvergenceError(std::string(who) + ": series did not converge within max_terms",
                           s.value, s.tail_estimate);
  }
}

// Raw 2F1 power series.
inline SeriesValue series_2f1(double a, double b, double c, double z, const EvalConfig& cfg) {
  auto ratio = [=](std::size_t k) {
    const double kk = static_cast<double>(k);
    return (a + kk) * (b + kk) / ((c + kk) * (kk + 1.0)) * z;
  };
  const bool terminates = is_nonpositive_integer(a) || is_nonpositive_integer(b);
  return sum_ratio_series(ratio, terminates ? 0.0 : std::fabs(z), cfg);
}

}  // namespace detail

/// Gauss hypergeometric function 2F1(a, b; c; z) for real z <= 1.
///
/// |z| <= 0.5 uses the power series; z < -0.5 goes through Pfaff's
/// z -> z/(z-1); 0.5 < z < 1 uses Euler's transformation when c-a-b < 0 (its
/// series then decays faster). z = 1 is Gauss's summation, valid for c-a-b > 0.
inline SeriesValue gauss_2f1(double a, double b, double c, double z, const EvalConfig& cfg = {}) {
  if (is_nonpositive_integer(c)) {
    throw DomainError("gauss_2f1: c must not be a nonpositive integer");
  }
  if (!(z <= 1.0)) {
    throw DomainError("gauss_2f1: argument must satisfy z <= 1");
  }
  if (z == 0.0) {
    return {1.0, 0, 0.0, true};
  }
  const bool terminates = is_nonpositive_integer(a) || is_nonpositive_integer(b);
  if (z == 1.0 && !terminates) {
    const double excess = c - a - b;
    if (!(excess > 0.0)) {
      throw DomainError("gauss_2f1: z = 1 requires c - a - b > 0");
    }
    return {gamma_ratio({c, excess}, {c - a, c - b}), 0, 0.0, true};
  }
  if (terminates) {
    auto s = detail::series_2f1(a, b, c, z, cfg);
    detail::require_converged(s, "gauss_2f1");
    return s;
  }
  if (z < -0.5) {
    const double w = z / (z - 1.0);
    auto s = gauss_2f1(a, c - b, c, w, cfg);
    s.value *= std::pow(1.0 - z, -a);
    return s;
  }
  if (z > 0.5) {
    const bool euler_terminates = is_nonpositive_integer(c - a) || is_nonpositive_integer(c - b);
    if (euler_terminates || c - a - b < 0.0) {
      auto s = detail::series_2f1(c - a, c - b, c, z, cfg);
      detail::require_converged(s, "gauss_2f1");
      s.value *= std::pow(1.0 - z, c - a - b);
      return s;
    }
  }
  auto s = detail::series_2f1(a, b, c, z, cfg);
  detail::require_converged(s, "gauss_2f1");
  return s;
}

/// Generalized hypergeometric series 3F2(a1, a2, a3; b1, b2; z), |z| <= 1.
/// At z = 1 the series must satisfy sum(b) - sum(a) > 0; its slowly decaying
/// tail is removed by Richardson extrapolation in the number of terms.
inline SeriesValue hyper_3f2(const HyperParams& params, const EvalConfig& cfg = {}) {
  if (params.numerator.size() != 3 || params.denominator.size() != 2) {
    throw DomainError("hyper_3f2: expects 3 numerator and 2 denominator parameters");
  }
  for (double b : params.denominator) {
    if (is_nonpositive_integer(b)) {
      throw DomainError("hyper_3f2: denominator parameter is a nonpositive integer");
    }
  }
  const double z = params.argument;
  if (!(std::fabs(z) <= 1.0)) {
    throw DomainError("hyper_3f2: requires |z| <= 1");
  }
  if (z == 0.0) {
    return {1.0, 0, 0.0, true};
  }
  const bool terminates = std::any_of(params.numerator.begin(), params.numerator.end(),
                                      [](double a) { return is_nonpositive_integer(a); });
  const double excess =
      std::accumulate(params.denominator.begin(), params.denominator.end(), 0.0) -
      std::accumulate(params.numerator.begin(), params.numerator.end(), 0.0);
  if (z == 1.0 && !terminates) {
    if (!(excess > 0.0)) {
      throw DomainError("hyper_3f2: divergent at z = 1 (sum(b) - sum(a) <= 0)");
    }
    auto s = detail::sum_unit_argument(params.numerator, params.denominator, excess, cfg);
    detail::require_converged(s, "hyper_3f2");
    return s;
  }
  if (z == -1.0 && !terminates && !(excess > -1.0)) {
    throw DomainError("hyper_3f2: divergent at z = -1");
  }
  detail::PfqRatio ratio{params.numerator, params.denominator, z};
  auto s = detail::sum_ratio_series(ratio, terminates ? 0.0 : std::fabs(z), cfg);
  detail::require_converged(s, "hyper_3f2");
  return s;
}

/// Incomplete beta integral int_0^x t^{a-1} (1-t)^{b-1} dt = (x^a/a) 2F1(a, 1-b; a+1; x).
inline double incomplete_beta_2f1(double x, double a, double b, const EvalConfig& cfg = {}) {
  if (!(x >= 0.0 && x <= 1.0) || !(a > 0.0)) {
    throw DomainError("incomplete_beta_2f1: requires 0 <= x <= 1 and a > 0");
  }
  if (x == 0.0) {
    return 0.0;
  }
  if (x == 1.0) {
    if (!(b > 0.0)) {
      throw DomainError("incomplete_beta_2f1: x = 1 requires b > 0");
    }
    return beta(a, b);
  }
  if (x > 0.9 && b > 0.0) {
    // Complement keeps the series argument small.
    const double y = 1.0 - x;
    return beta(a, b) - std::pow(y, b) / b * gauss_2f1(b, 1.0 - a, b + 1.0, y, cfg).value;
  }
  return std::pow(x, a) / a * gauss_2f1(a, 1.0 - b, a + 1.0, x, cfg).value;
}

/// int_lo^hi v^{a-1} (1-v)^{b-1} dv for 0 <= lo <= hi <= 1/2 and any real a
/// (a > 0 when lo = 0). Expands (1-v)^{b-1} binomially; each power is
/// integrated in a cancellation-free form, with the a + k = 0 term giving a log.
inline SeriesValue beta_segment(double a, double b, double lo, double hi, const EvalConfig& cfg = {}) {
  if (!(lo >= 0.0 && lo <= hi && hi <= 0.5)) {
    throw DomainError("beta_segment: requires 0 <= lo <= hi <= 1/2");
  }
  if (lo == 0.0 && !(a > 0.0)) {
    throw DomainError("beta_segment: lo = 0 requires a > 0");
  }
  if (lo == hi) {
    return {0.0, 0, 0.0, true};
  }
  const double log_hi = std::log(hi);
  const double log_lo = lo > 0.0 ? std::log(lo) : -std::numeric_limits<double>::infinity();
  const double span = log_hi - log_lo;  // log(hi/lo)
  auto power_integral = [&](double e) {
    if (lo == 0.0) {
      return std::exp(e * log_hi) / e;
    }
    if (e > 0.0) {
      return std::exp(e * log_hi) * (-std::expm1(-e * span)) / e;
    }
    if (e < 0.0) {
      return std::exp(e * log_lo) * std::expm1(e * span) / e;
    }
    return span;
  };
  const std::size_t k_min =
      static_cast<std::size_t>(std::ceil(std::fabs(a) + std::fabs(1.0 - b))) + 2;
  SeriesValue out;
  double coeff = 1.0;  // (1-b)_k / k!
  double sum = 0.0;
  for (std::size_t k = 0; k < cfg.max_terms; ++k) {
    const double term = coeff * power_integral(a + static_cast<double>(k));
    sum += term;
    out.terms_used = k + 1;
    out.tail_estimate = std::fabs(term) * hi / (1.0 - hi);
    if (term == 0.0 && k >= 1) {
      // (1-b)_k vanished: b is a positive integer and the expansion is finite.
      if (coeff == 0.0) {
        out.tail_estimate = 0.0;
        break;
      }
    }
    if (k >= k_min && out.tail_estimate <= 0.5 * detail::kEps * std::fabs(sum)) {
      break;
    }
    coeff *= (1.0 - b + static_cast<double>(k)) / (static_cast<double>(k) + 1.0);
  }
  out.value = sum;
  out.converged = out.tail_estimate <= 0.5 * detail::kEps * std::fabs(sum) ||
                  detail::acceptable(out.tail_estimate, sum, cfg);
  detail::require_converged(out, "beta_segment");
  return out;
}

}  // namespace gentrig::special
