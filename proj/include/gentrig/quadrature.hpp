#pragma once

// Adaptive Gauss-Kronrod (7/15) quadrature used as the independent oracle for
// every closed form in the library.

#include <algorithm>
#include <array>
#include <cmath>
#include <concepts>
#include <cstddef>
#include <limits>
#include <queue>
#include <string>
#include <vector>

#include "gentrig/error.hpp"
#include "gentrig/types.hpp"

namespace gentrig::quad {

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  std::size_t subdivisions = 0;
  bool converged = false;
};

enum class SingularEnd { Lower, Upper, Both };

inline constexpr std::size_t kMaxPanels = 10000;
inline constexpr double kSmoothTol = 1e-10;
inline constexpr double kSingularTol = 1e-8;

namespace detail {

inline constexpr std::array<double, 8> kNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> kKronrod = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
// Gauss weights for the odd-indexed Kronrod nodes (and the centre).
inline constexpr std::array<double, 4> kGauss = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double a;
  double b;
  double value;
  double error;
  bool operator<(const Panel& o) const { return error < o.error; }
};

template <class G>
Panel gauss_kronrod(G& g, double a, double b) {
  const double centre = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  auto eval = [&](double x) {
    const double v = g(x);
    if (!std::isfinite(v)) {
      throw DomainError("quadrature: integrand is not finite at t=" + std::to_string(x));
    }
    return v;
  };
  const double fc = eval(centre);
  double kronrod = fc * kKronrod[7];
  double gauss = fc * kGauss[3];
  for (std::size_t j = 0; j < 7; ++j) {
    const double dx = half * kNodes[j];
    const double f1 = eval(centre - dx);
    const double f2 = eval(centre + dx);
    kronrod += kKronrod[j] * (f1 + f2);
    if (j % 2 == 1) {
      gauss += kGauss[j / 2] * (f1 + f2);
    }
  }
  kronrod *= half;
  gauss *= half;
  return {a, b, kronrod, std::fabs(kronrod - gauss)};
}

// Adaptive bisection on a finite interval, largest-error panel first.
template <class G>
QuadratureResult adapt(G& g, double a, double b, double tol, std::size_t max_panels) {
  std::priority_queue<Panel> heap;
  heap.push(gauss_kronrod(g, a, b));
  double total = heap.top().value;
  double error = heap.top().error;
  std::size_t panels = 1;
  while (error > tol * std::max(1.0, std::fabs(total)) && panels < max_panels) {
    const Panel worst = heap.top();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) {
      break;  // interval exhausted at double resolution
    }
    heap.pop();
    const Panel left = gauss_kronrod(g, worst.a, mid);
    const Panel right = gauss_kronrod(g, mid, worst.b);
    heap.push(left);
    heap.push(right);
    total += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    ++panels;
  }
  // Re-sum to shed the drift of the running updates.
  double value = 0.0;
  double err = 0.0;
  auto rest = std::move(heap);
  std::vector<Panel> all;
  all.reserve(rest.size());
  while (!rest.empty()) {
    all.push_back(rest.top());
    rest.pop();
  }
  std::sort(all.begin(), all.end(), [](const Panel& x, const Panel& y) { return x.a < y.a; });
  for (const auto& p : all) {
    value += p.value;
    err += p.error;
  }
  QuadratureResult out{value, err, panels, err <= tol * std::max(1.0, std::fabs(value))};
  return out;
}

inline void require_converged(const QuadratureResult& r) {
  if (!r.converged) {
    throw ConvergenceError("quadrature: tolerance not reached within the panel cap", r.value,
                           r.error_estimate);
  }
}

template <class F>
double call(F& f, double t, double distance) {
  if constexpr (std::is_invocable_r_v<double, F&, double, double>) {
    return f(t, distance);
  } else {
    return f(t);
  }
}

}  // namespace detail

/// Integral of f over [a, b]; b may be +infinity (mapped by t = a + u/(1-u)).
template <class F>
QuadratureResult integrate(F&& f, double a, double b, double tol = kSmoothTol,
                           std::size_t max_panels = kMaxPanels) {
  if (!(a < b) || std::isnan(a) || std::isinf(a)) {
    throw DomainError("integrate: requires finite a < b");
  }
  if (std::isinf(b)) {
    auto g = [&](double u) {
      const double w = 1.0 - u;
      return f(a + u / w) / (w * w);
    };
    auto r = detail::adapt(g, 0.0, 1.0, tol, max_panels);
    detail::require_converged(r);
    return r;
  }
  auto g = [&](double t) { return f(t); };
  auto r = detail::adapt(g, a, b, tol, max_panels);
  detail::require_converged(r);
  return r;
}

/// Integral with an algebraic endpoint singularity ~ d^exponent_hint, where d
/// is the distance to the flagged end. The substitution d = L u^m with
/// m = 1/(1 + exponent_hint) removes the singularity before integrating.
///
/// f may accept (t) or (t, d); the two-argument form receives the distance to
/// the flagged endpoint so kernels can evaluate e.g. 1 - t^q without
/// cancellation, also where t itself rounds onto the endpoint. Samples whose
/// distance underflows to zero contribute 0, as do one-argument samples at t = end.
template <class F>
QuadratureResult integrate_singular(F&& f, double a, double b, SingularEnd which,
                                    double exponent_hint, double tol = kSingularTol,
                                    std::size_t max_panels = kMaxPanels) {
  if (!(a < b) || !std::isfinite(a) || !std::isfinite(b)) {
    throw DomainError("integrate_singular: requires finite a < b");
  }
  if (!(exponent_hint > -1.0)) {
    throw DomainError("integrate_singular: exponent must exceed -1");
  }
  if (which == SingularEnd::Both) {
    const double mid = 0.5 * (a + b);
    auto lo = integrate_singular(f, a, mid, SingularEnd::Lower, exponent_hint, tol, max_panels);
    auto hi = integrate_singular(f, mid, b, SingularEnd::Upper, exponent_hint, tol, max_panels);
    return {lo.value + hi.value, lo.error_estimate + hi.error_estimate,
            lo.subdivisions + hi.subdivisions, true};
  }
  const double m = std::max(1.0, 1.0 / (1.0 + exponent_hint));
  const double length = b - a;
  const bool lower = which == SingularEnd::Lower;
  auto g = [&](double u) {
    const double d = length * std::pow(u, m);
    if (d == 0.0) {
      return 0.0;
    }
    const double t = lower ? a + d : b - d;
    // A one-argument f cannot tell t from the endpoint once t rounds onto it.
    if (!std::is_invocable_r_v<double, F&, double, double> && t == (lower ? a : b)) {
      return 0.0;
    }
    const double jac = length * m * std::pow(u, m - 1.0);
    return detail::call(f, t, d) * jac;
  };
  auto r = detail::adapt(g, 0.0, 1.0, tol, max_panels);
  detail::require_converged(r);
  return r;
}

// ---------------------------------------------------------------------------
// Integrand families of the defining integrals
// ---------------------------------------------------------------------------

enum class KernelId {
  Arcsin,   // (1 - t^q)^{-1/p} on [0, x]
  Arccos,   // (p/q) (1 - u^p)^{1/q - 1} u^{p-2} on [x, 1]
  Arcsinh,  // (1 + t^q)^{-1/p} on [0, x]
  Arccosh,  // (p/q) (u^p - 1)^{1/q - 1} u^{p-2} on [1, x]
  Arctam,   // (1 + t^q)^{-(1 + 1/q - 1/p)} on [0, x]
  Arctamh,  // (1 - t^q)^{-(1 + 1/q - 1/p)} on [0, x]
};

/// One of the integrands defining an inverse function. Callable as (t) or as
/// (t, d) with d the distance to the singular endpoint of its natural range.
struct Integrand {
  KernelId id;
  Params params;

  double operator()(double t) const { return (*this)(t, std::numeric_limits<double>::quiet_NaN()); }

  double operator()(double t, double d) const {
    const double p = params.p();
    const double q = params.q();
    // 1 - t^q (or 1 - t^p) from the distance to t = 1 when it is known.
    auto one_minus_pow = [&](double s) {
      if (std::isfinite(d) && t > 0.5 && d > 0.0 && d < 0.5) {
        return -std::expm1(s * std::log1p(-d));
      }
      return -std::expm1(s * std::log(t));
    };
    switch (id) {
      case KernelId::Arcsin:
        return std::pow(one_minus_pow(q), -1.0 / p);
      case KernelId::Arctamh:
        return std::pow(one_minus_pow(q), -params.tam_exponent());
      case KernelId::Arcsinh:
        return std::pow(1.0 + std::pow(t, q), -1.0 / p);
      case KernelId::Arctam:
        return std::pow(1.0 + std::pow(t, q), -params.tam_exponent());
      case KernelId::Arccos:
        return p / q * std::pow(one_minus_pow(p), 1.0 / q - 1.0) * std::pow(t, p - 2.0);
      case KernelId::Arccosh: {
        // u^p - 1 from the distance to u = 1.
        const double gap = (std::isfinite(d) && d < 0.5) ? std::expm1(p * std::log1p(d))
                                                          : std::expm1(p * std::log(t));
        return p / q * std::pow(gap, 1.0 / q - 1.0) * std::pow(t, p - 2.0);
      }
    }
    return std::numeric_limits<double>::quiet_NaN();
  }
};

/// The defining integral of an inverse function at x, by quadrature.
/// Endpoint singularities are flagged to integrate_singular.
inline QuadratureResult defining_integral(FnKind inverse, const Params& params, double x,
                                          double tol = 1e-12) {
  const double p = params.p();
  const double q = params.q();
  switch (inverse) {
    case FnKind::Arcsin:
    case FnKind::Arctamh: {
      if (!(x >= 0.0 && x <= 1.0)) throw DomainError("defining_integral: x outside [0,1]");
      if (x == 0.0) return {0.0, 0.0, 0, true};
      const KernelId id = inverse == FnKind::Arcsin ? KernelId::Arcsin : KernelId::Arctamh;
      const double e = inverse == FnKind::Arcsin ? -1.0 / p : -params.tam_exponent();
      if (x == 1.0 && !(e > -1.0)) throw DomainError("defining_integral: divergent at x = 1");
      // The integrand takes its distance to t = 1, not to x.
      const Integrand k{id, params};
      auto f = [&](double t, double d) { return k(t, (1.0 - x) + d); };
      return integrate_singular(f, 0.0, x, SingularEnd::Upper, x == 1.0 ? e : 0.0, tol);
    }
    case FnKind::Arcsinh:
    case FnKind::Arctam: {
      if (!(x >= 0.0)) throw DomainError("defining_integral: x must be nonnegative");
      if (x == 0.0) return {0.0, 0.0, 0, true};
      const KernelId id = inverse == FnKind::Arcsinh ? KernelId::Arcsinh : KernelId::Arctam;
      return integrate(Integrand{id, params}, 0.0, x, tol);
    }
    case FnKind::Arccos: {
      if (!(x >= 0.0 && x <= 1.0)) throw DomainError("defining_integral: x outside [0,1]");
      if (x == 1.0) return {0.0, 0.0, 0, true};
      const Integrand f{KernelId::Arccos, params};
      const double upper_exp = 1.0 / q - 1.0;
      if (x == 0.0 && p < 2.0) {
        return integrate_singular(f, 0.0, 1.0, SingularEnd::Both,
                                  std::min(upper_exp, p - 2.0), tol);
      }
      return integrate_singular(f, x, 1.0, SingularEnd::Upper, upper_exp, tol);
    }
    case FnKind::Arccosh: {
      if (!(x >= 1.0) || std::isinf(x)) throw DomainError("defining_integral: x must be in [1, inf)");
      if (x == 1.0) return {0.0, 0.0, 0, true};
      return integrate_singular(Integrand{KernelId::Arccosh, params}, 1.0, x, SingularEnd::Lower,
                                1.0 / q - 1.0, tol);
    }
    default:
      throw DomainError("defining_integral: not an inverse function kind");
  }
}

}  // namespace gentrig::quad
