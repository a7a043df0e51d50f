#pragma once

#include <cmath>
#include <limits>
#include <optional>
#include <string>
#include <string_view>

#include "gentrig/error.hpp"

namespace gentrig {

/// Exponent pair (p, q) of the generalized trigonometric family, p, q > 1.
class Params {
 public:
  Params(double p, double q) : p_(p), q_(q) {
    if (!(p > 1.0) || !(q > 1.0) || !std::isfinite(p) || !std::isfinite(q)) {
      throw DomainError("Params: require finite p > 1 and q > 1 (got p=" + std::to_string(p) +
                        ", q=" + std::to_string(q) + ")");
    }
  }

  double p() const noexcept { return p_; }
  double q() const noexcept { return q_; }

  /// Conjugate exponent p' with 1/p + 1/p' = 1.
  double p_conj() const noexcept { return p_ / (p_ - 1.0); }

  /// r = pq/(pq + p - q); r > 1 exactly when p < q.
  double r() const noexcept { return p_ * q_ / (p_ * q_ + p_ - q_); }

  /// Exponent 1 + 1/q - 1/p = 1/r of the tam/tamh kernels.
  double tam_exponent() const noexcept { return 1.0 + 1.0 / q_ - 1.0 / p_; }

  /// Params(r, q) when r > 1, i.e. the pair whose sinh/sin coincide with tam/tamh.
  std::optional<Params> connected() const {
    if (!(p_ < q_)) {
      return std::nullopt;
    }
    return Params(r(), q_);
  }

  /// The pair (p', p) of the conjugate tamh family.
  static Params conjugate_pair(double p) { return Params(p / (p - 1.0), p); }

  friend bool operator==(const Params&, const Params&) = default;

 private:
  double p_;
  double q_;
};

/// Positive real or +infinity, kept as a tag rather than an overflowed double.
class Bound {
 public:
  static Bound finite(double v) { return Bound(v, false); }
  static Bound infinite() { return Bound(0.0, true); }

  bool is_finite() const noexcept { return !infinite_; }
  bool is_infinite() const noexcept { return infinite_; }

  double value() const {
    if (infinite_) {
      throw DomainError("Bound: value requested from an infinite bound");
    }
    return value_;
  }

  /// IEEE view: +inf for the infinite tag.
  double as_double() const noexcept {
    return infinite_ ? std::numeric_limits<double>::infinity() : value_;
  }

  bool exceeds(double y) const noexcept { return infinite_ || y < value_; }

 private:
  Bound(double v, bool inf) : value_(v), infinite_(inf) {}
  double value_;
  bool infinite_;
};

enum class FnKind {
  Sin,
  Cos,
  Sinh,
  Cosh,
  Tam,
  Tamh,
  Arcsin,
  Arccos,
  Arcsinh,
  Arccosh,
  Arctam,
  Arctamh,
};

inline constexpr bool is_inverse(FnKind k) noexcept { return k >= FnKind::Arcsin; }

inline constexpr FnKind inverse_of(FnKind k) noexcept {
  switch (k) {
    case FnKind::Sin: return FnKind::Arcsin;
    case FnKind::Cos: return FnKind::Arccos;
    case FnKind::Sinh: return FnKind::Arcsinh;
    case FnKind::Cosh: return FnKind::Arccosh;
    case FnKind::Tam: return FnKind::Arctam;
    case FnKind::Tamh: return FnKind::Arctamh;
    case FnKind::Arcsin: return FnKind::Sin;
    case FnKind::Arccos: return FnKind::Cos;
    case FnKind::Arcsinh: return FnKind::Sinh;
    case FnKind::Arccosh: return FnKind::Cosh;
    case FnKind::Arctam: return FnKind::Tam;
    case FnKind::Arctamh: return FnKind::Tamh;
  }
  return k;
}

inline constexpr std::string_view to_string(FnKind k) noexcept {
  switch (k) {
    case FnKind::Sin: return "sin";
    case FnKind::Cos: return "cos";
    case FnKind::Sinh: return "sinh";
    case FnKind::Cosh: return "cosh";
    case FnKind::Tam: return "tam";
    case FnKind::Tamh: return "tamh";
    case FnKind::Arcsin: return "arcsin";
    case FnKind::Arccos: return "arccos";
    case FnKind::Arcsinh: return "arcsinh";
    case FnKind::Arccosh: return "arccosh";
    case FnKind::Arctam: return "arctam";
    case FnKind::Arctamh: return "arctamh";
  }
  return "?";
}

inline std::optional<FnKind> parse_kind(std::string_view name) {
  for (int i = 0; i <= static_cast<int>(FnKind::Arctamh); ++i) {
    const auto k = static_cast<FnKind>(i);
    if (to_string(k) == name) {
      return k;
    }
  }
  return std::nullopt;
}

/// Interval on which a direct function is the inverse of its integral.
struct PrincipalDomain {
  double lower = 0.0;
  Bound upper = Bound::infinite();
  std::string description;
};

}  // namespace gentrig
