#pragma once

#include <cstddef>
#include <cstdlib>
#include <string>

#include "gentrig/error.hpp"

namespace gentrig {

/// Tolerances and caps shared by every iterative routine.
///
/// Series are always summed to machine precision when possible; `rel_tol`
/// decides whether a truncated sum still counts as converged. `abs_tol` is the
/// residual target of the root finders.
struct EvalConfig {
  double rel_tol = 1e-12;
  double abs_tol = 1e-14;
  std::size_t max_terms = 100000;
  std::size_t max_iters = 200;

  void validate() const {
    if (!(rel_tol > 0.0) || !(abs_tol > 0.0) || max_terms == 0 || max_iters == 0) {
      throw DomainError("EvalConfig: all tolerances and caps must be positive");
    }
  }

  /// Defaults, with GENTRIG_DEFAULT_TOL (if set) replacing both tolerances.
  static EvalConfig from_environment() {
    EvalConfig cfg;
    if (const char* env = std::getenv("GENTRIG_DEFAULT_TOL"); env != nullptr && *env != '\0') {
      char* end = nullptr;
      const double tol = std::strtod(env, &end);
      if (end == env || *end != '\0' || !(tol > 0.0)) {
        throw DomainError(std::string("GENTRIG_DEFAULT_TOL is not a positive number: ") + env);
      }
      cfg.rel_tol = tol;
      cfg.abs_tol = tol;
    }
    return cfg;
  }
};

}  // namespace gentrig
