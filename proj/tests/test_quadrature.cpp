#include <cmath>
#include <limits>
#include <numbers>

#include <gtest/gtest.h>

#include "gentrig/gen_trig.hpp"
#include "gentrig/quadrature.hpp"
#include "oracles/frozen_values.hpp"

namespace gq = gentrig::quad;
using gentrig::FnKind;
using gentrig::Params;
namespace oracle = gentrig::oracle;

TEST(Integrate, SmoothIntegrands) {
  const auto r = gq::integrate([](double t) { return std::cos(t); }, 0.0, 1.0);
  EXPECT_TRUE(r.converged);
  EXPECT_NEAR(r.value, std::sin(1.0), 1e-14);
  EXPECT_LE(r.error_estimate, 1e-10);
  EXPECT_NEAR(gq::integrate([](double t) { return std::exp(-t); }, 0.0, 30.0).value, -std::expm1(-30.0), 1e-13);
}

TEST(Integrate, InfiniteUpperLimit) {
  const auto r = gq::integrate([](double t) { return 1.0 / (1.0 + t * t); }, 0.0, std::numeric_limits<double>::infinity());
  EXPECT_NEAR(r.value, std::numbers::pi / 2.0, 1e-10);
}

TEST(Integrate, RejectsBadInterval) {
  auto f = [](double t) { return t; };
  EXPECT_THROW(gq::integrate(f, 1.0, 0.0), gentrig::DomainError);
  EXPECT_THROW(gq::integrate(f, -std::numeric_limits<double>::infinity(), 0.0), gentrig::DomainError);
}

TEST(Integrate, PanelCapRaisesConvergenceError) {
  auto f = [](double t) { return std::sin(1.0 / t); };
  EXPECT_THROW(gq::integrate(f, 1e-6, 1.0, 1e-14, 3), gentrig::ConvergenceError);
}

TEST(IntegrateSingular, AlgebraicEndpoints) {
  // int_0^1 t^{-1/2} dt = 2
  const auto lo = gq::integrate_singular([](double t) { return 1.0 / std::sqrt(t); }, 0.0, 1.0,
                                         gq::SingularEnd::Lower, -0.5);
  EXPECT_NEAR(lo.value, 2.0, 1e-12);
  // int_0^1 (1-t)^{-0.9} dt = 10, using the distance argument
  const auto hi = gq::integrate_singular([](double, double d) { return std::pow(d, -0.9); }, 0.0, 1.0,
                                         gq::SingularEnd::Upper, -0.9);
  EXPECT_NEAR(hi.value, 10.0, 1e-9);
  // int_0^1 (t(1-t))^{-1/2} dt = pi
  const auto both = gq::integrate_singular([](double t) { return 1.0 / std::sqrt(t * (1.0 - t)); }, 0.0,
                                           1.0, gq::SingularEnd::Both, -0.5);
  EXPECT_NEAR(both.value, std::numbers::pi, 1e-10);
}

TEST(IntegrateSingular, RejectsNonIntegrableHint) {
  auto f = [](double t) { return 1.0 / t; };
  EXPECT_THROW(gq::integrate_singular(f, 0.0, 1.0, gq::SingularEnd::Lower, -1.0), gentrig::DomainError);
}

TEST(DefiningIntegral, MatchesReferenceValues) {
  EXPECT_NEAR(gq::defining_integral(FnKind::Arcsin, Params(3.0, 3.0), 1.0).value,
              gentrig::half_pi_pq(Params(3.0, 3.0)), 1e-10);
  EXPECT_NEAR(gq::defining_integral(FnKind::Arcsin, Params(3.0, 1.5), 0.5).value, oracle::kArcsin_3_1p5_0p5,
              1e-12);
  EXPECT_NEAR(gq::defining_integral(FnKind::Arccos, Params(2.5, 1.8), 0.6).value, oracle::kArccos_2p5_1p8_0p6,
              1e-10);
  EXPECT_NEAR(gq::defining_integral(FnKind::Arcsinh, Params(2.0, 4.0), 3.7).value, oracle::kArcsinh_2_4_3p7,
              1e-12);
  EXPECT_NEAR(gq::defining_integral(FnKind::Arccosh, Params(1.7, 2.2), 1.9).value,
              oracle::kArccosh_1p7_2p2_1p9, 1e-10);
  EXPECT_NEAR(gq::defining_integral(FnKind::Arctam, Params(1.5, 2.5), 0.8).value, oracle::kArctam_1p5_2p5_0p8,
              1e-12);
  EXPECT_NEAR(gq::defining_integral(FnKind::Arctamh, Params(3.0, 1.5), 0.7).value,
              oracle::kArctamh_3_1p5_0p7, 1e-11);
}

TEST(DefiningIntegral, ClassicalCase) {
  const Params two(2.0, 2.0);
  EXPECT_NEAR(gq::defining_integral(FnKind::Arcsin, two, 0.5).value, std::asin(0.5), 1e-13);
  EXPECT_NEAR(gq::defining_integral(FnKind::Arccos, two, 0.3).value, std::acos(0.3), 1e-10);
  EXPECT_NEAR(gq::defining_integral(FnKind::Arcsinh, two, 2.0).value, std::asinh(2.0), 1e-13);
  EXPECT_NEAR(gq::defining_integral(FnKind::Arccosh, two, 3.0).value, std::acosh(3.0), 1e-10);
}

TEST(DefiningIntegral, Errors) {
  const Params pq(2.0, 3.0);
  EXPECT_THROW(gq::defining_integral(FnKind::Sin, pq, 0.5), gentrig::DomainError);
  EXPECT_THROW(gq::defining_integral(FnKind::Arcsin, pq, 1.5), gentrig::DomainError);
  EXPECT_THROW(gq::defining_integral(FnKind::Arccosh, pq, 0.5), gentrig::DomainError);
  // tamh kernel exponent 1 + 1/q - 1/p >= 1 diverges at x = 1
  EXPECT_THROW(gq::defining_integral(FnKind::Arctamh, Params(3.0, 1.5), 1.0), gentrig::DomainError);
}
