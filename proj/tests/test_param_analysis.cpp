#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "gentrig/param_analysis.hpp"
#include "oracles/frozen_values.hpp"

namespace ga = gentrig::analysis;
using ga::Axis;
using ga::Classification;
using gentrig::FnKind;
using gentrig::Params;
namespace oracle = gentrig::oracle;

namespace {

ga::ScanGrid signed_grid() {
  ga::ScanGrid g;
  g.p_values = {1.3, 2.0, 3.0, 5.0};
  g.q_values = {1.3, 2.0, 3.0, 5.0};
  g.y_values = {0.1, 0.3, 0.5, 0.7, 0.9};
  return g;
}

double rel(double a, double b) { return std::fabs(a - b) / std::max(1e-300, std::fabs(b)); }

}  // namespace

TEST(ParamDerivative, ClosedFormsMatchReference) {
  EXPECT_LT(rel(ga::param_derivative_closed(FnKind::Sin, Axis::P, Params(2.0, 3.0), 0.7), oracle::kDpSin_2_3_0p7),
            1e-6);
  EXPECT_LT(rel(ga::param_derivative_closed(FnKind::Sin, Axis::Q, Params(2.0, 3.0), 0.7), oracle::kDqSin_2_3_0p7),
            1e-6);
  EXPECT_LT(rel(ga::param_derivative_closed(FnKind::Sinh, Axis::P, Params(1.5, 2.5), 0.8),
                oracle::kDpSinh_1p5_2p5_0p8),
            1e-6);
  EXPECT_LT(rel(ga::param_derivative_closed(FnKind::Cosh, Axis::P, Params(1.7, 2.2), 0.88),
                oracle::kDpCosh_1p7_2p2_0p88),
            1e-6);
}

TEST(ParamDerivative, FiniteDifferencesMatchReference) {
  const double cos_p = ga::param_derivative_fd(FnKind::Cos, Axis::P, Params(2.5, 1.5), 0.7, 1, ga::kFirstStep, false);
  EXPECT_LT(rel(cos_p, oracle::kDpCos_2p5_1p5_0p7), 1e-5);
  const double cos_q = ga::param_derivative_fd(FnKind::Cos, Axis::Q, Params(2.5, 1.5), 0.7, 1, ga::kFirstStep, false);
  EXPECT_LT(rel(cos_q, oracle::kDqCos_2p5_1p5_0p7), 1e-5);
  const double cosh_q =
      ga::param_derivative_fd(FnKind::Cosh, Axis::Q, Params(1.7, 2.2), 0.88, 1, ga::kFirstStep, false);
  EXPECT_LT(rel(cosh_q, oracle::kDqCosh_1p7_2p2_0p88), 1e-5);
}

TEST(ParamDerivative, ClosedAgreesWithFiniteDifferences) {
  for (double p : {1.5, 2.0, 3.0}) {
    for (double q : {1.5, 2.0, 3.0}) {
      for (double y : {0.2, 0.5, 0.8}) {
        const Params pq(p, q);
        for (auto [kind, axis] : {std::pair{FnKind::Sin, Axis::P}, std::pair{FnKind::Sin, Axis::Q},
                                  std::pair{FnKind::Sinh, Axis::P}, std::pair{FnKind::Sinh, Axis::Q},
                                  std::pair{FnKind::Cosh, Axis::P}}) {
          const double c = ga::param_derivative_closed(kind, axis, pq, y);
          const double f = ga::param_derivative_fd(kind, axis, pq, y, 1, ga::kFirstStep, false);
          EXPECT_LE(std::fabs(c - f), std::max(1e-5, 1e-3 * std::fabs(c)))
              << gentrig::to_string(kind) << " " << ga::to_string(axis) << " p=" << p << " q=" << q << " y=" << y;
        }
      }
    }
  }
}

TEST(ParamDerivative, UnsupportedPair) {
  EXPECT_THROW(ga::param_derivative_closed(FnKind::Arcsin, Axis::Q, Params(2.0, 3.0), 0.5), gentrig::UnsupportedError);
}

TEST(ParamDerivative, SinhQChangesSignAtFixedX) {
  const double a = ga::param_derivative_closed_at_x(FnKind::Sinh, Axis::Q, Params(5.0, 3.0), 1.3);
  const double b = ga::param_derivative_closed_at_x(FnKind::Sinh, Axis::Q, Params(5.0, 5.0), 1.3);
  EXPECT_LT(rel(a, oracle::kDqSinhAtX_5_3), 1e-6);
  EXPECT_LT(rel(b, oracle::kDqSinhAtX_5_5), 1e-6);
  EXPECT_LT(a, 0.0);
  EXPECT_GT(b, 0.0);
}

TEST(Monotonicity, StatedSigns) {
  struct Case {
    FnKind kind;
    Axis axis;
    int sign;
  };
  const Case cases[] = {{FnKind::Sin, Axis::P, 1},   {FnKind::Sin, Axis::Q, 1},   {FnKind::Sinh, Axis::P, -1},
                        {FnKind::Cosh, Axis::P, -1}, {FnKind::Tamh, Axis::P, -1}, {FnKind::Tam, Axis::P, 1},
                        {FnKind::Tamh, Axis::Q, 1}};
  for (const auto& c : cases) {
    const auto r = ga::scan_monotonicity(c.kind, c.axis, signed_grid());
    EXPECT_EQ(r.failures, 0u) << gentrig::to_string(c.kind);
    for (const auto& pt : r.points) {
      EXPECT_EQ(pt.estimate > 0.0 ? 1 : -1, c.sign)
          << gentrig::to_string(c.kind) << " " << ga::to_string(c.axis) << " p=" << pt.point.p
          << " q=" << pt.point.q << " y=" << pt.point.y;
    }
    EXPECT_TRUE(r.monotone());
  }
}

TEST(Monotonicity, CoshOrderingReverses) {
  // Crossing of q -> cosh_{1.7,q}(y) between y = 0.88 and y = 0.99.
  const double ref88[] = {oracle::kCosh_1p7_1p5_0p88, oracle::kCosh_1p7_2_0p88, oracle::kCosh_1p7_2p5_0p88,
                          oracle::kCosh_1p7_3_0p88};
  const double ref99[] = {oracle::kCosh_1p7_1p5_0p99, oracle::kCosh_1p7_2_0p99, oracle::kCosh_1p7_2p5_0p99,
                          oracle::kCosh_1p7_3_0p99};
  const double qs[] = {1.5, 2.0, 2.5, 3.0};
  bool reversed = false;
  for (int i = 0; i < 4; ++i) {
    EXPECT_LT(rel(gentrig::cosh_pq(Params(1.7, qs[i]), 0.88), ref88[i]), 1e-12);
    EXPECT_LT(rel(gentrig::cosh_pq(Params(1.7, qs[i]), 0.99), ref99[i]), 1e-12);
    for (int j = i + 1; j < 4; ++j) {
      const bool a = gentrig::cosh_pq(Params(1.7, qs[i]), 0.88) < gentrig::cosh_pq(Params(1.7, qs[j]), 0.88);
      const bool b = gentrig::cosh_pq(Params(1.7, qs[i]), 0.99) < gentrig::cosh_pq(Params(1.7, qs[j]), 0.99);
      const bool ra = ref88[i] < ref88[j];
      const bool rb = ref99[i] < ref99[j];
      EXPECT_EQ(a, ra);
      EXPECT_EQ(b, rb);
      if (ra != rb) reversed = true;
    }
  }
  EXPECT_TRUE(reversed);
}

TEST(Monotonicity, WitnessesOfNonMonotonicity) {
  ga::ScanGrid wide;
  wide.p_values = {1.1, 1.2, 1.5, 2.0, 3.0, 5.0, 8.0, 12.0};
  wide.q_values = {1.1, 1.2, 1.5, 2.0, 3.0, 5.0, 8.0, 12.0};
  wide.y_values = {0.05, 0.3, 0.7, 0.99, 1.2, 1.4};
  for (auto [kind, axis] : {std::pair{FnKind::Cos, Axis::P}, std::pair{FnKind::Cos, Axis::Q},
                            std::pair{FnKind::Cosh, Axis::Q}, std::pair{FnKind::Tam, Axis::Q}}) {
    const auto r = ga::scan_monotonicity(kind, axis, wide);
    EXPECT_FALSE(r.counterexamples.empty()) << gentrig::to_string(kind) << " " << ga::to_string(axis);
  }
  ga::ScanGrid at_x;
  at_x.p_values = {5.0};
  at_x.q_values = {1.5, 2.0, 3.0, 4.0, 5.0, 6.0};
  at_x.y_values = {1.3};
  at_x.fixed_x = true;
  const auto r = ga::scan_monotonicity(FnKind::Sinh, Axis::Q, at_x);
  EXPECT_FALSE(r.counterexamples.empty());
  EXPECT_FALSE(r.monotone());
}

TEST(Convexity, SinConcaveInPAndQ) {
  for (Axis axis : {Axis::P, Axis::Q}) {
    const auto r = ga::classify_convexity(FnKind::Sin, axis, signed_grid(), false);
    EXPECT_EQ(r.failures, 0u);
    EXPECT_EQ(r.disagreements, 0u);
    EXPECT_LT(static_cast<double>(r.indeterminate), 0.05 * r.points.size());
    for (const auto& pt : r.points) {
      ASSERT_TRUE(pt.certificate.has_value());
      EXPECT_NE(pt.certificate->classification, Classification::Convex);
      EXPECT_LE(pt.estimate, ga::kConvexityNoise);
    }
  }
}

TEST(Convexity, SinhLogConvexInP) {
  const auto r = ga::classify_convexity(FnKind::Sinh, Axis::P, signed_grid(), true);
  EXPECT_EQ(r.failures, 0u);
  EXPECT_EQ(r.disagreements, 0u);
  EXPECT_LT(static_cast<double>(r.indeterminate), 0.05 * r.points.size());
  ASSERT_TRUE(r.uniform_classification().has_value());
  EXPECT_EQ(*r.uniform_classification(), Classification::LogConvex);
}

TEST(Convexity, ConjugateTamhLogConcave) {
  ga::ScanGrid g;
  g.p_values = {1.3, 1.6, 2.0, 2.5, 3.0, 4.0, 5.0};
  g.y_values = {0.1, 0.3, 0.5, 0.7, 0.9};
  g.conjugate = true;
  const auto r = ga::classify_convexity(FnKind::Tamh, Axis::P, g, true);
  EXPECT_EQ(r.failures, 0u);
  EXPECT_LT(static_cast<double>(r.indeterminate), 0.05 * r.points.size());
  ASSERT_TRUE(r.uniform_classification().has_value());
  EXPECT_EQ(*r.uniform_classification(), Classification::LogConcave);
  for (const auto& pt : r.points) {
    ASSERT_TRUE(pt.certificate && pt.certificate->discriminant_d1);
    EXPECT_LT(*pt.certificate->discriminant_d1, 0.0);
  }
}

TEST(ConvexityConditions, CertifiedSigns) {
  EXPECT_GE(ga::corollary_lhs(1, Params(2.0, 2.0), 0.5), 0.0);
  EXPECT_GE(ga::corollary_lhs(3, Params(1.5, 2.5), 0.8), 0.0);
  EXPECT_NEAR(ga::corollary_lhs(2, Params(2.0, 3.0), 1e-6), 0.0, 1e-9);
  for (double p : {1.3, 2.0, 3.0}) {
    for (double q : {1.3, 2.0, 3.0}) {
      for (double x : {0.2, 0.5, 0.8}) {
        EXPECT_GE(ga::corollary_lhs(1, Params(p, q), x), -1e-7) << p << " " << q << " " << x;
        EXPECT_GE(ga::corollary_lhs(2, Params(p, q), x), -1e-7) << p << " " << q << " " << x;
        EXPECT_GE(ga::corollary_lhs(3, Params(p, q), x), -1e-7) << p << " " << q << " " << x;
      }
    }
  }
}

TEST(ConjugateDiscriminant, CoreInequality) {
  for (double p : {1.2, 2.0, 4.0, 8.0}) {
    for (int k = 1; k <= 9; ++k) {
      const double x = 0.1 * k;
      EXPECT_LT(ga::theorem2_d1(p, x), 0.0) << "p=" << p << " x=" << x;
    }
    double prev = std::fabs(ga::theorem2_d1(p, 1e-1));
    for (double x = 1e-2; x > 5e-7; x /= 10.0) {
      const double v = std::fabs(ga::theorem2_d1(p, x));
      EXPECT_LT(v, prev) << "p=" << p << " x=" << x;
      prev = v;
    }
    EXPECT_LT(prev, 1e-10);
  }
}
