#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "orbiform/blaschke.hpp"
#include "orbiform/cheeger.hpp"
#include "orbiform/constants.hpp"
#include "orbiform/reuleaux.hpp"

using namespace orbiform;

TEST(Deform, PreservesWidthStructure) {
  const ReuleauxPolygon p = regular(2);
  for (long k = 0; k < 5; ++k) {
    const ReuleauxPolygon q = deform(p, k, 0.03);
    for (long i = 0; i < 5; ++i) EXPECT_NEAR(distance(q.vertex(i), q.vertex(i + 1)), 1.0, 1e-12);
    EXPECT_NEAR(perimeter(q.region()), kPi, 1e-12);
  }
}

TEST(Deform, RotatesEdgeDirection) {
  const ReuleauxPolygon p = random_polygon(3, 30, 4);
  const ReuleauxPolygon q = deform(p, 2, 0.01);
  EXPECT_NEAR(q.alpha(1), p.alpha(1) + 0.01, 1e-12);
}

TEST(Deform, OnlyFourArcsChange) {
  const ReuleauxPolygon p = random_polygon(3, 30, 8);
  const long k = 3;
  const ReuleauxPolygon q = deform(p, k, -0.015);
  for (long i = 0; i < 7; ++i) {
    const long off = ((i - k) % 7 + 7) % 7;
    if (off <= 2 || off == 6) continue;
    EXPECT_NEAR(q.arc_length(i), p.arc_length(i), 1e-12) << i;
  }
}

TEST(Deform, Reversible) {
  for (int seed = 1; seed <= 20; ++seed) {
    const ReuleauxPolygon p = random_polygon(2 + seed % 3, 30, seed);
    const long k = seed % static_cast<long>(p.size());
    const ReuleauxPolygon back = deform(deform(p, k, 0.012), k, -0.012);
    for (long i = 0; i < static_cast<long>(p.size()); ++i) {
      EXPECT_NEAR(back.arc_length(i), p.arc_length(i), 1e-11);
    }
  }
}

TEST(Deform, TriangleRejected) {
  try {
    deform(regular(1), 0, 0.01);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidArgument);
  }
}

TEST(Deform, CollapseReported) {
  try {
    deform(regular(2), 0, 1.5);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kArcCollapse);
  }
}

TEST(Deform, BadIndex) {
  EXPECT_THROW(deform(regular(2), 5, 0.01), Error);
  EXPECT_THROW(deform(regular(2), -1, 0.01), Error);
}

TEST(NormalSpeed, MatchesFiniteDifferenceOfSupport) {
  // The boundary near angle s moves along the outward normal by eps * V(s).
  const ReuleauxPolygon p = random_polygon(2, 30, 21);
  const long k = 1;
  const double eps = 1e-6;
  const ReuleauxPolygon q = deform(p, k, eps);
  // Both polygons are recentered; P_{k-1} stays put, so it fixes the shift.
  const Point shift = q.vertex(k - 1) - p.vertex(k - 1);
  for (long arc : {k, k + 1}) {
    const double s = p.alpha(arc) + 0.5 * p.arc_length(arc);
    const Point n = polar(1.0, s);
    EXPECT_NEAR(dot(q.vertex(arc) - shift - p.vertex(arc), n) / eps, normal_speed(p, k, arc, s), 1e-5) << arc;
  }
  const double s = p.alpha(k + 3) + 0.5 * p.arc_length(k + 3);
  EXPECT_EQ(normal_speed(p, k, k + 3, s), 0.0);
}

TEST(NormalSpeed, AngleOutsideArc) {
  const ReuleauxPolygon p = regular(2);
  EXPECT_THROW(normal_speed(p, 0, 0, p.beta(0) + 0.3), Error);
}

TEST(RandomPolygon, DeterministicAndValid) {
  const ReuleauxPolygon a = random_polygon(3, 50, 42);
  const ReuleauxPolygon b = random_polygon(3, 50, 42);
  for (long i = 0; i < 7; ++i) EXPECT_EQ(a.arc_length(i), b.arc_length(i));
  EXPECT_GE(a.min_arc_length(), kMinArcLength);
  EXPECT_THROW(random_polygon(2, -1, 1), Error);
}

TEST(ShapeDerivative, AgreesWithFiniteDifferences) {
  for (int seed = 1; seed <= 6; ++seed) {
    const ReuleauxPolygon p = random_polygon(2 + seed % 3, 40, seed);
    for (long k = 0; k < static_cast<long>(p.size()); ++k) {
      const double eps = 1e-5;
      const double fd =
          (1.0 / cheeger_radius(deform(p, k, eps)) - 1.0 / cheeger_radius(deform(p, k, -eps))) / (2.0 * eps);
      const double d = shape_derivative(p, k).value;
      EXPECT_NEAR(fd, d, 1e-3 * std::max(std::abs(d), 1e-2)) << seed << " " << k;
    }
  }
}

TEST(ShapeDerivative, VanishesOnRegular) {
  for (int n = 2; n <= 6; ++n) {
    const ReuleauxPolygon p = regular(n);
    for (long k = 0; k < static_cast<long>(p.size()); ++k) EXPECT_NEAR(shape_derivative(p, k).value, 0.0, 1e-12);
  }
}

TEST(ShapeDerivative, ResidualIsScaledBracket) {
  const ReuleauxPolygon p = random_polygon(3, 40, 9);
  const CheegerSolution sol = cheeger_set(p);
  const AuxParams params = AuxParams::from_radius(sol.R);
  for (long k = 0; k < 7; ++k) {
    const ShapeDerivative d = shape_derivative(p, sol, k);
    if (d.empty_k || d.empty_next) continue;
    EXPECT_NEAR(optimality_residual(p, k, params), std::sqrt(sol.a) * std::sin(p.arc_length(k + 1)) * d.bracket,
                1e-12);
  }
}

TEST(Criticality, RegularResidualZero) {
  for (int n = 2; n <= 9; ++n) {
    const ReuleauxPolygon p = regular(n);
    EXPECT_LE(max_abs_residual(p, cheeger_set(p)), 1e-14) << n;
  }
}

TEST(Criticality, PerturbedPentagonNonzero) {
  const ReuleauxPolygon p = deform(regular(2), 0, 0.05);
  EXPECT_GT(max_abs_residual(p, cheeger_set(p)), 1e-5);
}

TEST(AuxParams, Domain) {
  EXPECT_THROW(AuxParams::from_radius(0.0), Error);
  EXPECT_THROW(AuxParams::from_radius(0.6), Error);
}

TEST(AuxU, CubicBands) {
  // U(x) - x/(1-R) = c x^3 with c in [0.1284, 0.1831] for R up to 0.228; just
  // past it the upper end fails near x = π/6.
  auto coef = [](double x, double R) {
    return (aux_U(x, AuxParams::from_radius(R)) - x / (1.0 - R)) / (x * x * x);
  };
  for (double R : {constants::kCandidateRadiusLo, 0.22, 0.228}) {
    for (int i = 1; i <= 200; ++i) {
      const double x = kPi / 6.0 * i / 200.0;
      EXPECT_GE(coef(x, R), constants::kUCubicLo) << R << " " << x;
      EXPECT_LE(coef(x, R), constants::kUCubicHi) << R << " " << x;
    }
  }
  EXPECT_GT(coef(kPi / 6.0, constants::kTriangleRadiusHi), constants::kUCubicHi);
}

TEST(Ascent, PentagonClimbsToBoundary) {
  const DeformationTrajectory t = local_maximize(deform(regular(2), 0, 0.05));
  ASSERT_FALSE(t.steps.empty());
  for (std::size_t i = 1; i < t.steps.size(); ++i) EXPECT_GE(t.steps[i].h, t.steps[i - 1].h - 1e-12);
  EXPECT_LT(t.final_h(), 1.0 / cheeger_radius(regular(1)));
}

TEST(Ascent, TriangleHasNoDeformation) {
  const DeformationTrajectory t = local_maximize(regular(1));
  EXPECT_EQ(t.reason, Termination::kNoDeformation);
  EXPECT_EQ(to_string(t.reason), "no-deformation");
}
