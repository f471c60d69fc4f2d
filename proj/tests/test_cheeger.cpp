#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "orbiform/blaschke.hpp"
#include "orbiform/cheeger.hpp"
#include "orbiform/constants.hpp"
#include "orbiform/reuleaux.hpp"

using namespace orbiform;

namespace {

// Root of |inner(R)| - πR² on [lo, hi], by golden-ratio bracket shrinking,
// assuming one sign change.
double golden_root(const ReuleauxPolygon& p, double lo, double hi) {
  auto f = [&](double R) { return area(inner_parallel(p, R)) - kPi * R * R; };
  const double g = (std::sqrt(5.0) - 1.0) / 2.0;
  for (int i = 0; i < 200 && hi - lo > 1e-14; ++i) {
    const double m = hi - g * (hi - lo);
    (f(m) > 0.0 ? lo : hi) = m;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

TEST(CheegerRadius, TriangleGenericAndClosedForm) {
  const double R = cheeger_radius(regular(1));
  const TriangleCheeger t = triangle_closed_form();
  EXPECT_GE(R, constants::kTriangleRadiusLo);
  EXPECT_LE(R, constants::kTriangleRadiusHi);
  EXPECT_NEAR(R, t.R, 1e-9);
  EXPECT_GE(t.h, constants::kTriangleCheegerLo);
}

TEST(CheegerRadius, PentagonAgreesWithIndependentRootFinder) {
  const ReuleauxPolygon p = regular(2);
  const double R = cheeger_radius(p);
  EXPECT_NEAR(R, golden_root(p, 1e-6, p.inradius()), 1e-10);
}

TEST(CheegerRadius, DiskScaling) {
  for (double w : {0.5, 1.0, 2.0}) {
    const std::vector<Point> c{{0.1, -0.3}};
    const double R = cheeger_radius_of_disks(c, w / 2.0);
    EXPECT_NEAR(R, w / 4.0, 1e-10) << w;
  }
}

TEST(CheegerRadius, SetAreaOverPerimeter) {
  for (int seed = 1; seed <= 15; ++seed) {
    const ReuleauxPolygon p = random_polygon(1 + seed % 4, 40, seed);
    const CheegerSolution s = cheeger_set(p);
    EXPECT_NEAR(s.h, 1.0 / s.R, 1e-12);
    EXPECT_NEAR(perimeter(s.cheeger_set) / area(s.cheeger_set), s.h, 1e-8);
    EXPECT_NEAR(area(s.inner), kPi * s.R * s.R, 1e-9);
    EXPECT_NEAR(s.a, (1.0 - s.R) * (1.0 - s.R), 1e-15);
    EXPECT_LT(s.R, p.inradius());
  }
}

TEST(CheegerRadius, CheegerConstantBoundedByTriangle) {
  const double triangle = 1.0 / cheeger_radius(regular(1));
  for (int n = 2; n <= 9; ++n) EXPECT_LT(1.0 / cheeger_radius(regular(n)), triangle);
}

TEST(CheegerRadius, RegularSequenceDecreasesTowardDisk) {
  double prev = 1e9;
  for (int n = 1; n <= 9; ++n) {
    const double h = 1.0 / cheeger_radius(regular(n));
    EXPECT_LT(h, prev);
    EXPECT_GT(h, 4.0);
    prev = h;
  }
}

TEST(CheegerRadius, InnerAreaMonotoneOnGrid) {
  const ReuleauxPolygon p = random_polygon(3, 50, 5);
  double prev = 1e9;
  for (int i = 0; i <= 100; ++i) {
    const double R = p.inradius() * i / 100.0;
    const double a = area(inner_parallel(p, R));
    EXPECT_LE(a, prev + 1e-15);
    prev = a;
  }
  EXPECT_NEAR(prev, 0.0, 1e-12);
}

TEST(CheegerRadius, InnerParallelDomain) {
  EXPECT_THROW(inner_parallel(regular(1), -0.1), Error);
  EXPECT_THROW(inner_parallel(regular(1), 0.9), Error);
}

TEST(Contacts, TileTheBoundaryOfTheInnerSet) {
  for (int seed = 1; seed <= 20; ++seed) {
    const ReuleauxPolygon p = random_polygon(1 + seed % 4, 40, seed);
    const CheegerSolution s = cheeger_set(p);
    double sweep = 0.0;
    for (const ArcContact& c : s.contacts) {
      sweep += c.sweep();
      if (c.empty) continue;
      // Contact stays inside its boundary arc.
      EXPECT_GE(c.alpha_p, p.alpha(static_cast<long>(c.arc)) - 1e-12);
      EXPECT_LE(c.beta_p, p.beta(static_cast<long>(c.arc)) + 1e-12);
    }
    EXPECT_NEAR(sweep * (1.0 - s.R), perimeter(s.inner), 1e-9);
    EXPECT_NEAR(perimeter(s.cheeger_set), perimeter(s.inner) + kTwoPi * s.R, 1e-9);
  }
}

TEST(Contacts, MatchClosedForm) {
  for (int seed = 1; seed <= 20; ++seed) {
    const ReuleauxPolygon p = random_polygon(1 + seed % 4, 40, seed);
    const CheegerSolution s = cheeger_set(p);
    for (std::size_t k = 0; k < p.size(); ++k) {
      if (s.contacts[k].empty) continue;
      const auto [lo, hi] = contact_angles(p, s, k);
      const auto [clo, chi] = contact_angles_closed_form(p, s.R, k);
      EXPECT_NEAR(lo, clo, 1e-9);
      EXPECT_NEAR(hi, chi, 1e-9);
    }
  }
}

TEST(Contacts, InvalidIndex) {
  const ReuleauxPolygon p = regular(1);
  const CheegerSolution s = cheeger_set(p);
  try {
    contact_angles(p, s, 7);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidIndex);
  }
}

TEST(Contacts, RegularPolygonsSymmetric) {
  for (int n = 1; n <= 5; ++n) {
    const CheegerSolution s = cheeger_set(regular(n));
    for (const ArcContact& c : s.contacts) {
      EXPECT_FALSE(c.empty);
      EXPECT_NEAR(c.sweep(), s.contacts[0].sweep(), 1e-10);
    }
  }
}

TEST(UpperBounds, Triangle) {
  const UpperBounds u = upper_bounds(regular(1));
  EXPECT_NEAR(u.area_bound, constants::kTriangleAreaBound, 1e-4);
  EXPECT_NEAR(u.inradius_bound, constants::kTriangleInradiusBound, 1e-3);
  EXPECT_GT(u.area_bound, 1.0 / cheeger_radius(regular(1)));
}

TEST(UpperBounds, DominateCheegerConstant) {
  for (int seed = 1; seed <= 20; ++seed) {
    const ReuleauxPolygon p = random_polygon(1 + seed % 5, 40, seed);
    const double h = 1.0 / cheeger_radius(p);
    const UpperBounds u = upper_bounds(p);
    EXPECT_GE(u.area_bound, h);
    EXPECT_GE(u.inradius_bound, h);
  }
}

TEST(AuxU, SmallArgumentLimit) {
  EXPECT_NEAR(aux_U(0.0, 0.6), 0.0, 1e-15);
}
