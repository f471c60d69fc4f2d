#include <cmath>
#include <numeric>
#include <vector>

#include <gtest/gtest.h>

#include "orbiform/blaschke.hpp"
#include "orbiform/constants.hpp"
#include "orbiform/reuleaux.hpp"

using namespace orbiform;

namespace {

ErrorCode code_of(std::vector<Point> v) {
  try {
    ReuleauxPolygon::from_vertices(std::move(v));
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an error";
  return ErrorCode::kInvalidArgument;
}

}  // namespace

TEST(Regular, ArcLengthsAndWidth) {
  for (int n = 1; n <= 9; ++n) {
    const ReuleauxPolygon p = regular(n);
    const double j = kPi / (2 * n + 1);
    ASSERT_EQ(p.size(), static_cast<std::size_t>(2 * n + 1));
    for (std::size_t k = 0; k < p.size(); ++k) {
      const long i = static_cast<long>(k);
      EXPECT_NEAR(p.arc_length(i), j, 1e-13);
      EXPECT_NEAR(distance(p.vertex(i), p.vertex(i + 1)), 1.0, 1e-13);
    }
    EXPECT_NEAR(p.inradius(), regular_inradius(n), 1e-13);
    EXPECT_NEAR(perimeter(p.region()), kPi, 1e-12);
  }
}

TEST(Regular, TriangleInradius) {
  EXPECT_NEAR(regular(1).inradius(), 1.0 - 1.0 / std::sqrt(3.0), 1e-15);
  EXPECT_NEAR(regular(1).circumradius(), 1.0 / std::sqrt(3.0), 1e-15);
}

TEST(Regular, AreaOfReuleauxTriangle) {
  EXPECT_NEAR(area(regular(1).region()), (kPi - std::sqrt(3.0)) / 2.0, 1e-14);
}

TEST(Regular, RejectsNonPositiveCount) {
  EXPECT_THROW(regular(0), Error);
}

TEST(FromVertices, StarLabelingAngles) {
  const ReuleauxPolygon p = random_polygon(3, 40, 7);
  for (std::size_t k = 0; k < p.size(); ++k) {
    const long i = static_cast<long>(k);
    const Point next = p.vertex(i) + polar(1.0, p.alpha(i));
    const Point prev = p.vertex(i) + polar(1.0, p.beta(i));
    EXPECT_NEAR(distance(next, p.vertex(i + 1)), 0.0, 1e-12);
    EXPECT_NEAR(distance(prev, p.vertex(i - 1)), 0.0, 1e-12);
    EXPECT_NEAR(p.beta(i) - p.alpha(i), p.arc_length(i), 1e-12);
  }
}

TEST(FromVertices, ArcLengthsSumToPi) {
  for (int seed = 1; seed <= 30; ++seed) {
    const ReuleauxPolygon p = random_polygon(1 + seed % 6, 40, seed);
    const auto j = p.arc_lengths();
    EXPECT_NEAR(std::accumulate(j.begin(), j.end(), 0.0), kPi, 1e-12);
    EXPECT_GT(p.min_arc_length(), 0.0);
  }
}

TEST(FromVertices, CentersAtCircumcenter) {
  const ReuleauxPolygon p = random_polygon(2, 40, 3);
  const Circle c = min_enclosing_circle(p.vertices());
  EXPECT_NEAR(norm(c.center), 0.0, 1e-12);
  EXPECT_NEAR(c.radius, p.circumradius(), 1e-12);
}

TEST(FromVertices, Errors) {
  EXPECT_EQ(code_of({{0.0, 0.0}, {1.0, 0.0}}), ErrorCode::kEvenVertexCount);
  EXPECT_EQ(code_of({{0.0, 0.0}, {0.9, 0.0}, {0.45, 0.779422863405995}}), ErrorCode::kWidthViolation);
  // Vertices listed in boundary order rather than star order.
  const ReuleauxPolygon pent = regular(2);
  std::vector<Point> shuffled;
  for (long i = 0; i < 5; ++i) shuffled.push_back(pent.vertex(2 * i));
  const ErrorCode c = code_of(shuffled);
  EXPECT_TRUE(c == ErrorCode::kAdjacencyViolation || c == ErrorCode::kWidthViolation) << to_string(c);
}

TEST(FromVertices, TooFewVertices) {
  EXPECT_THROW(ReuleauxPolygon::from_vertices({{0.0, 0.0}}), Error);
}

TEST(Inradius, DistanceToArcsAttainsInradius) {
  for (int seed = 1; seed <= 30; ++seed) {
    const ReuleauxPolygon p = random_polygon(1 + seed % 5, 40, seed);
    double least = 1e9;
    for (std::size_t k = 0; k < p.size(); ++k) least = std::min(least, distance_to_arc(p, k));
    EXPECT_NEAR(least, p.inradius(), 1e-12);
    EXPECT_NEAR(inradius(p) + p.circumradius(), 1.0, 1e-15);
  }
}

TEST(Inradius, SampledBoundaryStaysOutsideIncircle) {
  const ReuleauxPolygon p = random_polygon(3, 60, 12);
  const ArcRegion region = p.region();
  for (int i = 0; i < 2000; ++i) {
    EXPECT_GE(norm(boundary_point(region, i / 2000.0)), p.inradius() - 1e-12);
  }
}

TEST(Contacts, RegularHasOnePerArc) {
  for (int n = 1; n <= 5; ++n) {
    EXPECT_EQ(contact_points(regular(n)).size(), static_cast<std::size_t>(2 * n + 1));
  }
}

TEST(Contacts, RandomPolygonsHaveAtLeastTwo) {
  for (int seed = 1; seed <= 30; ++seed) {
    EXPECT_GE(contact_points(random_polygon(2, 40, seed)).size(), 2u);
  }
}

TEST(Contacts, BadTolerance) {
  EXPECT_THROW(contact_points(regular(1), 0.0), Error);
}

TEST(Sectors, TriangleSectors) {
  const auto s = sectors(regular(1));
  double total = 0.0;
  for (const Sector& sec : s) {
    total += sec.length;
    EXPECT_NEAR(sec.length, kPi / 3.0, 1e-12);
    EXPECT_NEAR(inradius_from_sector(sec), regular(1).inradius(), 1e-12);
  }
  // Gaps between contact points add up to 2π, so the lengths add up to π.
  EXPECT_NEAR(total, kPi, 1e-12);
}

TEST(Sectors, InradiusRecoveredOnRegular) {
  for (int n = 1; n <= 6; ++n) {
    const ReuleauxPolygon p = regular(n);
    for (const Sector& sec : sectors(p)) EXPECT_NEAR(inradius_from_sector(sec), p.inradius(), 1e-12) << n;
  }
}

TEST(Sectors, LengthsSumToPi) {
  for (int n = 1; n <= 6; ++n) {
    double total = 0.0;
    for (const Sector& sec : sectors(regular(n))) total += sec.length;
    EXPECT_NEAR(total, kPi, 1e-12);
  }
}

TEST(Sectors, LengthLowerBoundAtThreshold) {
  const double v = sector_length_lower_bound(constants::kInradiusThreshold);
  EXPECT_GE(v, constants::kSectorLengthLo);
  EXPECT_LE(v, 0.9927);
  EXPECT_LE(kPi - 2.0 * v, constants::kSectorLengthHi);
}

TEST(BoundaryOrder, CoversEveryArcOnce) {
  const ReuleauxPolygon p = regular(4);
  auto order = p.boundary_order();
  std::sort(order.begin(), order.end());
  for (std::size_t k = 0; k < order.size(); ++k) EXPECT_EQ(order[k], k);
}
