#pragma once

// Least area of a width-1 body with prescribed inradius r, for r between the
// Reuleaux triangle value 1 - 1/√3 and 1/2.
//
// With r_{2N-1} < r <= r_{2N+1} the optimum is a Reuleaux (2N+1)-gon with all
// vertices but one on the outercircle (radius 1 - r): 2N - 2 arcs of length
// ℓ(r) tangent to the incircle, one arc of length a(r) centered at the inner
// vertex, and the two arcs of length b(r) through the inner vertex.

#include <cmath>
#include <string>
#include <vector>

#include "orbiform/arcgeom.hpp"
#include "orbiform/error.hpp"
#include "orbiform/reuleaux.hpp"

namespace orbiform {

inline double triangle_inradius() { return 1.0 - 1.0 / std::sqrt(3.0); }

inline void require_inradius_domain(double r) {
  if (!(r >= triangle_inradius() - 1e-12) || r > 0.5) {
    throw Error(ErrorCode::kDomain, "inradius must lie in [1-1/√3, 1/2], got " + std::to_string(r));
  }
}

// Length of a unit arc centered on the outercircle with both endpoints on it.
inline double ell(double r) {
  require_inradius_domain(r);
  const double outer = 1.0 - r;
  return 2.0 * std::atan(std::sqrt(std::max(0.0, 4.0 * outer * outer - 1.0)));
}

// N with r_{2N-1} < r <= r_{2N+1}.
inline long band_of(double r) {
  require_inradius_domain(r);
  if (r >= 0.5) throw Error(ErrorCode::kDomain, "no polygonal band at r = 1/2");
  long n = static_cast<long>(std::ceil(kPi / ell(r)));
  if (n % 2 == 0) ++n;
  long half = std::max(1L, (n - 1) / 2);
  auto rin = [](long m) { return 1.0 - 1.0 / (2.0 * std::cos(kPi / (2.0 * static_cast<double>(2 * m + 1)))); };
  while (half > 1 && r <= rin(half - 1)) --half;
  while (r > rin(half)) ++half;
  return half;
}

// Area of the chamber between the incenter and one tangent arc.
inline double tangent_chamber(double r) {
  const double outer = 1.0 - r;
  const double l = ell(r);
  return outer * outer * std::sin(l) * std::cos(l) + (l - std::sin(l)) / 2.0;
}

// Area of the chambers of the a-arc and the two b-arcs.
inline double special_chambers(double r, double x, double a, double b) {
  const double outer = 1.0 - r;
  return outer * outer * std::sin(x) * std::cos(x) + (a - std::sin(a)) / 2.0 + b - std::sin(b) +
         outer * (std::cos(a / 2.0) - outer * std::cos(x)) * std::sin(x + ell(r));
}

struct MinAreaShape {
  double r = 0.0;
  long n = 0;
  double ell = 0.0;
  double x = 0.0;
  double a = 0.0;
  double b = 0.0;
  ReuleauxPolygon polygon;
};

struct ProfileAngles {
  long n = 0;
  double ell = 0.0;
  double x = 0.0;
  double a = 0.0;
  double b = 0.0;
};

// Angles of the band-n construction at r; n = band_of(r) is the optimal one,
// n = band_of(r) + 1 gives the limit from the right at a band edge.
inline ProfileAngles profile_angles(double r, long n) {
  if (n < 1) throw Error(ErrorCode::kDomain, "band index must be positive");
  ProfileAngles p;
  p.n = n;
  p.ell = ell(r);
  p.x = kPi / 2.0 - static_cast<double>(2 * p.n - 1) * p.ell / 2.0;
  p.a = 2.0 * std::asin(std::min(1.0, (1.0 - r) * std::sin(p.x)));
  p.b = p.x + (p.ell - p.a) / 2.0;
  return p;
}

inline ProfileAngles profile_angles(double r) { return profile_angles(r, band_of(r)); }

// Builds the optimal polygon: P_2 .. P_{2N+1} consecutive on the outercircle,
// P_1 at distance 1 from P_2 and P_{2N+1} inside the body.
inline ReuleauxPolygon min_area_polygon(double r) {
  const ProfileAngles p = profile_angles(r);
  const long count = 2 * p.n + 1;
  const double outer = 1.0 - r;
  const double step = kPi - p.ell;
  std::vector<Point> v(static_cast<std::size_t>(count));
  for (long i = 1; i < count; ++i) v[static_cast<std::size_t>(i)] = polar(outer, kPi / 2.0 + (i - 1) * step);

  const Point first = v[1];
  const Point last = v[static_cast<std::size_t>(count - 1)];
  const double d = distance(first, last);
  const Point mid = (first + last) / 2.0;
  const double lift = std::sqrt(std::max(0.0, 1.0 - d * d / 4.0));
  const Point normal = rotate((last - first) / d, kPi / 2.0);
  const Point c1 = mid + normal * lift;
  const Point c2 = mid - normal * lift;
  v[0] = norm(c1) <= norm(c2) ? c1 : c2;
  return ReuleauxPolygon::from_vertices(std::move(v));
}

inline MinAreaShape profile(double r) {
  const ProfileAngles p = profile_angles(r);
  return {r, p.n, p.ell, p.x, p.a, p.b, min_area_polygon(r)};
}

inline double min_area_band(double r, long n) {
  const ProfileAngles p = profile_angles(r, n);
  return static_cast<double>(2 * p.n - 2) * tangent_chamber(r) + special_chambers(r, p.x, p.a, p.b);
}

inline double min_area(double r) {
  require_inradius_domain(r);
  if (r >= 0.5) return kPi / 4.0;
  return min_area_band(r, band_of(r));
}

inline double min_area_inverse(double target, double tol = 1e-13) {
  const double lo_area = min_area(triangle_inradius());
  if (!(target >= lo_area - 1e-15) || !(target < kPi / 4.0)) {
    throw Error(ErrorCode::kDomain, "target area outside [(π-√3)/2, π/4)");
  }
  double lo = triangle_inradius();
  double hi = 0.5;
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (min_area(mid) < target ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace orbiform
