#pragma once

// Cheeger constant of a convex body through |Ω_{-R}| = πR²: the Cheeger set
// is the inner parallel set at distance R grown back by a disk of radius R,
// and h = 1/R. For a Reuleaux polygon of width 1 the inner parallel set is
// the intersection of the disks of radius 1 - R centered at the vertices.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "orbiform/arcgeom.hpp"
#include "orbiform/error.hpp"
#include "orbiform/reuleaux.hpp"

namespace orbiform {

inline constexpr double kDefaultSolverTolerance = 1e-12;

// Where the Cheeger set touches the boundary arc γ_ℓ: [alpha_p, beta_p] in
// the outward-normal angles of the arc, or nothing when the inner parallel set
// has no arc centered at P_ℓ.
struct ArcContact {
  std::size_t arc = 0;
  bool empty = true;
  double alpha_p = 0.0;
  double beta_p = 0.0;

  double sweep() const { return empty ? 0.0 : beta_p - alpha_p; }
};

struct CheegerSolution {
  double R = 0.0;
  double h = 0.0;
  double a = 0.0;  // (1 - R)^2
  ArcRegion inner;
  ArcRegion cheeger_set;
  std::vector<ArcContact> contacts;

  bool has_empty_contact() const {
    for (const ArcContact& c : contacts) {
      if (c.empty) return true;
    }
    return false;
  }
};

inline ArcRegion inner_parallel(const ReuleauxPolygon& poly, double R) {
  const double r = poly.inradius();
  if (!(R >= 0.0) || R > r + 1e-15) {
    throw Error(ErrorCode::kDomain, "inner parallel distance must lie in [0, r], got " + std::to_string(R));
  }
  if (R >= r) return ArcRegion::degenerate({0.0, 0.0});
  return disk_intersection(poly.vertices(), 1.0 - R);
}

// Bisection for the root of |Ω_{-R}| - πR² on [0, r]. inner_area(R) must be
// nonincreasing, so the difference changes sign exactly once.
template <class InnerArea>
double solve_cheeger_radius(InnerArea&& inner_area, double inradius, double tol = kDefaultSolverTolerance) {
  if (!(tol > 0.0)) throw Error(ErrorCode::kInvalidArgument, "solver tolerance must be positive");
  if (!(inradius > 0.0)) throw Error(ErrorCode::kDomain, "inradius must be positive");
  double lo = 0.0;
  double hi = inradius;
  for (int iter = 0; iter < 400 && hi - lo > tol; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (inner_area(mid) - kPi * mid * mid > 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

inline double cheeger_radius(const ReuleauxPolygon& poly, double tol = kDefaultSolverTolerance) {
  return solve_cheeger_radius([&](double R) { return area(inner_parallel(poly, R)); }, poly.inradius(), tol);
}

// Same solver on an arbitrary intersection of equal disks; a single center
// gives the disk, whose Cheeger radius is half its radius.
inline double cheeger_radius_of_disks(std::span<const Point> centers, double radius,
                                      double tol = kDefaultSolverTolerance) {
  if (centers.empty()) throw Error(ErrorCode::kInvalidArgument, "no disks given");
  const Circle hull = min_enclosing_circle(centers);
  const double r = radius - hull.radius;
  if (!(r > 0.0)) throw Error(ErrorCode::kEmptyRegion, "disk intersection has empty interior");
  return solve_cheeger_radius(
      [&](double R) {
        if (R >= r) return 0.0;
        return area(disk_intersection(centers, radius - R));
      },
      r, tol);
}

namespace detail {

inline std::vector<ArcContact> contacts_from_inner(const ReuleauxPolygon& poly, const ArcRegion& inner) {
  std::vector<ArcContact> contacts(poly.size());
  for (std::size_t k = 0; k < poly.size(); ++k) contacts[k].arc = k;
  for (const CircArc& arc : inner.arcs()) {
    if (arc.tag < 0) continue;
    const auto k = static_cast<std::size_t>(arc.tag);
    const double half = 0.5 * poly.arc_length(static_cast<long>(k));
    const double lo = poly.alpha(static_cast<long>(k));
    ArcContact& c = contacts[k];
    c.empty = false;
    c.alpha_p = lo + half + wrap_pi(arc.start - lo - half);
    c.beta_p = c.alpha_p + arc.sweep;
  }
  return contacts;
}

}  // namespace detail

inline CheegerSolution cheeger_set(const ReuleauxPolygon& poly, double tol = kDefaultSolverTolerance) {
  CheegerSolution sol;
  sol.R = cheeger_radius(poly, tol);
  sol.h = 1.0 / sol.R;
  sol.a = (1.0 - sol.R) * (1.0 - sol.R);
  sol.inner = inner_parallel(poly, sol.R);
  sol.cheeger_set = minkowski_disk_sum(sol.inner, sol.R);
  sol.contacts = detail::contacts_from_inner(poly, sol.inner);
  return sol;
}

inline std::pair<double, double> contact_angles(const ReuleauxPolygon& poly, const CheegerSolution& sol,
                                                std::size_t arc) {
  if (arc >= poly.size() || arc >= sol.contacts.size()) {
    throw Error(ErrorCode::kInvalidIndex, "arc index " + std::to_string(arc) + " out of range");
  }
  const ArcContact& c = sol.contacts[arc];
  if (c.empty) throw Error(ErrorCode::kEmptyContact, "arc " + std::to_string(arc + 1) + " has no contact");
  return {c.alpha_p, c.beta_p};
}

// U(x) = arcsin(sin x / √a).
inline double aux_U(double x, double a) {
  const double s = std::sin(x) / std::sqrt(a);
  if (std::abs(s) > 1.0 + 1e-15) throw Error(ErrorCode::kDomain, "U argument outside [-1, 1]");
  return std::asin(std::clamp(s, -1.0, 1.0));
}

// Contact endpoints from the vertex angles alone: the inner arc centered at
// P_ℓ meets its neighbours at the apex of the isosceles triangle built on the
// chord between P_ℓ and P_{ℓ∓2}.
inline std::pair<double, double> contact_angles_closed_form(const ReuleauxPolygon& poly, double R, std::size_t arc) {
  if (arc >= poly.size()) throw Error(ErrorCode::kInvalidIndex, "arc index out of range");
  const long l = static_cast<long>(arc);
  const double a = (1.0 - R) * (1.0 - R);
  const double ra = std::sqrt(a);
  auto recess = [&](double j) { return std::cos(j / 2.0) - ra * std::cos(aux_U(j / 2.0, a)); };

  const double jp = poly.arc_length(l + 1);
  const double jm = poly.arc_length(l - 1);
  const Point at_alpha = polar(1.0, poly.alpha(l)) - polar(recess(jp), poly.alpha(l) - jp / 2.0);
  const Point at_beta = polar(1.0, poly.beta(l)) - polar(recess(jm), poly.beta(l) + jm / 2.0);
  const double lo = poly.alpha(l);
  const double alpha_p = lo + wrap_pi(angle_of(at_alpha) - lo);
  const double beta_p = poly.beta(l) + wrap_pi(angle_of(at_beta) - poly.beta(l));
  return {alpha_p, beta_p};
}

struct UpperBounds {
  double area_bound = 0.0;      // π / |Ω|
  double inradius_bound = 0.0;  // 2 / r
};

inline UpperBounds upper_bounds(const ReuleauxPolygon& poly) {
  return {kPi / area(poly.region()), 2.0 / poly.inradius()};
}

// Inner parallel area of the Reuleaux triangle at distance R, written out from
// the three-arc structure of the inner set.
inline double triangle_inner_area(double R) {
  const double outer = 1.0 - R;
  const double alpha = std::acos(-1.0 / (2.0 * outer));
  const double y = outer * std::sin(alpha) - 1.0 / (2.0 * std::sqrt(3.0));
  const double j = 2.0 * (5.0 * kPi / 6.0 - alpha);
  return 1.5 * (std::sqrt(3.0) / 2.0 * y * y + outer * outer * (j - std::sin(j)));
}

struct TriangleCheeger {
  double R = 0.0;
  double h = 0.0;
};

inline TriangleCheeger triangle_closed_form(double tol = kDefaultSolverTolerance) {
  const double R = solve_cheeger_radius(triangle_inner_area, 1.0 - 1.0 / std::sqrt(3.0), tol);
  return {R, 1.0 / R};
}

}  // namespace orbiform
