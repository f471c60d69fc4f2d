#pragma once

// Convex planar regions bounded by circular arcs.
//
// Every region handled here is convex and each boundary arc bends outward, so
// an arc is fully described by its circle and the counterclockwise angular
// interval [start, start + sweep]. The angle parameter of a point on such an
// arc is also the direction of the outward normal there, which is what makes
// ordering, filleting and Minkowski sums straightforward.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "orbiform/error.hpp"

namespace orbiform {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Absolute tolerance for chain closure and turning checks (width-1 scale).
inline constexpr double kClosureTolerance = 1e-9;
// Arcs shorter than this (in radians) are treated as tangencies and dropped.
inline constexpr double kTangencySweep = 1e-12;

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
  friend Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
  friend Point operator-(Point a) { return {-a.x, -a.y}; }
  friend Point operator*(double s, Point a) { return {s * a.x, s * a.y}; }
  friend Point operator*(Point a, double s) { return {s * a.x, s * a.y}; }
  friend Point operator/(Point a, double s) { return {a.x / s, a.y / s}; }
  friend bool operator==(const Point&, const Point&) = default;
};

inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point a) { return std::hypot(a.x, a.y); }
inline double distance(Point a, Point b) { return norm(a - b); }
inline double angle_of(Point a) { return std::atan2(a.y, a.x); }

// Point at the given polar coordinates, i.e. radius * e^{i angle}.
inline Point polar(double radius, double angle) {
  return {radius * std::cos(angle), radius * std::sin(angle)};
}

inline Point rotate(Point p, double angle) {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  return {c * p.x - s * p.y, s * p.x + c * p.y};
}

// Maps an angle into [0, 2π).
inline double wrap_two_pi(double angle) {
  double w = std::fmod(angle, kTwoPi);
  if (w < 0.0) w += kTwoPi;
  if (w >= kTwoPi) w -= kTwoPi;
  return w;
}

// Maps an angle into [-π, π).
inline double wrap_pi(double angle) { return wrap_two_pi(angle + kPi) - kPi; }

struct CircArc {
  Point center;
  double radius = 0.0;
  double start = 0.0;  // unnormalized
  double sweep = 0.0;  // counterclockwise, in (0, 2π]
  int tag = -1;        // index of the generating disk, when there is one

  double end() const { return start + sweep; }
  double length() const { return radius * sweep; }
  Point point_at(double angle) const { return center + polar(radius, angle); }
  Point start_point() const { return point_at(start); }
  Point end_point() const { return point_at(end()); }
};

// A closed convex region whose boundary is a counterclockwise chain of arcs.
// A region collapsed to a single point keeps an empty chain and remembers the
// point; its area and perimeter are zero.
class ArcRegion {
 public:
  // The point region at the origin.
  ArcRegion() = default;

  static ArcRegion from_arcs(std::vector<CircArc> arcs) {
    ArcRegion region;
    region.arcs_ = std::move(arcs);
    region.validate();
    if (!region.arcs_.empty()) region.point_ = region.arcs_.front().start_point();
    return region;
  }

  static ArcRegion degenerate(Point p) {
    ArcRegion region;
    region.point_ = p;
    return region;
  }

  static ArcRegion disk(Point center, double radius) {
    if (!(radius > 0.0)) throw Error(ErrorCode::kInvalidArgument, "disk radius must be positive");
    return from_arcs({CircArc{center, radius, 0.0, kTwoPi}});
  }

  bool is_degenerate() const { return arcs_.empty(); }
  std::span<const CircArc> arcs() const { return arcs_; }
  std::size_t size() const { return arcs_.size(); }
  // For a degenerate region: the point it collapsed to. Otherwise the start of
  // the first arc.
  Point anchor() const { return point_; }

 private:
  void validate() const {
    if (arcs_.empty()) throw Error(ErrorCode::kMalformedRegion, "empty arc chain");
    double turning = 0.0;
    const std::size_t n = arcs_.size();
    for (std::size_t i = 0; i < n; ++i) {
      const CircArc& arc = arcs_[i];
      if (!std::isfinite(arc.center.x) || !std::isfinite(arc.center.y) || !std::isfinite(arc.start) ||
          !std::isfinite(arc.sweep) || !std::isfinite(arc.radius)) {
        throw Error(ErrorCode::kMalformedRegion, "non-finite arc data at index " + std::to_string(i));
      }
      if (arc.radius < 0.0) throw Error(ErrorCode::kMalformedRegion, "negative radius at index " + std::to_string(i));
      if (!(arc.sweep > 0.0) || arc.sweep > kTwoPi + kClosureTolerance) {
        throw Error(ErrorCode::kMalformedRegion, "sweep outside (0, 2π] at index " + std::to_string(i));
      }
      const CircArc& next = arcs_[(i + 1) % n];
      const double gap = distance(arc.end_point(), next.start_point());
      if (gap > kClosureTolerance) {
        throw Error(ErrorCode::kMalformedRegion,
                    "chain not closed after arc " + std::to_string(i) + " (gap " + std::to_string(gap) + ")");
      }
      const double corner = wrap_pi(next.start - arc.end());
      if (corner < -kClosureTolerance) {
        throw Error(ErrorCode::kMalformedRegion, "boundary turns clockwise after arc " + std::to_string(i));
      }
      turning += arc.sweep + corner;
    }
    if (std::abs(turning - kTwoPi) > kClosureTolerance) {
      throw Error(ErrorCode::kMalformedRegion, "total turning " + std::to_string(turning) + " differs from 2π");
    }
  }

  std::vector<CircArc> arcs_;
  Point point_;
};

// Area by the chord polygon through the arc endpoints plus one circular
// segment per arc.
inline double area(const ArcRegion& region) {
  if (region.is_degenerate()) return 0.0;
  const auto arcs = region.arcs();
  double twice_polygon = 0.0;
  double segments = 0.0;
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    const CircArc& arc = arcs[i];
    const Point a = arc.start_point();
    const Point b = arc.end_point();
    const Point c = arcs[(i + 1) % arcs.size()].start_point();
    twice_polygon += cross(a, b) + cross(b, c);
    segments += 0.5 * arc.radius * arc.radius * (arc.sweep - std::sin(arc.sweep));
  }
  return 0.5 * twice_polygon + segments;
}

inline double perimeter(const ArcRegion& region) {
  double total = 0.0;
  for (const CircArc& arc : region.arcs()) total += arc.length();
  return total;
}

inline ArcRegion rigid_motion(const ArcRegion& region, double rotation, Point shift) {
  if (region.is_degenerate()) return ArcRegion::degenerate(rotate(region.anchor(), rotation) + shift);
  std::vector<CircArc> moved(region.arcs().begin(), region.arcs().end());
  for (CircArc& arc : moved) {
    arc.center = rotate(arc.center, rotation) + shift;
    arc.start += rotation;
  }
  return ArcRegion::from_arcs(std::move(moved));
}

// Boundary point at arc-length fraction t in [0, 1).
inline Point boundary_point(const ArcRegion& region, double t) {
  if (region.is_degenerate()) return region.anchor();
  double target = wrap_two_pi(t * kTwoPi) / kTwoPi * perimeter(region);
  for (const CircArc& arc : region.arcs()) {
    const double len = arc.length();
    if (target <= len || &arc == &region.arcs().back()) {
      const double angle = arc.radius > 0.0 ? arc.start + std::min(target / arc.radius, arc.sweep) : arc.start;
      return arc.point_at(angle);
    }
    target -= len;
  }
  return region.anchor();
}

struct Circle {
  Point center;
  double radius = 0.0;
};

namespace detail {

inline bool covers(const Circle& c, Point p) {
  return distance(c.center, p) <= c.radius * (1.0 + 1e-14) + 1e-15;
}

inline Circle circle_through(Point a, Point b) { return {(a + b) / 2.0, distance(a, b) / 2.0}; }

inline Circle circle_through(Point a, Point b, Point c) {
  const Point ab = b - a;
  const Point ac = c - a;
  const double d = 2.0 * cross(ab, ac);
  if (std::abs(d) < 1e-300) {
    // Collinear: the widest pair decides.
    Circle best = circle_through(a, b);
    for (const Circle& cand : {circle_through(a, c), circle_through(b, c)}) {
      if (cand.radius > best.radius) best = cand;
    }
    return best;
  }
  const double ab2 = dot(ab, ab);
  const double ac2 = dot(ac, ac);
  const Point offset{(ac.y * ab2 - ab.y * ac2) / d, (ab.x * ac2 - ac.x * ab2) / d};
  return {a + offset, norm(offset)};
}

}  // namespace detail

// Smallest enclosing circle (Welzl's incremental scheme without shuffling).
inline Circle min_enclosing_circle(std::span<const Point> points) {
  if (points.empty()) throw Error(ErrorCode::kInvalidArgument, "min_enclosing_circle needs at least one point");
  Circle c{points[0], 0.0};
  for (std::size_t i = 1; i < points.size(); ++i) {
    if (detail::covers(c, points[i])) continue;
    c = {points[i], 0.0};
    for (std::size_t j = 0; j < i; ++j) {
      if (detail::covers(c, points[j])) continue;
      c = detail::circle_through(points[i], points[j]);
      for (std::size_t k = 0; k < j; ++k) {
        if (detail::covers(c, points[k])) continue;
        c = detail::circle_through(points[i], points[j], points[k]);
      }
    }
  }
  return c;
}

// Intersection of the equal-radius disks B(center_k, radius).
//
// Throws kEmptyRegion when the disks have no common point. When the common
// part is a single point (all disks pass through the enclosing-circle center)
// the result is degenerate. Each arc carries the index of its disk in `tag`.
inline ArcRegion disk_intersection(std::span<const Point> centers, double radius) {
  if (centers.empty()) throw Error(ErrorCode::kInvalidArgument, "disk_intersection needs at least one center");
  if (!(radius >= 0.0)) throw Error(ErrorCode::kInvalidArgument, "negative disk radius");

  const Circle hull = min_enclosing_circle(centers);
  if (hull.radius > radius + 1e-12) {
    throw Error(ErrorCode::kEmptyRegion, "disks of radius " + std::to_string(radius) + " do not intersect");
  }
  if (hull.radius >= radius - 1e-14) return ArcRegion::degenerate(hull.center);

  struct Interval {
    double lo;
    double hi;
  };
  std::vector<CircArc> arcs;
  for (std::size_t i = 0; i < centers.size(); ++i) {
    bool duplicate = false;
    for (std::size_t k = 0; k < i; ++k) duplicate = duplicate || distance(centers[k], centers[i]) < 1e-15;
    if (duplicate) continue;

    // The part of circle i inside disk j is an arc of half-width at most π/2,
    // so the running intersection stays a single interval.
    bool bounded = false;
    bool empty = false;
    Interval iv{0.0, kTwoPi};
    for (std::size_t j = 0; j < centers.size() && !empty; ++j) {
      const Point d = centers[j] - centers[i];
      const double dist = norm(d);
      if (dist < 1e-15) continue;
      const double half = std::acos(std::clamp(dist / (2.0 * radius), -1.0, 1.0));
      double mid = angle_of(d);
      if (!bounded) {
        iv = {mid - half, mid + half};
        bounded = true;
        continue;
      }
      const double ref = 0.5 * (iv.lo + iv.hi);
      mid = ref + wrap_pi(mid - ref);
      iv.lo = std::max(iv.lo, mid - half);
      iv.hi = std::min(iv.hi, mid + half);
      empty = iv.hi - iv.lo < kTangencySweep;
    }
    if (empty) continue;
    arcs.push_back(CircArc{centers[i], radius, iv.lo, iv.hi - iv.lo, static_cast<int>(i)});
  }
  if (arcs.empty()) return ArcRegion::degenerate(hull.center);

  for (CircArc& arc : arcs) {
    const double s = wrap_two_pi(arc.start);
    arc.start = s;
  }
  std::sort(arcs.begin(), arcs.end(), [](const CircArc& a, const CircArc& b) { return a.start < b.start; });
  return ArcRegion::from_arcs(std::move(arcs));
}

// Minkowski sum with the closed disk of radius rho: every arc grows by rho
// around its own center and each corner is filled with a radius-rho arc.
inline ArcRegion minkowski_disk_sum(const ArcRegion& region, double rho) {
  if (rho < 0.0) throw Error(ErrorCode::kInvalidArgument, "minkowski_disk_sum needs rho >= 0");
  if (region.is_degenerate()) {
    if (rho == 0.0) return region;
    return ArcRegion::disk(region.anchor(), rho);
  }
  if (rho == 0.0) return region;
  const auto arcs = region.arcs();
  std::vector<CircArc> out;
  out.reserve(2 * arcs.size());
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    CircArc grown = arcs[i];
    grown.radius += rho;
    out.push_back(grown);
    const CircArc& next = arcs[(i + 1) % arcs.size()];
    const double corner = wrap_pi(next.start - arcs[i].end());
    if (corner > kTangencySweep) {
      out.push_back(CircArc{arcs[i].end_point(), rho, arcs[i].end(), corner, -1});
    }
  }
  return ArcRegion::from_arcs(std::move(out));
}

}  // namespace orbiform
