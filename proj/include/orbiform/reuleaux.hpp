#pragma once

// Reuleaux polygons of width 1.
//
// Vertices use the star labeling P_0 .. P_{n-1} (n = 2N+1, indices taken
// mod n): P_{k+1} = P_k + e^{i alpha_k} and P_{k-1} = P_k + e^{i beta_k}. The
// boundary arc centered at P_k runs counterclockwise from alpha_k to beta_k
// and joins P_{k+1} to P_{k-1}; its length is j_k = beta_k - alpha_k. Walking
// the boundary counterclockwise visits the arcs k, k-2, k-4, ...
//
// Indices are zero-based in code; external formats print them one-based.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "orbiform/arcgeom.hpp"
#include "orbiform/error.hpp"

namespace orbiform {

inline constexpr double kWidthTolerance = 1e-9;

class ReuleauxPolygon {
 public:
  // Validates the labeled vertex list and translates it so that the incircle
  // is centered at the origin.
  static ReuleauxPolygon from_vertices(std::vector<Point> vertices) {
    const std::size_t n = vertices.size();
    if (n % 2 == 0) {
      throw Error(ErrorCode::kEvenVertexCount, "a Reuleaux polygon has an odd vertex count, got " + std::to_string(n));
    }
    if (n < 3) throw Error(ErrorCode::kInvalidArgument, "a Reuleaux polygon needs at least 3 vertices");
    for (const Point& p : vertices) {
      if (!std::isfinite(p.x) || !std::isfinite(p.y)) throw Error(ErrorCode::kInvalidArgument, "non-finite vertex");
    }

    for (std::size_t i = 0; i < n; ++i) {
      int diametral = 0;
      for (std::size_t k = 0; k < n; ++k) {
        if (k == i) continue;
        const double d = distance(vertices[i], vertices[k]);
        if (d > 1.0 + kWidthTolerance) {
          throw Error(ErrorCode::kWidthViolation, "vertices " + std::to_string(i + 1) + " and " +
                                                       std::to_string(k + 1) + " are " + std::to_string(d) +
                                                       " apart (width 1 exceeded)");
        }
        if (d >= 1.0 - kWidthTolerance) ++diametral;
      }
      if (diametral < 2) {
        throw Error(ErrorCode::kWidthViolation,
                    "vertex " + std::to_string(i + 1) + " has fewer than two vertices at distance 1");
      }
    }

    ReuleauxPolygon poly;
    poly.alpha_.resize(n);
    poly.beta_.resize(n);
    poly.length_.resize(n);
    double total = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      const Point next = vertices[(k + 1) % n];
      const Point prev = vertices[(k + n - 1) % n];
      const double dn = distance(next, vertices[k]);
      if (std::abs(dn - 1.0) > kWidthTolerance) {
        throw Error(ErrorCode::kAdjacencyViolation,
                    "consecutive vertices " + std::to_string(k + 1) + "," + std::to_string((k + 1) % n + 1) +
                        " are not at distance 1");
      }
      const double a = angle_of(next - vertices[k]);
      const double j = wrap_two_pi(angle_of(prev - vertices[k]) - a);
      if (!(j > 0.0) || j >= kPi) {
        throw Error(ErrorCode::kAdjacencyViolation,
                    "arc " + std::to_string(k + 1) + " is not counterclockwise (labeling orientation)");
      }
      poly.alpha_[k] = a;
      poly.length_[k] = j;
      poly.beta_[k] = a + j;
      total += j;
    }
    if (std::abs(total - kPi) > kWidthTolerance) {
      throw Error(ErrorCode::kClosureViolation, "arc lengths sum to " + std::to_string(total) + ", expected π");
    }

    const Circle outer = min_enclosing_circle(vertices);
    for (Point& p : vertices) p = p - outer.center;
    poly.vertices_ = std::move(vertices);
    poly.inradius_ = 1.0 - outer.radius;
    return poly;
  }

  std::size_t size() const { return vertices_.size(); }
  int half_count() const { return static_cast<int>(vertices_.size() / 2); }

  std::size_t index(long k) const {
    const long n = static_cast<long>(vertices_.size());
    return static_cast<std::size_t>(((k % n) + n) % n);
  }

  std::span<const Point> vertices() const { return vertices_; }
  Point vertex(long k) const { return vertices_[index(k)]; }
  double alpha(long k) const { return alpha_[index(k)]; }
  double beta(long k) const { return beta_[index(k)]; }
  double arc_length(long k) const { return length_[index(k)]; }
  std::span<const double> alphas() const { return alpha_; }
  std::span<const double> betas() const { return beta_; }
  std::span<const double> arc_lengths() const { return length_; }

  // r = 1 - circumradius, valid for every body of constant width 1.
  double inradius() const { return inradius_; }
  double circumradius() const { return 1.0 - inradius_; }

  double min_arc_length() const { return *std::min_element(length_.begin(), length_.end()); }
  double max_arc_length() const { return *std::max_element(length_.begin(), length_.end()); }

  // Arc indices in counterclockwise boundary order, starting with the last one.
  std::vector<std::size_t> boundary_order() const {
    std::vector<std::size_t> order;
    const long n = static_cast<long>(size());
    for (long i = 0; i < n; ++i) order.push_back(index(n - 1 - 2 * i));
    return order;
  }

  ArcRegion region() const {
    std::vector<CircArc> arcs;
    for (std::size_t k : boundary_order()) {
      arcs.push_back(CircArc{vertices_[k], 1.0, alpha_[k], length_[k], static_cast<int>(k)});
    }
    return ArcRegion::from_arcs(std::move(arcs));
  }

 private:
  ReuleauxPolygon() = default;

  std::vector<Point> vertices_;
  std::vector<double> alpha_;
  std::vector<double> beta_;
  std::vector<double> length_;
  double inradius_ = 0.0;
};

// Inradius of the regular Reuleaux (2N+1)-gon of width 1.
inline double regular_inradius(int half_count) {
  if (half_count < 1) throw Error(ErrorCode::kInvalidArgument, "regular polygon needs N >= 1");
  return 1.0 - 1.0 / (2.0 * std::cos(kPi / (2.0 * (2 * half_count + 1))));
}

// Regular Reuleaux (2N+1)-gon of width 1 centered at the origin. For N = 1 the
// vertices are (1/√3) e^{i 11π/6}, (1/√3) e^{iπ/2}, (1/√3) e^{i 7π/6}.
inline ReuleauxPolygon regular(int half_count) {
  if (half_count < 1) throw Error(ErrorCode::kInvalidArgument, "regular polygon needs N >= 1");
  const int n = 2 * half_count + 1;
  const double arc = kPi / n;
  const double circumradius = 1.0 / (2.0 * std::cos(arc / 2.0));
  std::vector<Point> vertices;
  for (int k = 0; k < n; ++k) {
    vertices.push_back(polar(circumradius, -kPi / 2.0 + arc + k * (kPi - arc)));
  }
  return ReuleauxPolygon::from_vertices(std::move(vertices));
}

inline double inradius(const ReuleauxPolygon& poly) { return poly.inradius(); }

// Distance from the incenter (origin) to the arc centered at P_k.
inline double distance_to_arc(const ReuleauxPolygon& poly, std::size_t k) {
  const Point p = poly.vertex(static_cast<long>(k));
  const double toward = wrap_two_pi(angle_of(-p) - poly.alpha(static_cast<long>(k)));
  if (toward <= poly.arc_length(static_cast<long>(k))) return 1.0 - norm(p);
  const double a = norm(poly.vertex(static_cast<long>(k) + 1));
  const double b = norm(poly.vertex(static_cast<long>(k) - 1));
  return std::min(a, b);
}

struct ContactPoint {
  std::size_t arc = 0;  // index of the tangent arc
  double angle = 0.0;   // polar angle of the contact point, in [0, 2π)
};

// Boundary points on the incircle, one per tangent arc, ordered by arc index.
inline std::vector<ContactPoint> contact_points(const ReuleauxPolygon& poly, double tol = 1e-9) {
  if (!(tol > 0.0)) throw Error(ErrorCode::kInvalidArgument, "contact tolerance must be positive");
  std::vector<ContactPoint> contacts;
  for (std::size_t k = 0; k < poly.size(); ++k) {
    const Point p = poly.vertex(static_cast<long>(k));
    const double direction = angle_of(-p);
    const double offset = wrap_two_pi(direction - poly.alpha(static_cast<long>(k)) + tol) - tol;
    if (offset < -tol || offset > poly.arc_length(static_cast<long>(k)) + tol) continue;
    if (1.0 - norm(p) <= poly.inradius() + tol) contacts.push_back({k, wrap_two_pi(direction)});
  }
  return contacts;
}

// One of the three primary sectors [t_i, t_{i-1} + π] cut by three contact
// points M_1, M_2, M_3 (counterclockwise, not in a common half-plane).
struct Sector {
  std::array<double, 3> contact_angles{};  // t_1, t_2, t_3
  std::array<std::size_t, 3> contact_arcs{};
  int which = 1;       // i, in 1..3
  double start = 0.0;  // t_i
  double end = 0.0;    // t_{i-1} + π, unwrapped so that end > start
  double length = 0.0;
  int m = 1;
  // Outward-normal angles where the boundary switches arc, between start and
  // end: the end of the arc carrying M_i, then (start, end) of each following
  // arc. Unwrapped and strictly increasing.
  std::vector<double> interior_angles;
};

namespace detail {

inline double min_cyclic_gap(std::array<double, 3> t) {
  std::sort(t.begin(), t.end());
  return std::min({t[1] - t[0], t[2] - t[1], kTwoPi - (t[2] - t[0])});
}

inline Sector build_sector(const ReuleauxPolygon& poly, const std::array<ContactPoint, 3>& m, int which) {
  const ContactPoint& first = m[static_cast<std::size_t>((which + 1) % 3)];  // M_{i-1}
  const ContactPoint& second = m[static_cast<std::size_t>(which - 1)];      // M_i
  Sector s;
  for (std::size_t q = 0; q < 3; ++q) {
    s.contact_angles[q] = m[q].angle;
    s.contact_arcs[q] = m[q].arc;
  }
  s.which = which;
  s.start = second.angle;
  s.end = s.start + wrap_two_pi(first.angle + kPi - s.start);
  s.length = s.end - s.start;

  // Walk the boundary from the arc of M_i to the arc ending at P_a, where a is
  // the arc carrying M_{i-1}.
  const long n = static_cast<long>(poly.size());
  const std::size_t last = poly.index(static_cast<long>(first.arc) + 1);
  long arc = static_cast<long>(second.arc);
  double cursor = s.start;
  auto push = [&](double raw) {
    cursor += wrap_two_pi(raw - cursor);
    s.interior_angles.push_back(cursor);
  };
  push(poly.beta(arc));
  int steps = 0;
  while (poly.index(arc) != last) {
    arc -= 2;
    if (++steps > n) throw Error(ErrorCode::kContactDeficit, "sector walk did not terminate");
    push(poly.alpha(arc));
    push(poly.beta(arc));
  }
  s.m = steps + 1;
  if (s.interior_angles.back() >= s.end) {
    throw Error(ErrorCode::kContactDeficit, "inconsistent sector structure");
  }
  return s;
}

}  // namespace detail

// The three primary sectors. With more than three contact points, the triple
// maximizing the smallest angular gap is used (lowest arc indices on ties).
inline std::array<Sector, 3> sectors(const ReuleauxPolygon& poly, double tol = 1e-9) {
  const std::vector<ContactPoint> contacts = contact_points(poly, tol);
  if (contacts.size() < 3) {
    throw Error(ErrorCode::kContactDeficit, "found " + std::to_string(contacts.size()) + " contact points");
  }
  double best_gap = -1.0;
  std::array<ContactPoint, 3> best{};
  for (std::size_t a = 0; a < contacts.size(); ++a) {
    for (std::size_t b = a + 1; b < contacts.size(); ++b) {
      for (std::size_t c = b + 1; c < contacts.size(); ++c) {
        const double gap = detail::min_cyclic_gap({contacts[a].angle, contacts[b].angle, contacts[c].angle});
        if (gap > best_gap + 1e-12) {
          best_gap = gap;
          best = {contacts[a], contacts[b], contacts[c]};
        }
      }
    }
  }
  std::sort(best.begin(), best.end(), [](const ContactPoint& l, const ContactPoint& r) { return l.angle < r.angle; });
  const double largest = std::max({best[1].angle - best[0].angle, best[2].angle - best[1].angle,
                                   kTwoPi - (best[2].angle - best[0].angle)});
  if (largest >= kPi) throw Error(ErrorCode::kContactDeficit, "contact points lie in a common half-plane");
  return {detail::build_sector(poly, best, 1), detail::build_sector(poly, best, 2),
          detail::build_sector(poly, best, 3)};
}

// r = 1 - (Σ_k (-1)^{k-1} cos x_k) / sin u, evaluated in the frame where the
// sector ends at angle π/2.
inline double inradius_from_sector(const Sector& sector) {
  const double s = std::sin(sector.length);
  if (std::abs(s) < 1e-12) throw Error(ErrorCode::kDegenerateSector, "sector length has vanishing sine");
  const double rotation = kPi / 2.0 - sector.end;
  double alternating = 0.0;
  double sign = 1.0;
  for (double x : sector.interior_angles) {
    alternating += sign * std::cos(x + rotation);
    sign = -sign;
  }
  return 1.0 - alternating / s;
}

// Lower bound on the length of any sector of a polygon with inradius r.
inline double sector_length_lower_bound(double r) {
  const double lo = 1.0 - 1.0 / std::sqrt(3.0);
  if (r < lo - 1e-12 || r >= 0.5) {
    throw Error(ErrorCode::kDomain, "sector bound needs r in [1-1/√3, 1/2), got " + std::to_string(r));
  }
  r = std::max(r, lo);
  const double outer = 1.0 - r;
  const double tangent_arc = 2.0 * std::atan(std::sqrt(std::max(0.0, 4.0 * outer * outer - 1.0)));
  return 2.0 * (std::sqrt(1.0 - 2.0 * r) + r * (tangent_arc - std::acos(r / outer)));
}

}  // namespace orbiform
