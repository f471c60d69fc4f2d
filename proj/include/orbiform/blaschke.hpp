#pragma once

// Blaschke deformations of Reuleaux polygons, the first variation of the
// Cheeger constant along them, and a coordinate ascent built on top.
//
// deform(p, k, eps) slides P_k along the arc centered at P_{k-1}, turning
// alpha_{k-1} by eps, and re-seats P_{k+1} on the arc centered at P_{k+2} so
// that |P_k P_{k+1}| stays 1. The circles carrying γ_k and γ_{k+1} move; γ_{k-1}
// and γ_{k+2} only change their extent.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "orbiform/arcgeom.hpp"
#include "orbiform/cheeger.hpp"
#include "orbiform/error.hpp"
#include "orbiform/reuleaux.hpp"

namespace orbiform {

inline constexpr double kMinArcLength = 0.01;
inline constexpr double kRandomStep = 0.02;

inline void require_index(const ReuleauxPolygon& poly, long k) {
  if (k < 0 || k >= static_cast<long>(poly.size())) {
    throw Error(ErrorCode::kInvalidIndex, "vertex index " + std::to_string(k) + " out of range");
  }
}

inline ReuleauxPolygon deform(const ReuleauxPolygon& poly, long k, double eps) {
  require_index(poly, k);
  if (poly.size() < 5) {
    throw Error(ErrorCode::kInvalidArgument, "the Reuleaux triangle admits no Blaschke deformation");
  }
  if (!std::isfinite(eps)) throw Error(ErrorCode::kInvalidArgument, "non-finite deformation step");
  if (eps == 0.0) return poly;

  std::vector<Point> v(poly.vertices().begin(), poly.vertices().end());
  const std::size_t ik = poly.index(k);
  const std::size_t inext = poly.index(k + 1);
  const Point moved = poly.vertex(k - 1) + polar(1.0, poly.alpha(k - 1) + eps);

  // P_{k+1} is the point at distance 1 from both the moved P_k and P_{k+2}
  // closest to where it was.
  const Point anchor = poly.vertex(k + 2);
  const double d = distance(moved, anchor);
  if (!(d > 0.0) || d > 2.0) throw Error(ErrorCode::kArcCollapse, "deformation leaves the polygon class");
  const Point mid = (moved + anchor) / 2.0;
  const double lift = std::sqrt(std::max(0.0, 1.0 - d * d / 4.0));
  const Point normal = rotate((anchor - moved) / d, kPi / 2.0);
  const Point c1 = mid + normal * lift;
  const Point c2 = mid - normal * lift;
  const Point old = poly.vertex(k + 1);
  v[ik] = moved;
  v[inext] = distance(c1, old) <= distance(c2, old) ? c1 : c2;

  try {
    return ReuleauxPolygon::from_vertices(std::move(v));
  } catch (const Error& e) {
    throw Error(ErrorCode::kArcCollapse, std::string("deformation step rejected: ") + e.what());
  }
}

// Normal component of the deformation field on arc `arc` at outward-normal
// angle s, for the move at vertex k.
inline double normal_speed(const ReuleauxPolygon& poly, long k, long arc, double s) {
  require_index(poly, k);
  require_index(poly, arc);
  const double offset = wrap_two_pi(s - poly.alpha(arc) + 1e-12) - 1e-12;
  if (offset < -1e-12 || offset > poly.arc_length(arc) + 1e-12) {
    throw Error(ErrorCode::kDomain, "angle outside arc " + std::to_string(arc + 1));
  }
  if (poly.index(arc) == poly.index(k)) return std::sin(s - poly.alpha(k - 1));
  if (poly.index(arc) == poly.index(k + 1)) {
    return -std::sin(poly.arc_length(k)) / std::sin(poly.arc_length(k + 1)) * std::sin(s - poly.alpha(k + 1));
  }
  return 0.0;
}

// Random walk of admissible Blaschke moves starting from the regular polygon.
inline ReuleauxPolygon random_polygon(int half_count, int steps, std::uint64_t seed) {
  if (steps < 0) throw Error(ErrorCode::kInvalidArgument, "step count must be nonnegative");
  ReuleauxPolygon poly = regular(half_count);
  if (poly.size() < 5) return poly;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> pick(0, static_cast<long>(poly.size()) - 1);
  std::uniform_real_distribution<double> step(-kRandomStep, kRandomStep);
  for (int i = 0; i < steps; ++i) {
    for (int attempt = 0;; ++attempt) {
      if (attempt > 10000) throw Error(ErrorCode::kNonConvergence, "no admissible random move found");
      const long k = pick(rng);
      const double eps = step(rng);
      try {
        ReuleauxPolygon next = deform(poly, k, eps);
        if (next.min_arc_length() < kMinArcLength) continue;
        poly = std::move(next);
        break;
      } catch (const Error&) {
        continue;
      }
    }
  }
  return poly;
}

struct AuxParams {
  double R = 0.0;
  double a = 0.0;

  static AuxParams from_radius(double R) {
    if (!(R > 0.0) || !(R < 0.5)) throw Error(ErrorCode::kDomain, "Cheeger radius must lie in (0, 1/2)");
    return {R, (1.0 - R) * (1.0 - R)};
  }
};

inline double aux_U(double x, const AuxParams& p) { return aux_U(x, p.a); }

inline double aux_G(double x, const AuxParams& p) {
  const double s = std::sin(x);
  return s * s + std::cos(x) * std::sqrt(std::max(0.0, p.a - s * s));
}

inline double aux_F(double x, double y, const AuxParams& p) {
  return std::sqrt(p.a) * std::cos(2.0 * x + y - aux_U(y, p));
}

inline double aux_H(double x, double y, double z, const AuxParams& p) {
  return std::sin(2.0 * z) * (aux_G(x, p) - aux_F(y, z, p));
}

inline double optimality_residual(const ReuleauxPolygon& poly, long k, const AuxParams& p) {
  require_index(poly, k);
  auto half = [&](long i) { return 0.5 * poly.arc_length(i); };
  return aux_H(half(k - 1), half(k), half(k + 1), p) - aux_H(half(k + 2), half(k + 1), half(k), p);
}

struct ShapeDerivative {
  double value = 0.0;
  // ∫ V ds over the two moving contact arcs, before the (1 - h)/|C| factor.
  double bracket = 0.0;
  bool empty_k = false;
  bool empty_next = false;

  bool flagged() const { return empty_k && empty_next; }
};

inline ShapeDerivative shape_derivative(const ReuleauxPolygon& poly, const CheegerSolution& sol, long k) {
  require_index(poly, k);
  if (poly.size() < 5) {
    throw Error(ErrorCode::kInvalidArgument, "the Reuleaux triangle admits no Blaschke deformation");
  }
  const ArcContact& ck = sol.contacts[poly.index(k)];
  const ArcContact& cn = sol.contacts[poly.index(k + 1)];
  ShapeDerivative out;
  out.empty_k = ck.empty;
  out.empty_next = cn.empty;
  double first = 0.0;
  double second = 0.0;
  if (!ck.empty) {
    first = std::cos(ck.alpha_p - poly.alpha(k - 1)) - std::cos(ck.beta_p - poly.alpha(k - 1));
  }
  if (!cn.empty) {
    second = std::cos(cn.alpha_p - poly.alpha(k + 1)) - std::cos(cn.beta_p - poly.alpha(k + 1));
  }
  out.bracket = first - std::sin(poly.arc_length(k)) / std::sin(poly.arc_length(k + 1)) * second;
  out.value = (1.0 - sol.h) / area(sol.cheeger_set) * out.bracket;
  return out;
}

inline ShapeDerivative shape_derivative(const ReuleauxPolygon& poly, long k) {
  return shape_derivative(poly, cheeger_set(poly), k);
}

inline double max_abs_residual(const ReuleauxPolygon& poly, const CheegerSolution& sol) {
  if (poly.size() < 5) return 0.0;
  const AuxParams p = AuxParams::from_radius(sol.R);
  double worst = 0.0;
  for (std::size_t k = 0; k < poly.size(); ++k) {
    worst = std::max(worst, std::abs(optimality_residual(poly, static_cast<long>(k), p)));
  }
  return worst;
}

enum class Termination { kStationary, kBoundary, kNoDeformation, kIterationLimit };

inline std::string_view to_string(Termination t) {
  switch (t) {
    case Termination::kStationary: return "stationary";
    case Termination::kBoundary: return "boundary";
    case Termination::kNoDeformation: return "no-deformation";
    case Termination::kIterationLimit: return "iteration-limit";
  }
  return "unknown";
}

struct TrajectoryStep {
  int iteration = 0;
  long k = -1;  // -1 for the starting polygon
  double eps = 0.0;
  double h = 0.0;
  double max_residual = 0.0;
  ReuleauxPolygon polygon;
};

struct DeformationTrajectory {
  std::vector<TrajectoryStep> steps;
  Termination reason = Termination::kIterationLimit;
  std::string note;

  const ReuleauxPolygon& final_polygon() const { return steps.back().polygon; }
  double final_h() const { return steps.back().h; }
};

struct AscentOptions {
  int max_iterations = 200;
  double gradient_tolerance = 1e-9;
  double initial_step = 0.05;
  double min_step = 1e-8;
};

namespace detail {

struct Move {
  long k = 0;
  double eps = 0.0;
  ReuleauxPolygon polygon;
  CheegerSolution solution;
};

// Backtracking along one Blaschke chart: the first step, halving from the
// initial size, that stays in the class and raises h.
inline std::optional<Move> try_direction(const ReuleauxPolygon& poly, long k, double sign, double h0,
                                         const AscentOptions& opt) {
  for (double eps = opt.initial_step; eps >= opt.min_step; eps *= 0.5) {
    try {
      ReuleauxPolygon next = deform(poly, k, sign * eps);
      CheegerSolution sol = cheeger_set(next);
      if (sol.h > h0) return Move{k, sign * eps, std::move(next), std::move(sol)};
    } catch (const Error&) {
    }
  }
  return std::nullopt;
}

}  // namespace detail

// Coordinate ascent on h over Blaschke moves. At a point where the first
// variation vanishes (the regular polygons) both directions of every chart are
// probed before declaring the point stationary.
inline DeformationTrajectory local_maximize(const ReuleauxPolygon& start, const AscentOptions& opt = {}) {
  DeformationTrajectory traj;
  CheegerSolution sol = cheeger_set(start);
  traj.steps.push_back({0, -1, 0.0, sol.h, max_abs_residual(start, sol), start});
  if (start.size() < 5) {
    traj.reason = Termination::kNoDeformation;
    traj.note = "triangle admits no Blaschke deformation";
    return traj;
  }

  ReuleauxPolygon poly = start;
  const long n = static_cast<long>(poly.size());
  for (int iter = 1; iter <= opt.max_iterations; ++iter) {
    if (poly.min_arc_length() < kMinArcLength) {
      traj.reason = Termination::kBoundary;
      traj.note = "arc length fell below " + std::to_string(kMinArcLength);
      return traj;
    }
    long best = 0;
    double best_value = 0.0;
    for (long k = 0; k < n; ++k) {
      const double d = shape_derivative(poly, sol, k).value;
      if (std::abs(d) > std::abs(best_value)) {
        best = k;
        best_value = d;
      }
    }

    std::optional<detail::Move> move;
    if (std::abs(best_value) >= opt.gradient_tolerance) {
      move = detail::try_direction(poly, best, best_value > 0.0 ? 1.0 : -1.0, sol.h, opt);
    }
    if (!move) {
      for (long k = 0; k < n && !move; ++k) {
        for (double sign : {1.0, -1.0}) {
          move = detail::try_direction(poly, k, sign, sol.h, opt);
          if (move) break;
        }
      }
    }
    if (!move) {
      traj.reason = Termination::kStationary;
      traj.note = "no admissible move increases h";
      return traj;
    }
    poly = std::move(move->polygon);
    sol = std::move(move->solution);
    traj.steps.push_back({iter, move->k, move->eps, sol.h, max_abs_residual(poly, sol), poly});
  }
  traj.reason = poly.min_arc_length() < kMinArcLength ? Termination::kBoundary : Termination::kIterationLimit;
  return traj;
}

}  // namespace orbiform
