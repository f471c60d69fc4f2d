#pragma once

// Arc-length rates for critical polygons, the rate/length fixed point behind
// the table of maximal and minimal lengths, the sector inradius bound and the
// scalar estimates closing the argument for large N.

#include <algorithm>
#include <array>
#include <cmath>
#include <string>
#include <vector>

#include "orbiform/arcgeom.hpp"
#include "orbiform/constants.hpp"
#include "orbiform/error.hpp"
#include "orbiform/reuleaux.hpp"

namespace orbiform {

struct BoundsRow {
  int n = 0;
  double tau = 0.0;
  double h_max = 0.0;
  double h_min = 0.0;
  int iterations = 0;
};

inline double tau_of_h(double h) {
  if (!(h >= 0.0) || h > kPi / 3.0 + 1e-15) {
    throw Error(ErrorCode::kDomain, "arc length must lie in [0, π/3], got " + std::to_string(h));
  }
  return constants::kRateBase - constants::kRateSlope * h * h;
}

inline double hmax_of_tau(double tau, int n) {
  if (!(tau > 0.0) || !(tau < 1.0)) throw Error(ErrorCode::kDomain, "rate must lie in (0, 1)");
  if (n < 2) throw Error(ErrorCode::kDomain, "N must be at least 2");
  const double denom = 1.0 + tau - 2.0 * std::pow(tau, n + 1);
  if (!(denom > 0.0)) throw Error(ErrorCode::kDomain, "degenerate denominator");
  return kPi * (1.0 - tau) / denom;
}

inline BoundsRow bounds_row(int n, double h0 = kPi / 3.0, double tol = 1e-10, int max_iterations = 200) {
  if (n < 2 || n > 9) throw Error(ErrorCode::kDomain, "table rows cover N = 2..9");
  double h = h0;
  for (int i = 1; i <= max_iterations; ++i) {
    const double next = hmax_of_tau(tau_of_h(h), n);
    const bool done = std::abs(next - h) < tol;
    h = next;
    if (done) {
      const double tau = tau_of_h(h);
      return {n, tau, h, std::pow(tau, n) * h, i};
    }
  }
  throw Error(ErrorCode::kNonConvergence, "rate fixed point did not settle for N = " + std::to_string(n));
}

inline std::vector<BoundsRow> table1(int first = 2, int last = 9) {
  std::vector<BoundsRow> rows;
  for (int n = first; n <= last; ++n) rows.push_back(bounds_row(n));
  return rows;
}

// Lower bound on the inradius of a critical polygon whose sectors satisfy
// 1/sin u <= inv_sin_u and u/sin u <= u_over_sin_u.
inline double inradius_lower_bound_factors(double h, double tau, double inv_sin_u, double u_over_sin_u) {
  return 0.5 - h * inv_sin_u / 4.0 - (1.0 - tau) / (4.0 * tau) * (1.0 + h * h / 6.0 * u_over_sin_u) -
         h * h / 24.0 * u_over_sin_u;
}

inline double inradius_lower_bound(double h, double tau, double u) {
  if (!(h > 0.0) || h > kPi / 3.0 + 1e-15) throw Error(ErrorCode::kDomain, "h must lie in (0, π/3]");
  if (!(tau > 0.0) || !(tau < 1.0)) throw Error(ErrorCode::kDomain, "rate must lie in (0, 1)");
  const double s = std::sin(u);
  if (!(u > 0.0) || !(u < kPi) || !(s > 0.0)) throw Error(ErrorCode::kDomain, "sector length must lie in (0, π)");
  return inradius_lower_bound_factors(h, tau, 1.0 / s, u / s);
}

// Width-1 inradius of a polygon all of whose arcs are tangent to the incircle
// and at most j long.
inline double tangent_inradius(double j) { return 1.0 - 1.0 / (2.0 * std::cos(j / 2.0)); }

// F2(u) = c4 u^4 + c3 u^3 + c2 u^2.
inline double f2(double u) {
  using namespace constants;
  return ((kF2Quartic * u + kF2Cubic) * u + kF2Quadratic) * u * u;
}

// Positive critical point of F2: root of 4 c4 u^2 + 3 c3 u + 2 c2.
inline double f2_argmax() {
  using namespace constants;
  const double qa = 4.0 * kF2Quartic;
  const double qb = 3.0 * kF2Cubic;
  const double qc = 2.0 * kF2Quadratic;
  const double disc = std::sqrt(qb * qb - 4.0 * qa * qc);
  return std::max((-qb + disc) / (2.0 * qa), (-qb - disc) / (2.0 * qa));
}

inline double radius_coefficient(double R) { return R * R / (4.0 * (1.0 - R)); }

// Angle offset π/4 - (1 - τ) h_max / 2 of the last estimate.
inline double last_estimate_alpha(const BoundsRow& row) { return kPi / 4.0 - (1.0 - row.tau) * row.h_max / 2.0; }

// Inradius lower bound for t in [t0, t1], valid once cos^2(t/2) clears the
// real root of the cubic below.
inline double last_estimate(const BoundsRow& row, double t0, double t1) {
  const double alpha = last_estimate_alpha(row);
  const double s = std::sin(row.h_min / 2.0);
  return 1.0 - std::cos(t0 / 2.0 + alpha) / std::cos(t0) * (1.0 - 4.0 * s * s) -
         2.0 * std::sin((1.0 - row.tau) * row.h_max / 4.0) / std::cos(t1);
}

struct CubicRoot {
  bool single = false;
  double root = 0.0;
};

// x^3 - 3 sin²α x^2 + (9/4 sin²α - 3/4 cos²α) x - cos²α / 4.
inline CubicRoot last_estimate_cubic(double alpha) {
  const double s2 = std::sin(alpha) * std::sin(alpha);
  const double c2 = std::cos(alpha) * std::cos(alpha);
  const double b = -3.0 * s2;
  const double c = 2.25 * s2 - 0.75 * c2;
  const double d = -c2 / 4.0;
  auto p = [&](double x) { return ((x + b) * x + c) * x + d; };
  const double disc = 18.0 * b * c * d - 4.0 * b * b * b * d + b * b * c * c - 4.0 * c * c * c - 27.0 * d * d;
  double lo = 0.0;
  double hi = 1.0;
  while (p(hi) < 0.0) hi *= 2.0;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    (p(mid) < 0.0 ? lo : hi) = mid;
  }
  return {disc < 0.0, 0.5 * (lo + hi)};
}

struct Check {
  std::string name;
  bool pass = false;
  double value = 0.0;
  std::string detail;
};

// Scalar closing estimates, each evaluated at the table rows it depends on.
inline std::vector<Check> endgame_checks() {
  using namespace constants;
  const std::vector<BoundsRow> rows = table1();
  auto row = [&](int n) { return rows[static_cast<std::size_t>(n - 2)]; };
  std::vector<Check> out;

  {
    const double v = tangent_inradius(row(2).h_max);
    out.push_back({"pentagon-inradius", v > kPentagonInradius, v, "1 - 1/(2cos(h2max/2)) > 0.47"});
  }
  {
    const double v = 1.0 - 1.0 / (2.0 * std::cos(row(3).h_max));
    out.push_back({"heptagon-inradius", v > kHeptagonInradius, v, "1 - 1/(2cos(h3max)) > 0.44"});
  }
  {
    const double lo = sector_length_lower_bound(kInradiusThreshold);
    const double hi = kPi - 2.0 * lo;
    const bool ok = std::abs(lo - kSectorLengthLo) <= 1e-4 && hi <= kSectorLengthHi;
    out.push_back({"sector-band", ok, lo,
                   "lower bound at r0 within 1e-4 of 0.9926; π - 2*lower = " + std::to_string(hi) + " <= 1.1563"});
  }
  {
    const double u = f2_argmax();
    const double v = f2(u);
    const bool ok = u >= kF2ArgmaxLo && u <= kF2ArgmaxHi && v < kF2MaxBound;
    out.push_back({"f2-maximum", ok, u, "argmax in [0.8210107, 0.8210108], max = " + std::to_string(v)});
  }
  {
    const double lo = radius_coefficient(kCandidateRadiusLo);
    const double hi = radius_coefficient(kTriangleRadiusHi);
    const bool ok = lo >= kRadiusCoefficientLo && hi <= kRadiusCoefficientHi;
    out.push_back({"radius-coefficient", ok, hi, "R^2/(4(1-R)) from " + std::to_string(lo) + " to " + std::to_string(hi)});
  }
  {
    struct Case {
      const char* name;
      int n;
      double t0;
      double t1;
      double threshold;
    };
    const double half_turn = kPi / 2.0;
    const Case cases[] = {
        {"last-estimate-9", 4, half_turn - kSectorLengthHi, kPi / 6.0, kNonagonInradius},
        {"last-estimate-11-long", 5, half_turn - kSectorLengthHi, kPi / 6.0, kHendecagonInradius},
        {"last-estimate-11-short", 5, kSectorLengthHi / 2.0, half_turn - 2.0 * row(5).h_min, kHendecagonInradius},
        {"last-estimate-13", 6, half_turn - 4.0 * row(6).h_max, half_turn - 2.0 * row(6).h_min, kTridecagonInradius},
    };
    for (const Case& c : cases) {
      const BoundsRow& rw = row(c.n);
      const double alpha = last_estimate_alpha(rw);
      const CubicRoot cubic = last_estimate_cubic(alpha);
      const double v = last_estimate(rw, c.t0, c.t1);
      const double cap = std::cos(c.t1 / 2.0) * std::cos(c.t1 / 2.0);
      const bool alpha_ok = std::abs(alpha - kLastEstimateAlpha[static_cast<std::size_t>(c.n - 4)]) <= 1e-3;
      const bool ok = v > c.threshold && v > kInradiusThreshold && alpha_ok && cubic.single &&
                      cubic.root < kLastEstimateRootCap && cap >= kLastEstimateRootCap;
      out.push_back({c.name, ok, v,
                     "t in [" + std::to_string(c.t0) + ", " + std::to_string(c.t1) + "], alpha " + std::to_string(alpha) +
                         ", cubic root " + std::to_string(cubic.root)});
    }
  }
  return out;
}

}  // namespace orbiform
