#pragma once

// Reproduction checks, one per published claim. Used by `orbiform verify` and
// by the acceptance test binary, so both report the same thing.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "orbiform/arcgeom.hpp"
#include "orbiform/blaschke.hpp"
#include "orbiform/bounds.hpp"
#include "orbiform/cheeger.hpp"
#include "orbiform/constants.hpp"
#include "orbiform/minarea.hpp"
#include "orbiform/reuleaux.hpp"

namespace orbiform::verify {

namespace detail {

inline std::string fmt(const char* pattern, double a, double b = 0.0, double c = 0.0, double d = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, pattern, a, b, c, d);
  return buf;
}

inline double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// Polygons exercised by the property checks: regular ones plus seeded walks.
inline std::vector<ReuleauxPolygon> sample_polygons() {
  std::vector<ReuleauxPolygon> out;
  for (int n = 1; n <= 9; ++n) out.push_back(regular(n));
  for (int seed = 1; seed <= 60; ++seed) out.push_back(random_polygon(2 + seed % 5, 20 + seed % 30, seed));
  return out;
}

}  // namespace detail

using detail::fmt;

inline Check triangle() {
  using namespace constants;
  const auto t0 = std::chrono::steady_clock::now();
  const double generic = cheeger_radius(regular(1), 1e-14);
  const TriangleCheeger closed = triangle_closed_form(1e-14);
  const double elapsed = detail::seconds_since(t0);
  auto in_band = [](double R) { return R >= kTriangleRadiusLo && R <= kTriangleRadiusHi; };
  const bool ok = in_band(generic) && in_band(closed.R) && std::abs(generic - closed.R) <= 1e-9 &&
                  1.0 / generic >= kTriangleCheegerLo && elapsed < 1.0;
  return {"triangle", ok, generic,
          fmt("R generic %.12f, closed form %.12f, h %.8f, %.3fs", generic, closed.R, 1.0 / generic, elapsed)};
}

inline Check disk() {
  const std::vector<Point> center{{0.0, 0.0}};
  const double R = cheeger_radius_of_disks(center, 0.5, 1e-14);
  const bool ok = std::abs(R - 0.25) <= 1e-10 && std::abs(1.0 / R - 4.0) <= 1e-10;
  return {"disk", ok, R, fmt("R %.15f, h %.15f", R, 1.0 / R)};
}

inline Check table() {
  const auto t0 = std::chrono::steady_clock::now();
  const std::vector<BoundsRow> rows = table1();
  const double elapsed = detail::seconds_since(t0);
  double worst = 0.0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& ref = constants::kTable1[i];
    worst = std::max({worst, std::abs(rows[i].tau - ref.tau), std::abs(rows[i].h_max - ref.h_max),
                      std::abs(rows[i].h_min - ref.h_min)});
  }
  const bool ok = rows.size() == constants::kTable1.size() && worst <= constants::kTableTolerance && elapsed < 0.1;
  return {"table1", ok, worst, fmt("8 rows, worst deviation %.2e, %.4fs", worst, elapsed)};
}

inline Check propr0() {
  using namespace constants;
  const double r_inv = min_area_inverse(kPi / kTriangleCheegerLo);
  const double r_tri = regular(1).inradius();
  const double R_tri = cheeger_radius(regular(1));
  const bool ok = r_inv < kInradiusThreshold && r_inv >= kTriangleInradiusLo && r_tri >= kTriangleInradiusLo &&
                  r_tri / 2.0 >= kCandidateRadiusLo && r_tri / 2.0 <= R_tri && R_tri <= kTriangleRadiusHi;
  return {"propr0", ok, r_inv,
          fmt("area inverse %.8f in [0.4226, 0.4302); r(T)/2 %.6f <= R(T) %.6f <= 0.22803", r_inv, r_tri / 2.0, R_tri)};
}

inline Check sectors_band() {
  using namespace constants;
  const double lo = sector_length_lower_bound(kInradiusThreshold);
  const double hi = kPi - 2.0 * lo;
  double worst_sum = 0.0;
  for (const ReuleauxPolygon& p : detail::sample_polygons()) {
    const auto s = sectors(p);
    worst_sum = std::max(worst_sum, std::abs(s[0].length + s[1].length + s[2].length - kPi));
  }
  const bool ok = lo >= kSectorLengthLo - 1e-4 && lo <= kSectorLengthLo + 1e-4 && hi <= kSectorLengthHi &&
                  worst_sum <= 1e-9;
  return {"sectors", ok, lo,
          fmt("lower %.6f, upper pi-2*lower %.6f, max |u1+u2+u3-pi| %.1e", lo, hi, worst_sum)};
}

inline Check minr() {
  using namespace constants;
  const double v = inradius_lower_bound_factors(kSectorHmax, kSectorTau, 2.0 / std::sqrt(3.0), kUOverSinU);
  const bool ok = v > kInradiusThreshold && std::abs(v - 0.4309) <= 5e-4;
  return {"minr", ok, v, fmt("bound %.6f > 0.4302", v)};
}

inline Check endgame() {
  using namespace constants;
  const std::vector<Check> checks = endgame_checks();
  bool ok = true;
  std::string failed;
  for (const Check& c : checks) {
    ok = ok && c.pass;
    if (!c.pass) failed += " " + c.name;
  }
  // The two headline numbers, also at the printed table digits.
  const double pent = tangent_inradius(kTable1[0].h_max);
  const double hept = 1.0 - 1.0 / (2.0 * std::cos(kTable1[1].h_max));
  ok = ok && pent > kPentagonInradius && hept > kHeptagonInradius;
  return {"endgame", ok, pent,
          fmt("pentagon %.5f > 0.47, heptagon %.5f > 0.44", pent, hept) +
              (failed.empty() ? ", all closing estimates hold" : ", failed:" + failed)};
}

struct DerivativeSweep {
  int cases = 0;
  double worst_rel_fine = 0.0;  // at eps = 1e-5
  double rms[3] = {0.0, 0.0, 0.0};
  int non_decreasing = 0;       // cases where 1e-4 is not better than 1e-3
};

inline DerivativeSweep derivative_sweep(int polygons = 50) {
  const double steps[3] = {1e-3, 1e-4, 1e-5};
  DerivativeSweep out;
  for (int seed = 1; seed <= polygons; ++seed) {
    const ReuleauxPolygon p = random_polygon(2 + seed % 3, 40, seed);
    const CheegerSolution sol = cheeger_set(p, 1e-15);
    for (long k = 0; k < static_cast<long>(p.size()); ++k) {
      const double analytic = shape_derivative(p, sol, k).value;
      const double scale = std::max(std::abs(analytic), 1e-8);
      double rel[3];
      for (int i = 0; i < 3; ++i) {
        const double up = cheeger_set(deform(p, k, steps[i]), 1e-15).h;
        const double down = cheeger_set(deform(p, k, -steps[i]), 1e-15).h;
        rel[i] = std::abs((up - down) / (2.0 * steps[i]) - analytic) / scale;
        out.rms[i] += rel[i] * rel[i];
      }
      out.worst_rel_fine = std::max(out.worst_rel_fine, rel[2]);
      if (!(rel[1] < rel[0])) ++out.non_decreasing;
      ++out.cases;
    }
  }
  for (double& v : out.rms) v = std::sqrt(v / out.cases);
  return out;
}

inline Check shape_derivative_fd() {
  const DerivativeSweep s = derivative_sweep();
  const bool ok = s.worst_rel_fine <= 1e-3 && s.non_decreasing == 0 && s.rms[0] > s.rms[1] && s.rms[1] > s.rms[2];
  return {"shape-derivative", ok, s.worst_rel_fine,
          fmt("%g derivatives, worst relative error %.2e at eps 1e-5; rms %.1e > %.1e > ...", s.cases,
              s.worst_rel_fine, s.rms[0], s.rms[1]) +
              fmt(" %.1e", s.rms[2])};
}

inline Check criticality() {
  double worst = 0.0;
  for (int n = 1; n <= 9; ++n) {
    const ReuleauxPolygon p = regular(n);
    const AuxParams params = AuxParams::from_radius(cheeger_radius(p));
    for (long k = 0; k < static_cast<long>(p.size()); ++k) {
      worst = std::max(worst, std::abs(optimality_residual(p, k, params)));
    }
  }
  const ReuleauxPolygon bent = deform(regular(2), 0, 0.05);
  const double witness = std::abs(optimality_residual(bent, 0, AuxParams::from_radius(cheeger_radius(bent))));
  const bool ok = worst <= 1e-14 && witness > 1e-5;
  return {"criticality", ok, worst, fmt("regular max |residual| %.1e; perturbed pentagon %.3e", worst, witness)};
}

inline Check main_theorem(int count = 1200) {
  const auto t0 = std::chrono::steady_clock::now();
  const double h_t = 1.0 / cheeger_radius(regular(1), 1e-14);
  double best = 0.0;
  int violations = 0;
  int ties = 0;
  for (int i = 0; i < count; ++i) {
    const int n = 1 + i % 6;
    const ReuleauxPolygon p = random_polygon(n, 10 + i % 51, static_cast<std::uint64_t>(i) + 1);
    const double h = 1.0 / cheeger_radius(p, 1e-14);
    if (h > h_t + 1e-9) ++violations;
    const bool is_triangle = p.size() == 3;
    if (!is_triangle && h >= h_t - 1e-9) ++ties;
    if (!is_triangle) best = std::max(best, h);
  }
  const double elapsed = detail::seconds_since(t0);
  const bool ok = violations == 0 && ties == 0 && elapsed < 600.0;
  return {"main-theorem", ok, best,
          fmt("%g polygons, largest non-triangle h %.6f vs h(T) %.6f, %.1fs", count, best, h_t, elapsed)};
}

inline Check minarea() {
  const double r3 = regular_inradius(1);
  const double r9 = regular_inradius(4);
  double worst_quad = 0.0;
  for (int i = 0; i < 50; ++i) {
    const double r = r3 + (r9 - r3) * i / 49.0;
    worst_quad = std::max(worst_quad, std::abs(min_area(r) - area(min_area_polygon(r).region())));
  }
  double worst_edge = 0.0;
  for (int n = 1; n <= 8; ++n) {
    const double edge = regular_inradius(n);
    worst_edge = std::max(worst_edge, std::abs(min_area_band(edge, n) - min_area_band(edge, n + 1)));
  }
  bool increasing = true;
  double prev = min_area(r3);
  for (int i = 1; i < 200; ++i) {
    const double v = min_area(r3 + (0.5 - r3) * i / 200.0);
    increasing = increasing && v > prev;
    prev = v;
  }
  const double left = std::abs(min_area(r3) - (kPi - std::sqrt(3.0)) / 2.0);
  const bool ok = worst_quad <= 1e-8 && worst_edge <= 1e-8 && increasing && left <= 1e-10;
  return {"minarea", ok, worst_quad,
          fmt("closed form vs quadrature %.1e, band-edge jump %.1e, triangle value error %.1e", worst_quad, worst_edge,
              left) +
              (increasing ? ", strictly increasing" : ", NOT increasing")};
}

// Grid check of x/(1-R) + c_lo x^3 <= U(x) <= x/(1-R) + c_hi x^3 on [0, π/6].
struct UBandScan {
  double lower_margin = 1.0;
  double upper_margin = 1.0;
  double upper_x = 0.0;
  double upper_R = 0.0;
};

inline UBandScan u_band_scan(int points = 200) {
  using namespace constants;
  UBandScan out;
  for (double R : {kCandidateRadiusLo, 0.22, kTriangleRadiusHi}) {
    const AuxParams p = AuxParams::from_radius(R);
    for (int i = 0; i < points; ++i) {
      const double x = (kPi / 6.0) * i / (points - 1);
      const double u = aux_U(x, p);
      const double linear = x / (1.0 - R);
      out.lower_margin = std::min(out.lower_margin, u - (linear + kUCubicLo * x * x * x));
      const double above = linear + kUCubicHi * x * x * x - u;
      if (above < out.upper_margin) {
        out.upper_margin = above;
        out.upper_x = x;
        out.upper_R = R;
      }
    }
  }
  return out;
}

inline Check estimates() {
  using namespace constants;
  const UBandScan band = u_band_scan();
  const bool u_ok = band.lower_margin >= -1e-15 && band.upper_margin >= -1e-15;

  const double c_lo = radius_coefficient(kCandidateRadiusLo);
  const double c_hi = radius_coefficient(kTriangleRadiusHi);
  bool coef_ok = true;
  for (int i = 0; i <= 100; ++i) {
    const double R = kCandidateRadiusLo + (kTriangleRadiusHi - kCandidateRadiusLo) * i / 100.0;
    const double c = radius_coefficient(R);
    coef_ok = coef_ok && c >= kRadiusCoefficientLo && c <= kRadiusCoefficientHi;
  }

  const double u_star = f2_argmax();
  double scan_arg = u_star - 1e-6;
  double scan_max = f2(scan_arg);
  for (int i = 0; i <= 2000; ++i) {
    const double u = u_star - 1e-6 + i * 1e-9;
    if (f2(u) > scan_max) {
      scan_max = f2(u);
      scan_arg = u;
    }
  }
  const bool f2_ok = u_star >= kF2ArgmaxLo && u_star <= kF2ArgmaxHi && f2(u_star) < kF2MaxBound &&
                     std::abs(scan_arg - u_star) <= 1e-9 && scan_max < kF2MaxBound;

  std::string detail = fmt("U lower band margin %.1e", band.lower_margin);
  if (band.upper_margin >= -1e-15) {
    detail += fmt(", upper band margin %.1e", band.upper_margin);
  } else {
    const double x = band.upper_x;
    const double coef = (aux_U(x, AuxParams::from_radius(band.upper_R)) - x / (1.0 - band.upper_R)) / (x * x * x);
    detail += fmt(", upper band VIOLATED by %.2e at R %.5f, x %.4f (cubic coefficient %.6f > 0.1831)",
                  -band.upper_margin, band.upper_R, x, coef);
  }
  detail += fmt("; R^2/(4(1-R)) in [%.6f, %.6f]", c_lo, c_hi) + (coef_ok ? "" : " OUT OF BAND");
  detail += fmt("; F2 argmax %.10f, max %.10f", u_star, f2(u_star));
  return {"estimates", u_ok && coef_ok && f2_ok, band.upper_margin, detail};
}

inline Check invariants() {
  double barbier = 0.0;
  double steiner = 0.0;
  int shapes = 0;
  std::vector<ReuleauxPolygon> polys = detail::sample_polygons();
  for (int i = 0; i <= 10; ++i) {
    polys.push_back(min_area_polygon(regular_inradius(1) + (regular_inradius(4) - regular_inradius(1)) * i / 10.0));
  }
  for (const ReuleauxPolygon& p : polys) {
    barbier = std::max(barbier, std::abs(perimeter(p.region()) - kPi));
    const CheegerSolution s = cheeger_set(p);
    const double pin = perimeter(s.inner);
    const double ain = area(s.inner);
    steiner = std::max({steiner, std::abs(perimeter(s.cheeger_set) - (pin + 2.0 * kPi * s.R)),
                        std::abs(area(s.cheeger_set) - (ain + s.R * pin + kPi * s.R * s.R))});
    ++shapes;
  }
  const bool ok = barbier <= 1e-9 && steiner <= 1e-9;
  return {"invariants", ok, std::max(barbier, steiner),
          fmt("%g polygons: max |perimeter - pi| %.1e, max Steiner defect %.1e", shapes, barbier, steiner)};
}

struct Entry {
  std::string_view name;
  std::function<Check()> run;
};

inline const std::vector<Entry>& registry() {
  static const std::vector<Entry> entries = {
      {"triangle", triangle},
      {"disk", disk},
      {"table1", table},
      {"propr0", propr0},
      {"sectors", sectors_band},
      {"minr", minr},
      {"endgame", endgame},
      {"shape-derivative", shape_derivative_fd},
      {"criticality", criticality},
      {"main-theorem", [] { return main_theorem(); }},
      {"minarea", minarea},
      {"estimates", estimates},
      {"invariants", invariants},
  };
  return entries;
}

inline bool known(std::string_view name) {
  for (const Entry& e : registry()) {
    if (e.name == name) return true;
  }
  return false;
}

// Runs every check, or just `only` when given. A check that throws counts as
// a failure carrying the error text.
inline std::vector<Check> run(std::string_view only = {}) {
  std::vector<Check> out;
  for (const Entry& e : registry()) {
    if (!only.empty() && e.name != only) continue;
    try {
      out.push_back(e.run());
    } catch (const std::exception& ex) {
      out.push_back({std::string(e.name), false, 0.0, std::string("threw: ") + ex.what()});
    }
  }
  return out;
}

}  // namespace orbiform::verify
