#pragma once

// Published constants used by the bound machinery and the verification
// harness. Everything that is compared against a printed digit lives here.

#include <array>

namespace orbiform::constants {

// Consecutive-length rate for critical polygons: tau >= 0.99 - 0.05 h^2.
inline constexpr double kRateBase = 0.99;
inline constexpr double kRateSlope = 0.05;

// Ratio floor between consecutive arc lengths of a critical polygon.
inline constexpr double kConsecutiveFloor = 0.1339;

// Reuleaux triangle Cheeger radius bracket and lower bound on its constant.
inline constexpr double kTriangleRadiusLo = 0.22802;
inline constexpr double kTriangleRadiusHi = 0.22803;
inline constexpr double kTriangleCheegerLo = 4.3853;
inline constexpr double kTriangleAreaBound = 4.4576;
inline constexpr double kTriangleInradiusBound = 4.732;
inline constexpr double kTriangleInradiusLo = 0.4226;

// Lower end of the Cheeger radius band for candidate maximizers.
inline constexpr double kCandidateRadiusLo = 0.21132;

// Inradius threshold any maximizer stays below.
inline constexpr double kInradiusThreshold = 0.4302;

// Sector length band at the inradius threshold.
inline constexpr double kSectorLengthLo = 0.9926;
inline constexpr double kSectorLengthHi = 1.1563;

// Band for R^2 / (4 (1 - R)) over the candidate radius range.
inline constexpr double kRadiusCoefficientLo = 0.01415;
inline constexpr double kRadiusCoefficientHi = 0.01684;

// Pentagon and heptagon inradius thresholds.
inline constexpr double kPentagonInradius = 0.47;
inline constexpr double kHeptagonInradius = 0.44;

// Inradius thresholds for the 9-, 11- and 13-gons, the printed angle offsets
// entering the last estimate and the cutoff on cos^2(t/2) that makes the
// estimate monotone in t.
inline constexpr double kNonagonInradius = 0.46;
inline constexpr double kHendecagonInradius = 0.44;
inline constexpr double kTridecagonInradius = 0.45;
inline constexpr std::array<double, 3> kLastEstimateAlpha = {0.7824, 0.7832, 0.7837};
inline constexpr double kLastEstimateRootCap = 0.65;

// Cubic coefficients of U(x) - x / (1 - R) on [0, π/6].
inline constexpr double kUCubicLo = 0.1284;
inline constexpr double kUCubicHi = 0.1831;

// F2(u) = c4 u^4 + c3 u^3 + c2 u^2 and the bracket for its maximizer.
inline constexpr double kF2Quartic = -0.04;
inline constexpr double kF2Cubic = 0.00732;
inline constexpr double kF2Quadratic = 0.04491;
inline constexpr double kF2ArgmaxLo = 0.8210107;
inline constexpr double kF2ArgmaxHi = 0.8210108;
inline constexpr double kF2MaxBound = 0.01614873;

// Worst-case sector factors fed into the inradius lower bound.
inline constexpr double kUOverSinU = 1.2633;
inline constexpr double kSectorHmax = 0.2194;
inline constexpr double kSectorTau = 0.9875;

struct TableRow {
  int n;
  int sides;
  double tau;
  double h_max;
  double h_min;
};

// Rates, maximal and minimal arc lengths for critical (2N+1)-gons, N = 2..9,
// as printed (rounded to four digits).
inline constexpr std::array<TableRow, 8> kTable1 = {{
    {2, 5, 0.9687, 0.6526, 0.6123},
    {3, 7, 0.9791, 0.4652, 0.4367},
    {4, 9, 0.9834, 0.3622, 0.3387},
    {5, 11, 0.9855, 0.2971, 0.2762},
    {6, 13, 0.9868, 0.2522, 0.2328},
    {7, 15, 0.9875, 0.2194, 0.2009},
    {8, 17, 0.9881, 0.1944, 0.1765},
    {9, 19, 0.9884, 0.1746, 0.1572},
}};

inline constexpr double kTableTolerance = 1e-3;

}  // namespace orbiform::constants
