#pragma once

// JSON, CSV and SVG forms of the library types. Arc and vertex labels are
// printed one-based.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "orbiform/arcgeom.hpp"
#include "orbiform/blaschke.hpp"
#include "orbiform/bounds.hpp"
#include "orbiform/cheeger.hpp"
#include "orbiform/error.hpp"
#include "orbiform/minarea.hpp"
#include "orbiform/reuleaux.hpp"

namespace orbiform::io {

using json = nlohmann::ordered_json;

inline std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

inline ReuleauxPolygon polygon_from_json(const json& doc) {
  if (!doc.is_object() || !doc.contains("vertices") || !doc["vertices"].is_array()) {
    throw Error(ErrorCode::kInvalidArgument, "polygon JSON needs a \"vertices\" array");
  }
  std::vector<Point> v;
  for (const json& p : doc["vertices"]) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_number() || !p[1].is_number()) {
      throw Error(ErrorCode::kInvalidArgument, "each vertex must be an [x, y] pair");
    }
    v.push_back({p[0].get<double>(), p[1].get<double>()});
  }
  return ReuleauxPolygon::from_vertices(std::move(v));
}

inline ReuleauxPolygon polygon_from_text(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kInvalidArgument, std::string("malformed JSON: ") + e.what());
  }
  return polygon_from_json(doc);
}

inline ReuleauxPolygon polygon_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kInvalidArgument, "cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return polygon_from_text(buf.str());
}

inline json to_json(const ReuleauxPolygon& poly) {
  json v = json::array();
  for (Point p : poly.vertices()) v.push_back({p.x, p.y});
  return json{{"vertices", v},
              {"alpha", std::vector<double>(poly.alphas().begin(), poly.alphas().end())},
              {"beta", std::vector<double>(poly.betas().begin(), poly.betas().end())},
              {"j", std::vector<double>(poly.arc_lengths().begin(), poly.arc_lengths().end())},
              {"inradius", poly.inradius()}};
}

inline json to_json(const ArcRegion& region) {
  json arcs = json::array();
  for (const CircArc& a : region.arcs()) {
    arcs.push_back({{"cx", a.center.x}, {"cy", a.center.y}, {"r", a.radius}, {"start", a.start}, {"sweep", a.sweep}});
  }
  json out{{"arcs", arcs}};
  if (region.is_degenerate()) out["point"] = {region.anchor().x, region.anchor().y};
  return out;
}

inline ArcRegion region_from_json(const json& doc) {
  if (!doc.is_object() || !doc.contains("arcs") || !doc["arcs"].is_array()) {
    throw Error(ErrorCode::kInvalidArgument, "region JSON needs an \"arcs\" array");
  }
  if (doc["arcs"].empty()) {
    if (!doc.contains("point")) throw Error(ErrorCode::kMalformedRegion, "empty arc chain without a point");
    return ArcRegion::degenerate({doc["point"][0].get<double>(), doc["point"][1].get<double>()});
  }
  std::vector<CircArc> arcs;
  for (const json& a : doc["arcs"]) {
    arcs.push_back({{a.at("cx").get<double>(), a.at("cy").get<double>()},
                    a.at("r").get<double>(),
                    a.at("start").get<double>(),
                    a.at("sweep").get<double>()});
  }
  return ArcRegion::from_arcs(std::move(arcs));
}

inline json to_json(const CheegerSolution& sol) {
  json contacts = json::array();
  for (const ArcContact& c : sol.contacts) {
    if (c.empty) {
      contacts.push_back({c.arc + 1, nullptr, nullptr});
    } else {
      contacts.push_back({c.arc + 1, c.alpha_p, c.beta_p});
    }
  }
  return json{{"R", sol.R}, {"h", sol.h}, {"contacts", contacts}};
}

inline json to_json(const BoundsRow& row) {
  return json{{"N", row.n}, {"sides", 2 * row.n + 1}, {"tau", row.tau}, {"h_max", row.h_max}, {"h_min", row.h_min}};
}

inline json to_json(const Check& c) {
  return json{{"name", c.name}, {"pass", c.pass}, {"value", c.value}, {"detail", c.detail}};
}

inline std::string polygon_csv(const ReuleauxPolygon& poly) {
  std::string out = "k,alpha,beta,j\n";
  for (std::size_t k = 0; k < poly.size(); ++k) {
    const long i = static_cast<long>(k);
    out += std::to_string(k + 1) + "," + num(poly.alpha(i)) + "," + num(poly.beta(i)) + "," +
           num(poly.arc_length(i)) + "\n";
  }
  return out;
}

inline std::string table_csv(const std::vector<BoundsRow>& rows) {
  std::string out = "N,2N+1,tau,h_max,h_min\n";
  char buf[128];
  for (const BoundsRow& r : rows) {
    std::snprintf(buf, sizeof buf, "%d,%d,%.6f,%.6f,%.6f\n", r.n, 2 * r.n + 1, r.tau, r.h_max, r.h_min);
    out += buf;
  }
  return out;
}

inline std::string trajectory_csv(const DeformationTrajectory& traj) {
  std::string out = "iteration,k,eps,h,max_residual\n";
  for (const TrajectoryStep& s : traj.steps) {
    out += std::to_string(s.iteration) + "," + (s.k < 0 ? std::string() : std::to_string(s.k + 1)) + "," +
           num(s.eps) + "," + num(s.h) + "," + num(s.max_residual) + "\n";
  }
  return out;
}

inline std::string profile_csv(const std::vector<double>& radii) {
  std::string out = "r,N,ell,x,a,b,min_area\n";
  for (double r : radii) {
    const ProfileAngles p = profile_angles(r);
    out += num(r) + "," + std::to_string(p.n) + "," + num(p.ell) + "," + num(p.x) + "," + num(p.a) + "," +
           num(p.b) + "," + num(min_area(r)) + "\n";
  }
  return out;
}

// SVG with a fixed 1000-unit viewbox; world coordinates in [-0.75, 0.75]^2.
struct SvgLayer {
  ArcRegion region;
  std::string stroke;
  double width = 2.0;
};

namespace detail {

inline constexpr double kViewHalf = 0.75;
inline constexpr double kViewBox = 1000.0;

inline Point to_view(Point p) {
  const double s = kViewBox / (2.0 * kViewHalf);
  return {(p.x + kViewHalf) * s, (kViewHalf - p.y) * s};
}

inline std::string svg_coord(Point p) {
  char buf[64];
  const Point q = to_view(p);
  std::snprintf(buf, sizeof buf, "%.3f %.3f", q.x, q.y);
  return buf;
}

}  // namespace detail

inline std::string svg_path(const ArcRegion& region) {
  const double s = detail::kViewBox / (2.0 * detail::kViewHalf);
  if (region.is_degenerate()) {
    const Point q = detail::to_view(region.anchor());
    char buf[128];
    std::snprintf(buf, sizeof buf, "M %.3f %.3f m -3 0 a 3 3 0 1 0 6 0 a 3 3 0 1 0 -6 0 Z", q.x, q.y);
    return buf;
  }
  std::string d = "M " + detail::svg_coord(region.arcs().front().start_point());
  for (const CircArc& a : region.arcs()) {
    // Screen y points down, so counterclockwise arcs use sweep-flag 0. Full
    // circles are drawn as two halves.
    const int pieces = a.sweep > kPi + 1e-9 ? 2 : 1;
    for (int i = 1; i <= pieces; ++i) {
      const Point end = a.point_at(a.start + a.sweep * i / pieces);
      char buf[96];
      std::snprintf(buf, sizeof buf, " A %.3f %.3f 0 0 0 ", a.radius * s, a.radius * s);
      d += buf + detail::svg_coord(end);
    }
  }
  return d + " Z";
}

inline std::string svg_document(const std::vector<SvgLayer>& layers) {
  std::string out =
      "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 1000 1000\" width=\"1000\" height=\"1000\">\n";
  for (const SvgLayer& l : layers) {
    out += "  <path d=\"" + svg_path(l.region) + "\" fill=\"none\" stroke=\"" + l.stroke + "\" stroke-width=\"" +
           num(l.width) + "\"/>\n";
  }
  return out + "</svg>\n";
}

}  // namespace orbiform::io
