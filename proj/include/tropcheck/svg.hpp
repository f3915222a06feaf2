// Copyright 2026 The tropcheck Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

/// \file svg.hpp
/// Plots of polytopes in FT^3 through the projectivisation
/// (x1, x2, x3) -> (x1 - x3, x2 - x3).
///
/// Two-dimensional cells become filled polygons, one-dimensional cells
/// segments, and generators dots. All geometry is computed exactly and only
/// rounded when printed, so the output is byte-for-byte reproducible.

#include <algorithm>
#include <array>
#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "tropcheck/cells.hpp"
#include "tropcheck/error.hpp"
#include "tropcheck/polytope.hpp"
#include "tropcheck/scalar.hpp"

namespace tropcheck {

struct PlanePoint {
  Scalar x;
  Scalar y;

  friend bool operator==(const PlanePoint&, const PlanePoint&) = default;
  friend auto operator<=>(const PlanePoint&, const PlanePoint&) = default;
};

struct SvgCell {
  /// Affine dimension of the face in FT^3.
  std::size_t dim;
  /// Polygon vertices in counter-clockwise order, or segment endpoints.
  std::vector<PlanePoint> vertices;
};

struct SvgScene {
  std::vector<PlanePoint> generators;
  std::vector<SvgCell> cells;
};

inline constexpr int kSvgUnit = 40;

inline PlanePoint projectivise(const Vector& x) {
  if (x.size() != 3) {
    throw Error(ErrorKind::kDimensionMismatch, "plots need points of FT^3");
  }
  return {x[0].value() - x[2].value(), x[1].value() - x[2].value()};
}

namespace detail {

/// Half-plane a*x + b*y <= c.
struct HalfPlane {
  Scalar a;
  Scalar b;
  Scalar c;
};

/// Closure of the cell with the given exact type, with x3 = 0.
inline std::vector<HalfPlane> cell_half_planes(const TypeVector& type,
                                               const std::vector<Vector>& gens) {
  std::vector<HalfPlane> planes;
  auto coefficient = [](std::size_t p, std::size_t axis) { return Scalar(p == axis ? 1 : 0); };
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t p = 0; p < 3; ++p) {
      if (!type.contains(p, i)) continue;
      for (std::size_t q = 0; q < 3; ++q) {
        if (q == p) continue;
        // x_p - x_q <= v_ip - v_iq
        planes.push_back({coefficient(p, 0) - coefficient(q, 0),
                          coefficient(p, 1) - coefficient(q, 1),
                          gens[i][p].value() - gens[i][q].value()});
      }
    }
  return planes;
}

inline std::vector<PlanePoint> half_plane_vertices(const std::vector<HalfPlane>& planes) {
  std::vector<PlanePoint> out;
  for (std::size_t s = 0; s < planes.size(); ++s)
    for (std::size_t t = s + 1; t < planes.size(); ++t) {
      const HalfPlane& u = planes[s];
      const HalfPlane& v = planes[t];
      Scalar det = u.a * v.b - u.b * v.a;
      if (det.sign() == 0) continue;
      PlanePoint pt{(u.c * v.b - u.b * v.c) / det, (u.a * v.c - u.c * v.a) / det};
      bool inside = std::all_of(planes.begin(), planes.end(), [&](const HalfPlane& h) {
        return h.a * pt.x + h.b * pt.y <= h.c;
      });
      if (inside) out.push_back(std::move(pt));
    }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// Counter-clockwise order around the vertex centroid, exactly.
inline void sort_counter_clockwise(std::vector<PlanePoint>& pts) {
  if (pts.size() < 3) return;
  Scalar cx(0), cy(0);
  for (const auto& p : pts) {
    cx += p.x;
    cy += p.y;
  }
  const Scalar count(static_cast<std::int64_t>(pts.size()));
  cx = cx / count;
  cy = cy / count;
  auto upper = [&](const PlanePoint& p) {
    Scalar dy = p.y - cy;
    return dy.sign() > 0 || (dy.sign() == 0 && (p.x - cx).sign() > 0);
  };
  std::sort(pts.begin(), pts.end(), [&](const PlanePoint& p, const PlanePoint& q) {
    const bool up = upper(p);
    const bool uq = upper(q);
    if (up != uq) return up;
    Scalar cross = (p.x - cx) * (q.y - cy) - (p.y - cy) * (q.x - cx);
    return cross.sign() > 0;
  });
}

/// Fixed-point decimal with at most three fractional digits, rounded half
/// away from zero.
inline std::string decimal(const Scalar& v) {
  BigInt scaled_num = v.numerator() * 1000;
  const BigInt den = v.denominator();
  const bool negative = scaled_num < 0;
  if (negative) scaled_num = -scaled_num;
  BigInt q = (2 * scaled_num + den) / (2 * den);
  std::string digits = q.str();
  if (digits.size() < 4) digits.insert(0, 4 - digits.size(), '0');
  std::string whole = digits.substr(0, digits.size() - 3);
  std::string frac = digits.substr(digits.size() - 3);
  while (!frac.empty() && frac.back() == '0') frac.pop_back();
  std::string out = (negative && q != 0 ? "-" : "") + whole;
  if (!frac.empty()) out += "." + frac;
  return out;
}

}  // namespace detail

/// Projected generators and the cells of dimension 2 and 3 of P.
inline SvgScene build_scene(const Polytope& p, CellOptions options = {}) {
  if (p.ambient() != 3) {
    throw Error(ErrorKind::kDimensionMismatch,
                "plots need ambient dimension 3, got " + std::to_string(p.ambient()));
  }
  SvgScene scene;
  for (const Vector& g : p.generators()) scene.generators.push_back(projectivise(g));
  std::sort(scene.generators.begin(), scene.generators.end());
  scene.generators.erase(std::unique(scene.generators.begin(), scene.generators.end()),
                         scene.generators.end());

  const Polytope reduced = reduce_to_extremals(p);
  for (const Face& f : enumerate_cells(reduced, options).faces) {
    if (!f.covering || f.dim < 2) continue;
    auto vertices =
        detail::half_plane_vertices(detail::cell_half_planes(f.exact_type, reduced.generators()));
    if (f.dim == 3) {
      detail::sort_counter_clockwise(vertices);
    } else if (vertices.size() > 2) {
      vertices = {vertices.front(), vertices.back()};
    }
    scene.cells.push_back(SvgCell{f.dim, std::move(vertices)});
  }
  return scene;
}

/// SVG text for the scene: 40 units per tropical unit, y pointing up, the
/// generator bounding box centred with one unit of margin.
inline std::string render_svg(const SvgScene& scene) {
  Scalar xmin = scene.generators.front().x, xmax = xmin;
  Scalar ymin = scene.generators.front().y, ymax = ymin;
  for (const auto& g : scene.generators) {
    xmin = min(xmin, g.x);
    xmax = max(xmax, g.x);
    ymin = min(ymin, g.y);
    ymax = max(ymax, g.y);
  }
  const Scalar unit(kSvgUnit);
  const Scalar width = unit * (xmax - xmin) + 2 * unit;
  const Scalar height = unit * (ymax - ymin) + 2 * unit;
  auto sx = [&](const Scalar& x) { return detail::decimal(unit * (x - xmin) + unit); };
  auto sy = [&](const Scalar& y) { return detail::decimal(unit * (ymax - y) + unit); };

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << detail::decimal(width)
     << "\" height=\"" << detail::decimal(height) << "\" viewBox=\"0 0 "
     << detail::decimal(width) << ' ' << detail::decimal(height) << "\">\n";
  os << "  <g class=\"cells\" fill=\"#c9daf8\" stroke=\"#3c78d8\" stroke-width=\"1\">\n";
  for (const auto& cell : scene.cells) {
    if (cell.vertices.size() < 2) continue;
    if (cell.dim == 3) {
      os << "    <polygon class=\"cell\" points=\"";
      for (std::size_t k = 0; k < cell.vertices.size(); ++k) {
        os << (k ? " " : "") << sx(cell.vertices[k].x) << ',' << sy(cell.vertices[k].y);
      }
      os << "\"/>\n";
    } else {
      os << "    <line class=\"cell\" x1=\"" << sx(cell.vertices[0].x) << "\" y1=\""
         << sy(cell.vertices[0].y) << "\" x2=\"" << sx(cell.vertices[1].x) << "\" y2=\""
         << sy(cell.vertices[1].y) << "\" stroke-width=\"2\"/>\n";
    }
  }
  os << "  </g>\n";
  os << "  <g class=\"generators\" fill=\"#000000\" font-family=\"sans-serif\" "
        "font-size=\"10\">\n";
  for (const auto& g : scene.generators) {
    const std::string label = "(" + g.x.str() + "," + g.y.str() + ")";
    os << "    <circle class=\"generator\" cx=\"" << sx(g.x) << "\" cy=\"" << sy(g.y)
       << "\" r=\"4\" data-point=\"" << g.x.str() << ',' << g.y.str() << "\"/>\n";
    os << "    <text x=\"" << sx(g.x) << "\" y=\"" << sy(g.y) << "\" dx=\"6\" dy=\"-6\">"
       << label << "</text>\n";
  }
  os << "  </g>\n</svg>\n";
  return os.str();
}

inline std::string plot_svg(const Polytope& p, CellOptions options = {}) {
  return render_svg(build_scene(p, options));
}

}  // namespace tropcheck
