#pragma once

// Exact convex polygon clipping for area fractions of grid cells.

#include <stdexcept>
#include <vector>

#include "monosol/rational.hpp"

namespace monosol {

struct Point2 {
  Rational u;
  Rational v;
};

/// p*u + q*v <= r
struct HalfPlane {
  Rational p;
  Rational q;
  Rational r;
};

/// Intersection of half-planes; convex by construction.
struct Region2D {
  std::vector<HalfPlane> halfplanes;

  Region2D& add(Rational p, Rational q, Rational r) {
    halfplanes.push_back({std::move(p), std::move(q), std::move(r)});
    return *this;
  }
};

/// Axis-aligned cell [u0, u1] x [v0, v1].
struct Cell {
  Rational u0, u1, v0, v1;
};

/// Sutherland-Hodgman step: keeps the part of a convex polygon with p*u + q*v <= r.
inline std::vector<Point2> clip_polygon(const std::vector<Point2>& poly, const HalfPlane& h) {
  std::vector<Point2> out;
  const std::size_t m = poly.size();
  for (std::size_t i = 0; i < m; ++i) {
    const Point2& a = poly[i];
    const Point2& b = poly[(i + 1) % m];
    Rational fa = h.p * a.u + h.q * a.v - h.r;
    Rational fb = h.p * b.u + h.q * b.v - h.r;
    if (sgn(fa) <= 0) out.push_back(a);
    if ((sgn(fa) < 0 && sgn(fb) > 0) || (sgn(fa) > 0 && sgn(fb) < 0)) {
      Rational t = fa / (fa - fb);
      out.push_back({a.u + t * (b.u - a.u), a.v + t * (b.v - a.v)});
    }
  }
  return out;
}

/// Shoelace area of a simple polygon.
inline Rational polygon_area(const std::vector<Point2>& poly) {
  Rational s = 0;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Point2& a = poly[i];
    const Point2& b = poly[(i + 1) % poly.size()];
    s += a.u * b.v - a.v * b.u;
  }
  return abs(s) / 2;
}

inline std::vector<Point2> clip_to_region(const Region2D& region, const Cell& cell) {
  std::vector<Point2> poly{{cell.u0, cell.v0}, {cell.u1, cell.v0}, {cell.u1, cell.v1}, {cell.u0, cell.v1}};
  for (const auto& h : region.halfplanes) {
    poly = clip_polygon(poly, h);
    if (poly.size() < 3) return {};
  }
  return poly;
}

/// area(region ∩ cell) / area(cell), exactly.
inline Rational clip_fraction(const Region2D& region, const Cell& cell) {
  Rational cell_area = (cell.u1 - cell.u0) * (cell.v1 - cell.v0);
  if (sgn(cell_area) <= 0) throw std::invalid_argument("clip_fraction: degenerate cell");
  auto poly = clip_to_region(region, cell);
  if (poly.empty()) return 0;
  return polygon_area(poly) / cell_area;
}

/// Cell (i, j) of the uniform k x k grid on [0, 1]^2, 0-based.
inline Cell grid_cell(int i, int j, int k) {
  return Cell{rational(i, k), rational(i + 1, k), rational(j, k), rational(j + 1, k)};
}

}  // namespace monosol
