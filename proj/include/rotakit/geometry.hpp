// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include "rotakit/errors.hpp"

namespace rotakit {

struct Point2 {
  double x{0.0};
  double y{0.0};
};

inline Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
inline Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
inline Point2 operator*(double s, Point2 a) { return {s * a.x, s * a.y}; }
inline Point2 operator*(Point2 a, double s) { return {s * a.x, s * a.y}; }

inline double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }
inline double norm2(Point2 a) { return dot(a, a); }
inline double norm(Point2 a) { return std::hypot(a.x, a.y); }
inline double distance(Point2 a, Point2 b) { return norm(a - b); }

// Perpendicular, 90 degrees counterclockwise.
inline Point2 perp(Point2 a) { return {-a.y, a.x}; }

// Monotone surrogate for atan2: strictly increasing with angle, maps
// [0, 2pi) onto [0, 4). Cheap enough for hot loops.
double pseudo_angle(Point2 d);

// Relative tolerances used throughout. eps_geom guards geometric
// constructions, eps_dm guards max-diameter comparisons.
struct Tolerance {
  double eps_geom{1e-9};
  double eps_dm{1e-7};

  // Exact analytic constructions (regular polygons and friends).
  static Tolerance analytic() { return {1e-9, 1e-7}; }
  // Sampled or otherwise approximate bodies.
  static Tolerance generated() { return {1e-6, 1e-5}; }

  // Invariant: 0 < eps_geom <= eps_dm < 1e-3.
  void validate() const;
};

// Convex polygon with cached derived quantities. Vertices are
// counterclockwise with collinear runs merged; center is the area centroid.
struct ConvexBody {
  std::vector<Point2> vertices;
  Point2 center;
  double inradius{0.0};
  double circumradius{0.0};
};

double polygon_area(std::span<const Point2> pts);
Point2 polygon_centroid(std::span<const Point2> pts);

// Builds a ConvexBody from an unordered point set: orders vertices
// counterclockwise around their mean, merges duplicate/collinear vertices,
// verifies convexity and caches centroid/inradius/circumradius.
// Throws NonConvexInput on a reflex turn beyond tolerance and
// DegenerateInput when the area is ~zero or fewer than 3 vertices remain.
ConvexBody normalize_body(std::span<const Point2> pts,
                          const Tolerance& tol = Tolerance::analytic());

// Largest pairwise vertex distance, O(n^2). This is the reference
// implementation used as the oracle in all max-diameter checks.
double diameter(std::span<const Point2> pts);

// Rotating-calipers diameter for a convex counterclockwise polygon, O(n).
// Agrees with diameter() on convex inputs; used in search hot loops.
double diameter_calipers(std::span<const Point2> pts);

double inradius_about(std::span<const Point2> pts, Point2 center);
double circumradius_about(std::span<const Point2> pts, Point2 center);

// Distance from p to segment [a, b] and the nearest point on it.
double point_segment_distance(Point2 p, Point2 a, Point2 b,
                              Point2* nearest = nullptr);

// Distance from p to a convex polygon as a filled set (0 if inside).
double point_polygon_distance(Point2 p, std::span<const Point2> poly);

// Symmetric Hausdorff distance between two convex polygons (filled sets).
double hausdorff_distance(std::span<const Point2> a, std::span<const Point2> b);

std::vector<Point2> rotate_about(std::span<const Point2> pts, Point2 center,
                                 double angle);
inline Point2 rotate_about(Point2 p, Point2 center, double angle) {
  const double c = std::cos(angle), s = std::sin(angle);
  const Point2 d = p - center;
  return {center.x + c * d.x - s * d.y, center.y + s * d.x + c * d.y};
}

// Clips a polygon against the half-plane {z : (z - line_point) . inward >= 0}.
// The result may be empty; vertices on the line are kept.
std::vector<Point2> clip_halfplane(std::span<const Point2> pts,
                                   Point2 line_point, Point2 inward_normal);

struct RayHit {
  Point2 point;       // boundary crossing
  std::size_t edge;   // index i of edge (v_i, v_{i+1}) containing the point
  double t;           // parameter along the ray, > 0
};

// First boundary crossing of the ray origin + t*dir, t > 0. origin must be
// strictly interior. Throws NumericalFailure if no crossing is found.
RayHit ray_boundary_intersection(const ConvexBody& body, Point2 origin,
                                 Point2 dir);
inline RayHit ray_boundary_intersection(const ConvexBody& body, Point2 dir) {
  return ray_boundary_intersection(body, body.center, dir);
}

// Angle of the vector v, normalized to [0, 2pi).
double polar_angle(Point2 v);
// Angle of p around c, normalized to [0, 2pi).
inline double polar_angle(Point2 p, Point2 c) { return polar_angle(p - c); }

}  // namespace rotakit
