// SPDX-License-Identifier: Apache-2.0
#include "rotakit/geometry.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace rotakit {

double pseudo_angle(Point2 d) {
  const double denom = std::abs(d.x) + std::abs(d.y);
  if (denom == 0.0) return 0.0;
  const double p = d.x / denom;  // in [-1, 1]
  return d.y < 0.0 ? 3.0 + p : 1.0 - p;
}

void Tolerance::validate() const {
  if (!(eps_geom > 0.0) || !(eps_geom <= eps_dm) || !(eps_dm < 1e-3)) {
    throw std::invalid_argument(
        "tolerance must satisfy 0 < eps_geom <= eps_dm < 1e-3");
  }
}

double polygon_area(std::span<const Point2> pts) {
  const std::size_t n = pts.size();
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const Point2& a = pts[i];
    const Point2& b = pts[(i + 1) % n];
    s += cross(a, b);
  }
  return 0.5 * s;
}

Point2 polygon_centroid(std::span<const Point2> pts) {
  const std::size_t n = pts.size();
  double a6 = 0.0, cx = 0.0, cy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const Point2& p = pts[i];
    const Point2& q = pts[(i + 1) % n];
    const double w = cross(p, q);
    a6 += w;
    cx += (p.x + q.x) * w;
    cy += (p.y + q.y) * w;
  }
  a6 *= 3.0;  // 6 * area
  if (a6 == 0.0) throw DegenerateInput("centroid of zero-area polygon");
  return {cx / a6, cy / a6};
}

namespace {

// Length scale of a point cloud: max distance from the coordinate mean.
double cloud_scale(std::span<const Point2> pts, Point2* mean_out) {
  Point2 m{0.0, 0.0};
  for (const Point2& p : pts) m = m + p;
  m = (1.0 / static_cast<double>(pts.size())) * m;
  double s = 0.0;
  for (const Point2& p : pts) s = std::max(s, distance(p, m));
  if (mean_out) *mean_out = m;
  return s;
}

}  // namespace

ConvexBody normalize_body(std::span<const Point2> pts, const Tolerance& tol) {
  tol.validate();
  if (pts.size() < 3) throw DegenerateInput("fewer than 3 vertices");

  Point2 mean;
  const double scale = cloud_scale(pts, &mean);
  if (scale == 0.0) throw DegenerateInput("all vertices coincide");

  // Order by angle around the mean; nearer point first on ties so that a
  // point inside a radial run is seen (and rejected/merged) deterministically.
  std::vector<Point2> v(pts.begin(), pts.end());
  std::sort(v.begin(), v.end(), [&](const Point2& a, const Point2& b) {
    const double pa = pseudo_angle(a - mean), pb = pseudo_angle(b - mean);
    if (pa != pb) return pa < pb;
    return norm2(a - mean) < norm2(b - mean);
  });

  // Drop near-duplicate neighbours (cyclically).
  const double dup = tol.eps_geom * scale;
  std::vector<Point2> w;
  w.reserve(v.size());
  for (const Point2& p : v) {
    if (w.empty() || distance(w.back(), p) > dup) w.push_back(p);
  }
  while (w.size() > 1 && distance(w.front(), w.back()) <= dup) w.pop_back();
  if (w.size() < 3) throw DegenerateInput("fewer than 3 distinct vertices");

  // One cyclic pass. Reflex turns are an error; collinear middles are merged.
  const double flat = tol.eps_geom * scale * scale;
  std::vector<Point2> out;
  out.reserve(w.size());
  const std::size_t n = w.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point2& prev = w[(i + n - 1) % n];
    const Point2& cur = w[i];
    const Point2& next = w[(i + 1) % n];
    const double c = cross(cur - prev, next - cur);
    if (c < -flat) throw NonConvexInput("reflex turn at vertex");
    if (c <= flat) continue;  // collinear: merge away
    out.push_back(cur);
  }
  if (out.size() < 3) throw DegenerateInput("degenerate after merging");

  const double area = polygon_area(out);
  if (area <= tol.eps_geom * scale * scale) {
    throw DegenerateInput("polygon area below tolerance");
  }

  ConvexBody body;
  body.center = polygon_centroid(out);

  // Canonical start: smallest polar angle around the centroid.
  std::size_t start = 0;
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < out.size(); ++i) {
    const double a = pseudo_angle(out[i] - body.center);
    if (a < best) {
      best = a;
      start = i;
    }
  }
  std::rotate(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(start),
              out.end());

  body.vertices = std::move(out);
  body.inradius = inradius_about(body.vertices, body.center);
  body.circumradius = circumradius_about(body.vertices, body.center);
  return body;
}

double diameter(std::span<const Point2> pts) {
  double best = 0.0;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      best = std::max(best, norm2(pts[i] - pts[j]));
    }
  }
  return std::sqrt(best);
}

double diameter_calipers(std::span<const Point2> pts) {
  const std::size_t n = pts.size();
  if (n <= 3) return diameter(pts);
  // Antipodal pair walk: for each edge, advance the far vertex while the
  // triangle area keeps growing.
  auto area2 = [&](std::size_t a, std::size_t b, std::size_t c) {
    return cross(pts[b] - pts[a], pts[c] - pts[a]);
  };
  double best = 0.0;
  std::size_t j = 1;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t i1 = (i + 1) % n;
    std::size_t guard = 0;
    while (guard++ < n &&
           area2(i, i1, (j + 1) % n) > area2(i, i1, j)) {
      j = (j + 1) % n;
    }
    best = std::max({best, norm2(pts[i] - pts[j]), norm2(pts[i1] - pts[j])});
  }
  return std::sqrt(best);
}

double point_segment_distance(Point2 p, Point2 a, Point2 b, Point2* nearest) {
  const Point2 ab = b - a;
  const double len2 = norm2(ab);
  double t = 0.0;
  if (len2 > 0.0) t = std::clamp(dot(p - a, ab) / len2, 0.0, 1.0);
  const Point2 q = a + t * ab;
  if (nearest) *nearest = q;
  return distance(p, q);
}

double inradius_about(std::span<const Point2> pts, Point2 center) {
  const std::size_t n = pts.size();
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) {
    best = std::min(best,
                    point_segment_distance(center, pts[i], pts[(i + 1) % n]));
  }
  return best;
}

double circumradius_about(std::span<const Point2> pts, Point2 center) {
  double best = 0.0;
  for (const Point2& p : pts) best = std::max(best, norm2(p - center));
  return std::sqrt(best);
}

double point_polygon_distance(Point2 p, std::span<const Point2> poly) {
  const std::size_t n = poly.size();
  if (n == 0) return std::numeric_limits<double>::infinity();
  if (n == 1) return distance(p, poly[0]);
  bool inside = true;
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) {
    const Point2& a = poly[i];
    const Point2& b = poly[(i + 1) % n];
    if (cross(b - a, p - a) < 0.0) inside = false;
    best = std::min(best, point_segment_distance(p, a, b));
  }
  return inside ? 0.0 : best;
}

double hausdorff_distance(std::span<const Point2> a,
                          std::span<const Point2> b) {
  // For convex sets the directed distance is maximized at a vertex.
  double h = 0.0;
  for (const Point2& p : a) h = std::max(h, point_polygon_distance(p, b));
  for (const Point2& p : b) h = std::max(h, point_polygon_distance(p, a));
  return h;
}

std::vector<Point2> rotate_about(std::span<const Point2> pts, Point2 center,
                                 double angle) {
  std::vector<Point2> out;
  out.reserve(pts.size());
  const double c = std::cos(angle), s = std::sin(angle);
  for (const Point2& p : pts) {
    const Point2 d = p - center;
    out.push_back({center.x + c * d.x - s * d.y, center.y + s * d.x + c * d.y});
  }
  return out;
}

std::vector<Point2> clip_halfplane(std::span<const Point2> pts,
                                   Point2 line_point, Point2 inward_normal) {
  std::vector<Point2> out;
  const std::size_t n = pts.size();
  out.reserve(n + 2);
  for (std::size_t i = 0; i < n; ++i) {
    const Point2& a = pts[i];
    const Point2& b = pts[(i + 1) % n];
    const double da = dot(a - line_point, inward_normal);
    const double db = dot(b - line_point, inward_normal);
    if (da >= 0.0) {
      out.push_back(a);
      if (db < 0.0) out.push_back(a + (da / (da - db)) * (b - a));
    } else if (db >= 0.0) {
      out.push_back(a + (da / (da - db)) * (b - a));
    }
  }
  return out;
}

RayHit ray_boundary_intersection(const ConvexBody& body, Point2 origin,
                                 Point2 dir) {
  const double len = norm(dir);
  if (len == 0.0) throw NumericalFailure("zero ray direction");
  const Point2 d = (1.0 / len) * dir;
  const std::size_t n = body.vertices.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point2& a = body.vertices[i];
    const Point2& b = body.vertices[(i + 1) % n];
    const Point2 e = b - a;
    const double denom = cross(d, e);
    if (denom == 0.0) continue;  // parallel
    const Point2 ao = a - origin;
    const double t = cross(ao, e) / denom;
    const double s = cross(ao, d) / denom;
    if (t > 0.0 && s >= -1e-12 && s <= 1.0 + 1e-12) {
      return {origin + t * d, i, t};
    }
  }
  throw NumericalFailure("ray found no boundary crossing");
}

double polar_angle(Point2 v) {
  double a = std::atan2(v.y, v.x);
  if (a < 0.0) a += 2.0 * std::acos(-1.0);
  return a;
}

}  // namespace rotakit
