#pragma once

#include "hyplan/rng.hpp"
#include "hyplan/types.hpp"

#include <Eigen/Core>

#include <cstddef>
#include <optional>
#include <vector>

namespace hyplan {

using Point2 = Eigen::Vector2d;

/// Axis-aligned rectangle [x_min, x_max] x [y_min, y_max].
struct Rect {
  double x_min = 0.0;
  double x_max = 0.0;
  double y_min = 0.0;
  double y_max = 0.0;

  bool contains(const Point2& p) const { return p.x() >= x_min && p.x() <= x_max && p.y() >= y_min && p.y() <= y_max; }
};

enum class Side { kLeft, kRight, kBottom, kTop };

/// Outward unit normal of a rectangle side.
Point2 outward_normal(Side side);

/// Euclidean distance to the rectangle outside it, minus the depth to the
/// closest side inside it.
double signed_distance(const Rect& r, const Point2& p);

/// Minimum over the rectangles; +inf for an empty list.
double signed_distance(const std::vector<Rect>& rects, const Point2& p);

struct Face {
  std::size_t rect = 0;
  Side side = Side::kLeft;
  Point2 normal;  // outward
  double depth = 0.0;
};

/// Side through which p (inside or on a rectangle) entered: the closest
/// side of the deepest containing rectangle. Depth ties go to the side
/// that the reversed velocity ray crosses first. Empty when p lies in no
/// rectangle.
std::optional<Face> contact_face(const std::vector<Rect>& rects, const Point2& p, const Point2& v);

/// Contact face when p is at most `band` deep inside the rectangles and v
/// points strictly into that face.
std::optional<Face> impact_face(const std::vector<Rect>& rects, const Point2& p, const Point2& v, double band);

/// Uniform point on the boundary of a uniformly chosen rectangle side.
/// Returns the point and the side it lies on.
std::pair<Point2, Face> sample_boundary_point(const std::vector<Rect>& rects, RngStream& rng);

}  // namespace hyplan
