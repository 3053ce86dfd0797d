#include "hyplan/systems/geometry.hpp"

#include "hyplan/error.hpp"

#include <array>
#include <cmath>
#include <limits>

namespace hyplan {

namespace {
constexpr double kTieTolerance = 1e-12;

double side_depth(const Rect& r, Side side, const Point2& p) {
  switch (side) {
    case Side::kLeft: return p.x() - r.x_min;
    case Side::kRight: return r.x_max - p.x();
    case Side::kBottom: return p.y() - r.y_min;
    case Side::kTop: return r.y_max - p.y();
  }
  return 0.0;
}
}  // namespace

Point2 outward_normal(Side side) {
  switch (side) {
    case Side::kLeft: return {-1.0, 0.0};
    case Side::kRight: return {1.0, 0.0};
    case Side::kBottom: return {0.0, -1.0};
    case Side::kTop: return {0.0, 1.0};
  }
  return {0.0, 0.0};
}

double signed_distance(const Rect& r, const Point2& p) {
  const double dx = std::max(r.x_min - p.x(), p.x() - r.x_max);
  const double dy = std::max(r.y_min - p.y(), p.y() - r.y_max);
  if (dx <= 0.0 && dy <= 0.0) return std::max(dx, dy);
  return std::hypot(std::max(dx, 0.0), std::max(dy, 0.0));
}

double signed_distance(const std::vector<Rect>& rects, const Point2& p) {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& r : rects) best = std::min(best, signed_distance(r, p));
  return best;
}

std::optional<Face> contact_face(const std::vector<Rect>& rects, const Point2& p, const Point2& v) {
  std::optional<std::size_t> deepest;
  double deepest_sd = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < rects.size(); ++i) {
    if (!rects[i].contains(p)) continue;
    const double sd = signed_distance(rects[i], p);
    if (sd < deepest_sd) {
      deepest = i;
      deepest_sd = sd;
    }
  }
  if (!deepest) return std::nullopt;

  const Rect& r = rects[*deepest];
  constexpr std::array<Side, 4> sides{Side::kLeft, Side::kRight, Side::kBottom, Side::kTop};
  double min_depth = std::numeric_limits<double>::infinity();
  for (Side s : sides) min_depth = std::min(min_depth, side_depth(r, s, p));

  // Among the closest sides, the one crossed first when moving from p
  // along -v, i.e. the side the point came through.
  std::optional<Side> chosen;
  double first_exit = std::numeric_limits<double>::infinity();
  for (Side s : sides) {
    const double depth = side_depth(r, s, p);
    if (depth > min_depth + kTieTolerance) continue;
    if (!chosen) chosen = s;
    const double speed_out = -v.dot(outward_normal(s));
    if (speed_out <= 0.0) continue;
    const double exit = depth / speed_out;
    if (exit < first_exit) {
      first_exit = exit;
      chosen = s;
    }
  }
  return Face{*deepest, *chosen, outward_normal(*chosen), min_depth};
}

std::optional<Face> impact_face(const std::vector<Rect>& rects, const Point2& p, const Point2& v, double band) {
  const double sd = signed_distance(rects, p);
  if (sd > 0.0 || sd < -band) return std::nullopt;
  auto face = contact_face(rects, p, v);
  if (!face || !(v.dot(face->normal) < 0.0)) return std::nullopt;
  return face;
}

std::pair<Point2, Face> sample_boundary_point(const std::vector<Rect>& rects, RngStream& rng) {
  if (rects.empty()) throw Error(ErrorCode::kSamplingExhausted, "no surfaces to sample");
  const auto idx = std::min(rects.size() - 1, static_cast<std::size_t>(rng.uniform01() * static_cast<double>(rects.size())));
  const auto side = static_cast<Side>(std::min(3, static_cast<int>(rng.uniform01() * 4.0)));
  const Rect& r = rects[idx];
  const double sx = rng.uniform(r.x_min, r.x_max);
  const double sy = rng.uniform(r.y_min, r.y_max);
  Point2 p;
  switch (side) {
    case Side::kLeft: p = {r.x_min, sy}; break;
    case Side::kRight: p = {r.x_max, sy}; break;
    case Side::kBottom: p = {sx, r.y_min}; break;
    case Side::kTop: p = {sx, r.y_max}; break;
  }
  return {p, Face{idx, side, outward_normal(side), 0.0}};
}

}  // namespace hyplan
