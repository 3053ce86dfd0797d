#pragma once

#include <Eigen/Core>

#include <vector>

namespace hyplan {

using Vector = Eigen::VectorXd;

/// Closed interval [min, max].
struct Interval {
  double min = 0.0;
  double max = 0.0;

  bool contains(double value) const { return value >= min && value <= max; }
  double center() const { return 0.5 * (min + max); }
};

/// Axis-aligned box, one interval per dimension.
using Box = std::vector<Interval>;

bool box_contains(const Box& box, const Vector& x);
Vector box_center(const Box& box);

/// Exact elementwise equality, including matching sizes.
inline bool same_vector(const Vector& a, const Vector& b) {
  return a.size() == b.size() && (a.size() == 0 || (a.array() == b.array()).all());
}

}  // namespace hyplan
