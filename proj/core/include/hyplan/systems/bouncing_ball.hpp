#pragma once

#include "hyplan/hybrid_system.hpp"

namespace hyplan {

/// Ball of height h and velocity v under gravity, bouncing at h = 0.
struct BouncingBallConfig {
  double e = 0.8;          // restitution, (0, 1]
  double gravity = 9.81;   // m/s^2
  double h_max = 1.5;      // sampling bound on h
  double v_max = 6.0;      // sampling bound on |v|

  void check() const;
};

/// State (h, v), one input fixed at zero.
///   f = (v, -gravity),  C = {h >= 0} \ D
///   g = (0, -e v),      D = {h <= 0, v < 0}
/// No unsafe set.
HybridSystem make_bouncing_ball(const BouncingBallConfig& cfg = {});

}  // namespace hyplan
