#pragma once

#include "hyplan/rng.hpp"
#include "hyplan/types.hpp"

#include <functional>
#include <string>

namespace hyplan {

using FlowMap = std::function<Vector(const Vector& x, const Vector& u)>;
using JumpMap = std::function<Vector(const Vector& x, const Vector& u)>;
using SetMembership = std::function<bool(const Vector& x, const Vector& u)>;
using StateSampler = std::function<Vector(RngStream& rng)>;

/// Behavioral description of a hybrid system
///
///   x' = f(x, u)   on C,
///   x+ = g(x, u)   on D,
///
/// together with the unsafe set X_u, the input sets U_C and U_D, and the
/// sampling box for states. Flow and jump inputs share one vector layout of
/// size `input_dim`; a dimension unused by a regime has a degenerate bound.
///
/// All callables must be pure.
struct HybridSystem {
  std::string name;
  int state_dim = 0;
  int input_dim = 0;
  Box state_bounds;
  Box flow_input_bounds;
  Box jump_input_bounds;

  FlowMap flow_map;
  JumpMap jump_map;
  SetMembership in_flow_set;
  SetMembership in_jump_set;
  SetMembership in_unsafe_set;

  /// Draws a state of D directly. Needed when D has zero measure inside
  /// `state_bounds` and rejection sampling cannot hit it.
  StateSampler jump_set_sampler;

  /// Throws Error(kInvalidArgument) when dimensions or bounds are inconsistent.
  void check() const;
};

/// x in C' (projection of C), tested with the center of U_C.
bool in_flow_projection(const HybridSystem& sys, const Vector& x);

/// x in D' (projection of D), tested with the center of U_D.
bool in_jump_projection(const HybridSystem& sys, const Vector& x);

}  // namespace hyplan
