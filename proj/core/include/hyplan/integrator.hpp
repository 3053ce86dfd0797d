#pragma once

#include "hyplan/hybrid_system.hpp"

namespace hyplan {

/// Classical fourth-order Runge-Kutta slope (k1 + 2 k2 + 2 k3 + k4) / 6 for
/// x' = f(x, u) with u held constant over the step.
Vector rk4_increment(const FlowMap& f, const Vector& x, const Vector& u, double dt);

/// x + dt * rk4_increment(f, x, u, dt).
Vector rk4_step(const FlowMap& f, const Vector& x, const Vector& u, double dt);

}  // namespace hyplan
