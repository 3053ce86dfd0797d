#include "hyplan/integrator.hpp"

namespace hyplan {

Vector rk4_increment(const FlowMap& f, const Vector& x, const Vector& u, double dt) {
  const Vector k1 = f(x, u);
  const Vector k2 = f(x + 0.5 * dt * k1, u);
  const Vector k3 = f(x + 0.5 * dt * k2, u);
  const Vector k4 = f(x + dt * k3, u);
  return (k1 + 2.0 * k2 + 2.0 * k3 + k4) / 6.0;
}

Vector rk4_step(const FlowMap& f, const Vector& x, const Vector& u, double dt) {
  return x + dt * rk4_increment(f, x, u, dt);
}

}  // namespace hyplan
