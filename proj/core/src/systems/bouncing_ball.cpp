#include "hyplan/systems/bouncing_ball.hpp"

#include "hyplan/error.hpp"

namespace hyplan {

void BouncingBallConfig::check() const {
  if (!(e > 0.0 && e <= 1.0)) throw Error(ErrorCode::kInvalidArgument, "restitution must lie in (0, 1]");
  if (!(gravity > 0.0)) throw Error(ErrorCode::kInvalidArgument, "gravity must be positive");
  if (!(h_max > 0.0) || !(v_max > 0.0)) throw Error(ErrorCode::kInvalidArgument, "sampling bounds must be positive");
}

HybridSystem make_bouncing_ball(const BouncingBallConfig& cfg) {
  cfg.check();
  HybridSystem sys;
  sys.name = "bouncing_ball";
  sys.state_dim = 2;
  sys.input_dim = 1;
  sys.state_bounds = {{0.0, cfg.h_max}, {-cfg.v_max, cfg.v_max}};
  sys.flow_input_bounds = {{0.0, 0.0}};
  sys.jump_input_bounds = {{0.0, 0.0}};

  const double g = cfg.gravity;
  const double e = cfg.e;
  auto in_d = [](const Vector& x, const Vector&) { return x[0] <= 0.0 && x[1] < 0.0; };
  sys.flow_map = [g](const Vector& x, const Vector&) {
    Vector dx(2);
    dx << x[1], -g;
    return dx;
  };
  sys.jump_map = [e](const Vector& x, const Vector&) {
    Vector xp(2);
    xp << 0.0, -e * x[1];
    return xp;
  };
  sys.in_jump_set = in_d;
  sys.in_flow_set = [in_d](const Vector& x, const Vector& u) { return x[0] >= 0.0 && !in_d(x, u); };
  sys.in_unsafe_set = [](const Vector&, const Vector&) { return false; };
  sys.jump_set_sampler = [v_max = cfg.v_max](RngStream& rng) {
    Vector x(2);
    x[0] = 0.0;
    x[1] = -rng.uniform_positive(v_max);
    return x;
  };
  return sys;
}

}  // namespace hyplan
