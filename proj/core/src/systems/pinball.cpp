#include "hyplan/systems/pinball.hpp"

#include "hyplan/error.hpp"

#include <cmath>

namespace hyplan {

namespace {

Point2 position(const Vector& x) { return {x[0], x[1]}; }
Point2 velocity(const Vector& x) { return {x[2], x[3]}; }

bool valid_rect(const Rect& r) { return r.x_min <= r.x_max && r.y_min <= r.y_max; }

}  // namespace

void PinballConfig::check() const {
  for (const auto& r : walls) {
    if (!valid_rect(r)) throw Error(ErrorCode::kInvalidArgument, "wall rectangle has min > max");
  }
  for (const auto& r : paddles) {
    if (!valid_rect(r)) throw Error(ErrorCode::kInvalidArgument, "paddle rectangle has min > max");
    if (r.x_min < 0.0 || r.x_max > 5.0) throw Error(ErrorCode::kInvalidArgument, "paddles must lie within x in [0, 5]");
  }
  if (!(e_wall > 0.0 && e_wall < 1.0) || !(e_paddle > 0.0 && e_paddle < 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "restitution must lie in (0, 1)");
  }
  if (!(u_max >= 0.0) || !(paddle_impulse_max >= 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "input bounds must be nonnegative");
  }
  if (!(surface_band > 0.0)) throw Error(ErrorCode::kInvalidArgument, "surface_band must be positive");
  if (!(v_max > 0.0) || !(a_max > 0.0)) throw Error(ErrorCode::kInvalidArgument, "sampling bounds must be positive");
}

HybridSystem make_pinball(const PinballConfig& cfg) {
  cfg.check();
  std::vector<Rect> m = cfg.walls;
  m.insert(m.end(), cfg.paddles.begin(), cfg.paddles.end());
  const std::size_t wall_count = cfg.walls.size();
  const double band = cfg.surface_band;

  HybridSystem sys;
  sys.name = "pinball";
  sys.state_dim = 6;
  sys.input_dim = 2;
  sys.state_bounds = {{0.0, 5.0},           {-11.0, 0.0},
                      {-cfg.v_max, cfg.v_max}, {-cfg.v_max, cfg.v_max},
                      {-cfg.a_max, cfg.a_max}, {-cfg.gravity, 0.0}};
  sys.flow_input_bounds = {{-cfg.u_max, cfg.u_max}, {0.0, 0.0}};
  sys.jump_input_bounds = {{0.0, cfg.paddle_impulse_max}, {-cfg.u_max, cfg.u_max}};

  sys.flow_map = [](const Vector& x, const Vector& u) {
    Vector dx(6);
    dx << x[2], x[3], x[4], x[5], u[0], u[1];
    return dx;
  };
  auto in_d = [m, band](const Vector& x, const Vector&) {
    return impact_face(m, position(x), velocity(x), band).has_value();
  };
  sys.in_jump_set = in_d;
  sys.in_flow_set = [m, band, in_d](const Vector& x, const Vector& u) {
    return signed_distance(m, position(x)) >= -band && !in_d(x, u);
  };
  sys.in_unsafe_set = [m, band](const Vector& x, const Vector&) {
    const double px = x[0];
    const double py = x[1];
    if (py < -10.0 && ((px >= 0.0 && px < 1.0) || (px > 4.0 && px <= 5.0))) return true;
    if (px < -band || px > 5.0 + band) return true;
    return signed_distance(m, {px, py}) < -band;
  };
  sys.jump_map = [m, band, wall_count, e_wall = cfg.e_wall, e_paddle = cfg.e_paddle](const Vector& x,
                                                                                    const Vector& u) {
    const Point2 v = velocity(x);
    const auto face = impact_face(m, position(x), v, band);
    Vector xp = x;
    xp[4] = 0.0;
    xp[5] = 0.0;
    if (!face) return xp;
    const bool paddle = face->rect >= wall_count;
    const bool vertical = face->side == Side::kLeft || face->side == Side::kRight;
    const Point2 n = face->normal;
    const Point2 t{-n.y(), n.x()};
    const double vn = v.dot(n);
    const double vt = v.dot(t);
    const double vn_plus = -(paddle ? e_paddle : e_wall) * vn + (paddle && vertical ? u[0] : 0.0);
    const double vt_plus = vt + (paddle && face->side == Side::kTop ? u[1] : 0.0);
    const Point2 vp = vn_plus * n + vt_plus * t;
    xp[2] = vp.x();
    xp[3] = vp.y();
    return xp;
  };
  sys.jump_set_sampler = [m, band, v_max = cfg.v_max, a_max = cfg.a_max, g = cfg.gravity](RngStream& rng) {
    for (int attempt = 0; attempt < 100; ++attempt) {
      const auto [p, face] = sample_boundary_point(m, rng);
      const Point2 n = face.normal;
      const Point2 t{-n.y(), n.x()};
      const double vn = -rng.uniform_positive(v_max);
      const double vt = rng.uniform(-v_max, v_max);
      const Point2 v = vn * n + vt * t;
      Vector x(6);
      x << p.x(), p.y(), v.x(), v.y(), rng.uniform(-a_max, a_max), rng.uniform(-g, 0.0);
      if (impact_face(m, p, v, band)) return x;
    }
    throw Error(ErrorCode::kSamplingExhausted, "could not sample a pinball impact state");
  };
  return sys;
}

std::vector<Vector> pinball_initial_states(const PinballConfig& cfg) {
  std::vector<Vector> states;
  for (double px : {0.5, 1.0, 2.0, 3.5, 4.0, 4.5}) {
    Vector x(6);
    x << px, 0.0, 0.0, 0.0, 0.0, -cfg.gravity;
    states.push_back(x);
  }
  return states;
}

}  // namespace hyplan
