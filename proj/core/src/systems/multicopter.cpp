#include "hyplan/systems/multicopter.hpp"

#include "hyplan/error.hpp"

#include <cmath>

namespace hyplan {

namespace {
Point2 position(const Vector& x) { return {x[0], x[1]}; }
Point2 velocity(const Vector& x) { return {x[2], x[3]}; }
}  // namespace

void MulticopterConfig::check() const {
  for (const auto& r : walls) {
    if (r.x_min > r.x_max || r.y_min > r.y_max) throw Error(ErrorCode::kInvalidArgument, "wall rectangle has min > max");
  }
  if (!(e > 0.0 && e < 1.0)) throw Error(ErrorCode::kInvalidArgument, "restitution must lie in (0, 1)");
  if (!std::isfinite(kappa)) throw Error(ErrorCode::kInvalidArgument, "kappa must be finite");
  if (!(u_max >= 0.0)) throw Error(ErrorCode::kInvalidArgument, "u_max must be nonnegative");
  if (!(surface_band > 0.0)) throw Error(ErrorCode::kInvalidArgument, "surface_band must be positive");
  if (!(v_max > 0.0) || !(a_max > 0.0) || !(width > 0.0) || !(height > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "arena and sampling bounds must be positive");
  }
}

HybridSystem make_multicopter(const MulticopterConfig& cfg) {
  cfg.check();
  const std::vector<Rect> w = cfg.walls;
  const double band = cfg.surface_band;

  HybridSystem sys;
  sys.name = "multicopter";
  sys.state_dim = 6;
  sys.input_dim = 2;
  sys.state_bounds = {{0.0, cfg.width},       {0.0, cfg.height},
                      {-cfg.v_max, cfg.v_max}, {-cfg.v_max, cfg.v_max},
                      {-cfg.a_max, cfg.a_max}, {-cfg.a_max, cfg.a_max}};
  sys.flow_input_bounds = {{-cfg.u_max, cfg.u_max}, {-cfg.u_max, cfg.u_max}};
  sys.jump_input_bounds = {{0.0, 0.0}, {0.0, 0.0}};

  sys.flow_map = [](const Vector& x, const Vector& u) {
    Vector dx(6);
    dx << x[2], x[3], x[4], x[5], u[0], u[1];
    return dx;
  };
  auto in_d = [w, band](const Vector& x, const Vector&) {
    return impact_face(w, position(x), velocity(x), band).has_value();
  };
  sys.in_jump_set = in_d;
  sys.in_flow_set = [w, band, in_d](const Vector& x, const Vector& u) {
    return signed_distance(w, position(x)) >= -band && !in_d(x, u);
  };
  sys.in_unsafe_set = [w, band, width = cfg.width, height = cfg.height](const Vector& x, const Vector&) {
    if (x[0] <= 0.0 || x[0] >= width || x[1] <= 0.0 || x[1] >= height) return true;
    return signed_distance(w, position(x)) < -band;
  };
  sys.jump_map = [w, band, e = cfg.e, kappa = cfg.kappa](const Vector& x, const Vector&) {
    const Point2 v = velocity(x);
    const auto face = impact_face(w, position(x), v, band);
    Vector xp = x;
    xp[4] = 0.0;
    xp[5] = 0.0;
    if (!face) return xp;
    const Point2 n = face->normal;
    const Point2 t{-n.y(), n.x()};
    const double vn = v.dot(n);
    const double vt = v.dot(t);
    const double vn_plus = -e * vn;
    const double vt_plus = vt + kappa * (-e - 1.0) * std::atan(vt / vn);
    const Point2 vp = vn_plus * n + vt_plus * t;
    xp[2] = vp.x();
    xp[3] = vp.y();
    return xp;
  };
  sys.jump_set_sampler = [w, band, v_max = cfg.v_max, a_max = cfg.a_max](RngStream& rng) {
    for (int attempt = 0; attempt < 100; ++attempt) {
      const auto [p, face] = sample_boundary_point(w, rng);
      const Point2 n = face.normal;
      const Point2 t{-n.y(), n.x()};
      const Point2 v = -rng.uniform_positive(v_max) * n + rng.uniform(-v_max, v_max) * t;
      Vector x(6);
      x << p.x(), p.y(), v.x(), v.y(), rng.uniform(-a_max, a_max), rng.uniform(-a_max, a_max);
      if (impact_face(w, p, v, band)) return x;
    }
    throw Error(ErrorCode::kSamplingExhausted, "could not sample a multicopter impact state");
  };
  return sys;
}

}  // namespace hyplan
