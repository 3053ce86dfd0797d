#include "hyplan/hybrid_system.hpp"

#include "hyplan/error.hpp"

namespace hyplan {

bool box_contains(const Box& box, const Vector& x) {
  if (static_cast<std::size_t>(x.size()) != box.size()) return false;
  for (std::size_t i = 0; i < box.size(); ++i) {
    if (!box[i].contains(x[static_cast<Eigen::Index>(i)])) return false;
  }
  return true;
}

Vector box_center(const Box& box) {
  Vector c(static_cast<Eigen::Index>(box.size()));
  for (std::size_t i = 0; i < box.size(); ++i) c[static_cast<Eigen::Index>(i)] = box[i].center();
  return c;
}

namespace {

void check_box(const Box& box, int dim, const std::string& what) {
  if (static_cast<int>(box.size()) != dim) {
    throw Error(ErrorCode::kInvalidArgument, what + " has " + std::to_string(box.size()) +
                                                 " dimensions, expected " + std::to_string(dim));
  }
  for (std::size_t i = 0; i < box.size(); ++i) {
    if (!(box[i].min <= box[i].max)) {
      throw Error(ErrorCode::kInvalidArgument, what + ": min > max in dimension " + std::to_string(i));
    }
  }
}

}  // namespace

void HybridSystem::check() const {
  if (state_dim <= 0) throw Error(ErrorCode::kInvalidArgument, "state_dim must be positive");
  if (input_dim < 0) throw Error(ErrorCode::kInvalidArgument, "input_dim must be nonnegative");
  check_box(state_bounds, state_dim, "state_bounds");
  check_box(flow_input_bounds, input_dim, "flow_input_bounds");
  check_box(jump_input_bounds, input_dim, "jump_input_bounds");
  if (!flow_map || !jump_map || !in_flow_set || !in_jump_set || !in_unsafe_set) {
    throw Error(ErrorCode::kInvalidArgument, "system '" + name + "' is missing a map or set predicate");
  }
}

bool in_flow_projection(const HybridSystem& sys, const Vector& x) {
  return sys.in_flow_set(x, box_center(sys.flow_input_bounds));
}

bool in_jump_projection(const HybridSystem& sys, const Vector& x) {
  return sys.in_jump_set(x, box_center(sys.jump_input_bounds));
}

}  // namespace hyplan
