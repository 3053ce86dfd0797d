#include "hyplan/search_tree.hpp"

#include "hyplan/error.hpp"

#include <algorithm>

namespace hyplan {

namespace {
constexpr double kEndpointTolerance = 1e-9;

bool close(const Vector& a, const Vector& b) {
  return a.size() == b.size() && (a.size() == 0 || (a - b).cwiseAbs().maxCoeff() <= kEndpointTolerance);
}
}  // namespace

MotionId SearchTree::add_root(Vector state) {
  const MotionId id = add_vertex(std::move(state), {0.0, 0}, 0.0);
  roots_.push_back(id);
  return id;
}

MotionId SearchTree::add_vertex(Vector state, HybridTime time, double cost) {
  Motion m;
  m.id = motions_.size();
  m.state = std::move(state);
  m.time = time;
  m.acc_cost = cost;
  motions_.emplace_back(std::move(m));
  ++live_;
  return motions_.size() - 1;
}

void SearchTree::add_edge(MotionId parent, MotionId child, SolutionPair edge, Vector input) {
  Motion& p = at(parent);
  Motion& c = at(child);
  if (c.parent || std::find(roots_.begin(), roots_.end(), child) != roots_.end()) {
    throw Error(ErrorCode::kInvalidArgument, "motion " + std::to_string(child) + " is already attached");
  }
  if (parent == child) throw Error(ErrorCode::kInvalidArgument, "self loop");
  if (edge.empty()) throw Error(ErrorCode::kEmptyOperand, "edge has no samples");
  if (!close(edge.front().state, p.state)) {
    throw Error(ErrorCode::kEndpointMismatch, "edge does not start at the parent state");
  }
  if (!close(edge.back().state, c.state)) {
    throw Error(ErrorCode::kEndpointMismatch, "edge does not end at the child state");
  }
  c.parent = parent;
  c.edge = std::move(edge);
  c.input = std::move(input);
  ++p.num_children;
}

void SearchTree::remove(MotionId id) {
  Motion& m = at(id);
  if (m.num_children != 0) {
    throw Error(ErrorCode::kInvalidArgument, "motion " + std::to_string(id) + " still has children");
  }
  if (m.parent) --at(*m.parent).num_children;
  roots_.erase(std::remove(roots_.begin(), roots_.end(), id), roots_.end());
  motions_[id].reset();
  --live_;
}

const Motion& SearchTree::at(MotionId id) const {
  if (!contains(id)) throw Error(ErrorCode::kUnknownMotion, "no motion with id " + std::to_string(id));
  return *motions_[id];
}

Motion& SearchTree::at(MotionId id) {
  if (!contains(id)) throw Error(ErrorCode::kUnknownMotion, "no motion with id " + std::to_string(id));
  return *motions_[id];
}

std::vector<MotionId> SearchTree::path_to(MotionId id) const {
  std::vector<MotionId> path;
  std::optional<MotionId> cur = id;
  while (cur) {
    if (path.size() > motions_.size()) throw Error(ErrorCode::kInvalidArgument, "parent links contain a cycle");
    path.push_back(*cur);
    cur = at(*cur).parent;
  }
  std::reverse(path.begin(), path.end());
  return path;
}

bool SearchTree::check_invariants(std::string* why) const {
  auto fail = [why](std::string message) {
    if (why) *why = std::move(message);
    return false;
  };
  std::vector<int> children(motions_.size(), 0);
  for (const auto& slot : motions_) {
    if (!slot) continue;
    const Motion& m = *slot;
    const bool is_root = std::find(roots_.begin(), roots_.end(), m.id) != roots_.end();
    if (is_root) {
      if (m.parent || !m.edge.empty()) return fail("root " + std::to_string(m.id) + " has a parent or edge");
      continue;
    }
    if (!m.parent) return fail("motion " + std::to_string(m.id) + " is detached");
    if (!contains(*m.parent)) return fail("motion " + std::to_string(m.id) + " has a dangling parent");
    ++children[*m.parent];
    if (m.edge.empty() || !close(m.edge.back().state, m.state)) {
      return fail("edge of motion " + std::to_string(m.id) + " does not end at its state");
    }
    std::size_t hops = 0;
    std::optional<MotionId> cur = m.parent;
    while (cur) {
      if (++hops > motions_.size()) return fail("cycle through motion " + std::to_string(m.id));
      if (!contains(*cur)) return fail("broken ancestry of motion " + std::to_string(m.id));
      cur = motions_[*cur]->parent;
    }
  }
  for (const auto& slot : motions_) {
    if (slot && slot->num_children != children[slot->id]) {
      return fail("child count of motion " + std::to_string(slot->id) + " is stale");
    }
  }
  return true;
}

}  // namespace hyplan
