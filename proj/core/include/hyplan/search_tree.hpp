#pragma once

#include "hyplan/hybrid_time.hpp"
#include "hyplan/solution_pair.hpp"
#include "hyplan/types.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace hyplan {

using MotionId = std::size_t;

/// A vertex of the search tree together with the edge that reaches it.
struct Motion {
  MotionId id = 0;
  Vector state;
  HybridTime time;
  std::optional<MotionId> parent;
  SolutionPair edge;  // parent.state -> state; empty for roots
  Vector input;       // input sampled for the edge

  // Used by HySST only.
  double acc_cost = 0.0;
  int num_children = 0;
  bool inactive = false;
};

/// Id-indexed forest of motions. Ids are assigned densely and never reused;
/// removed motions leave a hole.
class SearchTree {
 public:
  /// Adds a root at hybrid time (0, 0) with zero cost and an empty edge.
  MotionId add_root(Vector state);

  /// Adds an unattached vertex; it must be linked with add_edge.
  MotionId add_vertex(Vector state, HybridTime time, double cost = 0.0);

  /// Links `child` under `parent` through `edge`. The edge must start at the
  /// parent's state and end at the child's state (max-norm tolerance 1e-9),
  /// otherwise kEndpointMismatch.
  void add_edge(MotionId parent, MotionId child, SolutionPair edge, Vector input);

  /// Removes a leaf and decrements its parent's child count.
  void remove(MotionId id);

  bool contains(MotionId id) const { return id < motions_.size() && motions_[id].has_value(); }
  const Motion& at(MotionId id) const;
  Motion& at(MotionId id);

  /// Number of live motions.
  std::size_t size() const { return live_; }
  bool empty() const { return live_ == 0; }
  /// One past the largest id ever handed out.
  std::size_t id_bound() const { return motions_.size(); }
  const std::vector<MotionId>& roots() const { return roots_; }

  /// Ids from the root down to `id`, inclusive.
  std::vector<MotionId> path_to(MotionId id) const;

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (const auto& m : motions_) {
      if (m) fn(*m);
    }
  }

  /// Parent links resolve and are acyclic, every vertex reaches a root,
  /// child counts match, edges end at their vertex state.
  bool check_invariants(std::string* why = nullptr) const;

 private:
  std::vector<std::optional<Motion>> motions_;
  std::vector<MotionId> roots_;
  std::size_t live_ = 0;
};

}  // namespace hyplan
