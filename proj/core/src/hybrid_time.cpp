#include "hyplan/hybrid_time.hpp"

#include "hyplan/error.hpp"

namespace hyplan {

HybridTime HybridTimeDomain::max() const {
  if (intervals.empty()) throw Error(ErrorCode::kEmptySolutionPair, "empty hybrid time domain");
  return {intervals.back().t_end, intervals.back().j};
}

bool HybridTimeDomain::well_formed(bool rooted, std::string* why) const {
  auto fail = [why](std::string message) {
    if (why) *why = std::move(message);
    return false;
  };
  if (intervals.empty()) return fail("domain is empty");
  if (rooted && (intervals.front().t_start != 0.0 || intervals.front().j != 0)) {
    return fail("domain does not start at (0, 0)");
  }
  for (std::size_t k = 0; k < intervals.size(); ++k) {
    const auto& piece = intervals[k];
    if (piece.t_start < 0.0 || piece.j < 0) return fail("negative hybrid time in piece " + std::to_string(k));
    if (!(piece.t_start <= piece.t_end)) return fail("t_start > t_end in piece " + std::to_string(k));
    if (k == 0) continue;
    const auto& prev = intervals[k - 1];
    if (prev.t_end != piece.t_start) return fail("gap between pieces " + std::to_string(k - 1) + " and " + std::to_string(k));
    if (piece.j != prev.j + 1) return fail("jump counter does not increase by one at piece " + std::to_string(k));
  }
  return true;
}

}  // namespace hyplan
