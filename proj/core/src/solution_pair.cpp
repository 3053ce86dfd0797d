#include "hyplan/solution_pair.hpp"

#include "hyplan/error.hpp"
#include "hyplan/hybrid_time.hpp"

#include <algorithm>
#include <string>

namespace hyplan {

bool same_sample(const Sample& a, const Sample& b) {
  return a.time == b.time && same_vector(a.state, b.state) && same_vector(a.input, b.input);
}

SolutionPair::SolutionPair(std::vector<Sample> samples)
    : samples_(std::move(samples)) {
  if (!samples_.empty()) edge_starts_ = {0};
}

SolutionPair::SolutionPair(std::vector<Sample> samples, std::vector<std::size_t> edge_starts)
    : samples_(std::move(samples)), edge_starts_(std::move(edge_starts)) {
  if (samples_.empty()) {
    edge_starts_.clear();
    return;
  }
  if (edge_starts_.empty() || edge_starts_.front() != 0 ||
      !std::is_sorted(edge_starts_.begin(), edge_starts_.end()) ||
      edge_starts_.back() >= samples_.size()) {
    throw Error(ErrorCode::kInvalidArgument, "edge starts must be sorted sample indices beginning at 0");
  }
}

std::vector<std::size_t> SolutionPair::phase_boundaries() const {
  std::vector<std::size_t> out;
  for (std::size_t k = 1; k < samples_.size(); ++k) {
    if (samples_[k].time.j == samples_[k - 1].time.j + 1) out.push_back(k);
  }
  return out;
}

std::size_t SolutionPair::edge_of(std::size_t k) const {
  auto it = std::upper_bound(edge_starts_.begin(), edge_starts_.end(), k);
  return it == edge_starts_.begin() ? 0 : static_cast<std::size_t>(it - edge_starts_.begin()) - 1;
}

SolutionPair SolutionPair::shifted(HybridTime offset) const {
  std::vector<Sample> out = samples_;
  for (auto& s : out) s.time = s.time + offset;
  return SolutionPair(std::move(out), edge_starts_);
}

SolutionPair SolutionPair::rebased() const {
  if (samples_.empty()) return *this;
  const HybridTime first = samples_.front().time;
  return shifted({-first.t, -first.j});
}

bool operator==(const SolutionPair& a, const SolutionPair& b) {
  if (a.samples_.size() != b.samples_.size() || a.edge_starts_ != b.edge_starts_) return false;
  for (std::size_t k = 0; k < a.samples_.size(); ++k) {
    if (!same_sample(a.samples_[k], b.samples_[k])) return false;
  }
  return true;
}

HybridTimeDomain domain_of(const SolutionPair& sp) {
  if (sp.empty()) throw Error(ErrorCode::kEmptySolutionPair, "cannot take the domain of an empty solution pair");
  HybridTimeDomain dom;
  const auto& s = sp.samples();
  DomainInterval current{s.front().time.t, s.front().time.t, s.front().time.j};
  for (std::size_t k = 1; k < s.size(); ++k) {
    if (s[k].time.j != current.j) {
      dom.intervals.push_back(current);
      current = {s[k].time.t, s[k].time.t, s[k].time.j};
    } else {
      current.t_end = s[k].time.t;
    }
  }
  dom.intervals.push_back(current);
  return dom;
}

SolutionPair concatenate(const SolutionPair& sp1, const SolutionPair& sp2, double tolerance) {
  if (sp1.empty() || sp2.empty()) {
    throw Error(ErrorCode::kEmptyOperand, "concatenation operands must be nonempty");
  }
  const Vector& a = sp1.back().state;
  const Vector& b = sp2.front().state;
  if (a.size() != b.size()) {
    throw Error(ErrorCode::kEndpointMismatch, "state dimensions differ at the junction");
  }
  const double gap = a.size() == 0 ? 0.0 : (a - b).cwiseAbs().maxCoeff();
  if (!(gap <= tolerance)) {
    throw Error(ErrorCode::kEndpointMismatch,
                "junction states differ by " + std::to_string(gap) + " (tolerance " + std::to_string(tolerance) + ")");
  }

  const HybridTime offset = sp1.back().time;
  const std::size_t keep = sp1.size() - 1;

  std::vector<Sample> samples;
  samples.reserve(keep + sp2.size());
  samples.insert(samples.end(), sp1.samples().begin(), sp1.samples().begin() + static_cast<std::ptrdiff_t>(keep));
  for (const auto& s : sp2.samples()) samples.push_back({s.time + offset, s.state, s.input});

  std::vector<std::size_t> starts;
  for (std::size_t i : sp1.edge_starts()) {
    if (i < keep) starts.push_back(i);
  }
  for (std::size_t i : sp2.edge_starts()) starts.push_back(i + keep);
  return SolutionPair(std::move(samples), std::move(starts));
}

}  // namespace hyplan
