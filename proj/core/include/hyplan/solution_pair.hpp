#pragma once

#include "hyplan/hybrid_time.hpp"
#include "hyplan/types.hpp"

#include <cstddef>
#include <vector>

namespace hyplan {

/// The value of a solution pair (phi, u) at one hybrid time.
///
/// `input` is the input applied from this sample to the next one: the
/// held flow input on a flow step, the jump input on a jump step. The final
/// sample of a plan carries a zero input.
struct Sample {
  HybridTime time;
  Vector state;
  Vector input;
};

bool same_sample(const Sample& a, const Sample& b);

/// Discretized solution pair: an ordered list of samples where each step is
/// either a flow step (t increases, j fixed) or a jump step (t fixed, j + 1).
///
/// `edge_starts` records at which sample each concatenated piece begins; a
/// freshly built pair is a single piece starting at sample 0.
class SolutionPair {
 public:
  SolutionPair() = default;
  explicit SolutionPair(std::vector<Sample> samples);
  SolutionPair(std::vector<Sample> samples, std::vector<std::size_t> edge_starts);

  const std::vector<Sample>& samples() const { return samples_; }
  const std::vector<std::size_t>& edge_starts() const { return edge_starts_; }

  bool empty() const { return samples_.empty(); }
  std::size_t size() const { return samples_.size(); }
  const Sample& operator[](std::size_t k) const { return samples_[k]; }
  const Sample& front() const { return samples_.front(); }
  const Sample& back() const { return samples_.back(); }

  /// Sample indices k where samples[k].time.j == samples[k-1].time.j + 1.
  std::vector<std::size_t> phase_boundaries() const;

  /// Index of the piece (edge) that sample k belongs to.
  std::size_t edge_of(std::size_t k) const;

  /// Minkowski shift of every sample time by `offset`.
  SolutionPair shifted(HybridTime offset) const;

  /// Shift so the first sample sits at hybrid time (0, 0).
  SolutionPair rebased() const;

  std::vector<Sample> release() && { return std::move(samples_); }

  friend bool operator==(const SolutionPair& a, const SolutionPair& b);

 private:
  std::vector<Sample> samples_;
  std::vector<std::size_t> edge_starts_;
};

/// Interval decomposition induced by the sample times.
HybridTimeDomain domain_of(const SolutionPair& sp);

inline constexpr double kDefaultConcatTolerance = 1e-9;

/// sp1 | sp2: sp2 is shifted by (T, J) = max dom sp1 and replaces sp1's
/// terminal sample. The states at the junction must agree within
/// `tolerance` in the max norm.
SolutionPair concatenate(const SolutionPair& sp1, const SolutionPair& sp2,
                         double tolerance = kDefaultConcatTolerance);

}  // namespace hyplan
