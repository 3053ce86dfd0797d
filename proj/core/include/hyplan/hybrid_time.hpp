#pragma once

#include <compare>
#include <string>
#include <vector>

namespace hyplan {

/// A point (t, j) of a hybrid time domain: t seconds of flow, j jumps.
struct HybridTime {
  double t = 0.0;
  int j = 0;

  friend bool operator==(const HybridTime&, const HybridTime&) = default;
  friend std::partial_ordering operator<=>(const HybridTime& a, const HybridTime& b) {
    if (auto c = a.t <=> b.t; c != 0) return c;
    return a.j <=> b.j;
  }

  HybridTime operator+(const HybridTime& o) const { return {t + o.t, j + o.j}; }
};

/// One piece ([t_start, t_end], j) of a hybrid time domain.
struct DomainInterval {
  double t_start = 0.0;
  double t_end = 0.0;
  int j = 0;

  friend bool operator==(const DomainInterval&, const DomainInterval&) = default;
};

/// Interval decomposition of a compact hybrid time domain.
struct HybridTimeDomain {
  std::vector<DomainInterval> intervals;

  friend bool operator==(const HybridTimeDomain&, const HybridTimeDomain&) = default;

  /// The lexicographic maximum (T, J). Requires a nonempty domain.
  HybridTime max() const;

  /// Checks the chaining invariants: t_start <= t_end per piece, consecutive
  /// pieces share endpoints and j increases by exactly one. When
  /// `rooted` is set the first piece must start at (0, 0).
  bool well_formed(bool rooted = false, std::string* why = nullptr) const;
};

}  // namespace hyplan
