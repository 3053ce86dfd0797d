#pragma once

#include "hyplan/hybrid_system.hpp"
#include "hyplan/solution_pair.hpp"

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace hyplan {

struct ValidationTolerances {
  double flow_residual = 1e-6;
  double jump_residual = 1e-9;
};

enum class ViolationCode {
  kEmptySolutionPair,
  kDimensionMismatch,
  kDomainMonotonicity,
  kInitialNotInFlowOrJumpSet,
  kFlowOutsideFlowSet,
  kFlowInputOutOfBounds,
  kFlowResidual,
  kJumpOutsideJumpSet,
  kJumpInputOutOfBounds,
  kJumpMapMismatch,
};

std::string_view to_string(ViolationCode code);

struct Violation {
  ViolationCode code;
  std::size_t sample = 0;  // index of the sample that starts the offending step
  double magnitude = 0.0;  // residual where applicable
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;
  std::size_t flow_steps = 0;
  std::size_t jump_steps = 0;
  double max_flow_residual = 0.0;
  double max_jump_residual = 0.0;

  bool passed() const { return violations.empty(); }
  bool has(ViolationCode code) const;
};

/// Checks a discretized pair against the solution-pair conditions.
///
/// Per flow step k -> k+1: (x_k, u_k) in C, u_k in U_C, and the step matches
/// the RK4 rule, |(x_{k+1} - x_k)/dt - rk4_increment(f, x_k, u_k, dt)| within
/// tolerance. Per jump step: (x_k, u_k) in D, u_k in U_D and
/// |x_{k+1} - g(x_k, u_k)| within tolerance. The first sample must lie in
/// C or D. Absolute continuity and measurability of u have no sample-level
/// counterpart and are not checked.
ValidationReport validate_solution_pair(const SolutionPair& sp, const HybridSystem& sys,
                                        const ValidationTolerances& tol = {});

std::string format_report(const ValidationReport& report);

}  // namespace hyplan
