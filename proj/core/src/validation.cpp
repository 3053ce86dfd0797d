#include "hyplan/validation.hpp"

#include "hyplan/integrator.hpp"

#include <algorithm>
#include <sstream>

namespace hyplan {

std::string_view to_string(ViolationCode code) {
  switch (code) {
    case ViolationCode::kEmptySolutionPair: return "EmptySolutionPair";
    case ViolationCode::kDimensionMismatch: return "DimensionMismatch";
    case ViolationCode::kDomainMonotonicity: return "DomainMonotonicity";
    case ViolationCode::kInitialNotInFlowOrJumpSet: return "InitialNotInFlowOrJumpSet";
    case ViolationCode::kFlowOutsideFlowSet: return "FlowOutsideFlowSet";
    case ViolationCode::kFlowInputOutOfBounds: return "FlowInputOutOfBounds";
    case ViolationCode::kFlowResidual: return "FlowResidual";
    case ViolationCode::kJumpOutsideJumpSet: return "JumpOutsideJumpSet";
    case ViolationCode::kJumpInputOutOfBounds: return "JumpInputOutOfBounds";
    case ViolationCode::kJumpMapMismatch: return "JumpMapMismatch";
  }
  return "Unknown";
}

bool ValidationReport::has(ViolationCode code) const {
  return std::any_of(violations.begin(), violations.end(),
                     [code](const Violation& v) { return v.code == code; });
}

ValidationReport validate_solution_pair(const SolutionPair& sp, const HybridSystem& sys,
                                        const ValidationTolerances& tol) {
  ValidationReport report;
  auto flag = [&report](ViolationCode code, std::size_t k, double magnitude, std::string detail) {
    report.violations.push_back({code, k, magnitude, std::move(detail)});
  };

  if (sp.empty()) {
    flag(ViolationCode::kEmptySolutionPair, 0, 0.0, "solution pair has no samples");
    return report;
  }

  const auto& s = sp.samples();
  bool dims_ok = true;
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (s[k].state.size() != sys.state_dim || s[k].input.size() != sys.input_dim) {
      flag(ViolationCode::kDimensionMismatch, k, 0.0, "state/input size does not match the system");
      dims_ok = false;
    }
  }
  if (!dims_ok) return report;

  if (s.front().time.t < 0.0 || s.front().time.j < 0) {
    flag(ViolationCode::kDomainMonotonicity, 0, 0.0, "negative initial hybrid time");
  }
  if (!sys.in_flow_set(s.front().state, s.front().input) && !sys.in_jump_set(s.front().state, s.front().input)) {
    flag(ViolationCode::kInitialNotInFlowOrJumpSet, 0, 0.0, "initial (x, u) is in neither C nor D");
  }

  for (std::size_t k = 0; k + 1 < s.size(); ++k) {
    const Sample& a = s[k];
    const Sample& b = s[k + 1];
    const bool flow_step = b.time.j == a.time.j && b.time.t > a.time.t;
    const bool jump_step = b.time.j == a.time.j + 1 && b.time.t == a.time.t;

    if (flow_step) {
      ++report.flow_steps;
      if (!sys.in_flow_set(a.state, a.input)) {
        flag(ViolationCode::kFlowOutsideFlowSet, k, 0.0, "flow step starts outside C");
      }
      if (!box_contains(sys.flow_input_bounds, a.input)) {
        flag(ViolationCode::kFlowInputOutOfBounds, k, 0.0, "flow input outside U_C");
      }
      const double dt = b.time.t - a.time.t;
      const Vector slope = (b.state - a.state) / dt;
      const double residual = (slope - rk4_increment(sys.flow_map, a.state, a.input, dt)).norm();
      report.max_flow_residual = std::max(report.max_flow_residual, residual);
      if (!(residual <= tol.flow_residual)) {
        flag(ViolationCode::kFlowResidual, k, residual, "flow step does not satisfy the flow map");
      }
    } else if (jump_step) {
      ++report.jump_steps;
      if (!sys.in_jump_set(a.state, a.input)) {
        flag(ViolationCode::kJumpOutsideJumpSet, k, 0.0, "jump from a state outside D");
      }
      if (!box_contains(sys.jump_input_bounds, a.input)) {
        flag(ViolationCode::kJumpInputOutOfBounds, k, 0.0, "jump input outside U_D");
      }
      const double residual = (b.state - sys.jump_map(a.state, a.input)).norm();
      report.max_jump_residual = std::max(report.max_jump_residual, residual);
      if (!(residual <= tol.jump_residual)) {
        flag(ViolationCode::kJumpMapMismatch, k, residual, "post-jump state differs from g(x, u)");
      }
    } else {
      std::ostringstream os;
      os << "step (" << a.time.t << ", " << a.time.j << ") -> (" << b.time.t << ", " << b.time.j
         << ") is neither a flow nor a jump step";
      flag(ViolationCode::kDomainMonotonicity, k, 0.0, os.str());
    }
  }
  return report;
}

std::string format_report(const ValidationReport& report) {
  std::ostringstream os;
  os << (report.passed() ? "PASS" : "FAIL") << ": " << report.flow_steps << " flow steps, "
     << report.jump_steps << " jump steps, max flow residual " << report.max_flow_residual
     << ", max jump residual " << report.max_jump_residual << "\n";
  for (const auto& v : report.violations) {
    os << "  sample " << v.sample << ": " << to_string(v.code);
    if (v.magnitude != 0.0) os << " (" << v.magnitude << ")";
    os << " - " << v.detail << "\n";
  }
  return os.str();
}

}  // namespace hyplan
