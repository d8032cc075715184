#pragma once

#include <memory>

#include "gedopt/milp.hpp"

namespace ged {

// Built-in exact MILP solver: best-bound branch-and-bound over binary
// variables with the bounded-variable simplex as LP engine. Branching picks
// the most fractional binary (lowest index on ties); node order is best bound
// (lowest id on ties), so solves are deterministic.
class ReferenceSolver : public SolverBackend {
 public:
  std::string name() const override { return "reference"; }
  BackendCaps capabilities() const override { return BackendCaps{64, false}; }
  Solution solve(const MilpModel& model, const SolveOptions& opts) const override;
};

std::shared_ptr<SolverBackend> make_reference_solver();

}  // namespace ged
