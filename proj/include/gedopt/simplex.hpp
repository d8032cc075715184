#pragma once

#include <vector>

#include "gedopt/milp.hpp"

namespace ged {

enum class LpStatus { Optimal, Infeasible, Unbounded, IterationLimit };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  double objective = 0.0;  // c.x in as-solved units (no offset/scale applied)
  std::vector<double> x;   // model variable space
};

// Solves the LP relaxation of `model` (integrality ignored) with the bounds
// given in `lb`/`ub` (callers override these during branch-and-bound).
// Two-phase primal simplex with upper-bounded variables; Dantzig pricing with
// a Bland fallback on degenerate stalls. Always minimizes; callers handle
// objective sense.
LpResult solve_lp(const MilpModel& model, const std::vector<double>& lb,
                  const std::vector<double>& ub, long max_iters = 200000);

inline LpResult solve_lp(const MilpModel& model, long max_iters = 200000) {
  std::vector<double> lb(model.num_variables()), ub(model.num_variables());
  for (int i = 0; i < model.num_variables(); ++i) {
    lb[i] = model.variable(i).lb;
    ub[i] = model.variable(i).ub;
  }
  return solve_lp(model, lb, ub, max_iters);
}

}  // namespace ged
