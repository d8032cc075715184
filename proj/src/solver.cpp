#include "gedopt/solver.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <queue>

#include "gedopt/simplex.hpp"

namespace ged {
namespace {

struct Node {
  long id = 0;
  double bound = -kInf;  // parent LP value (internal min sense)
  std::vector<double> lb, ub;
};

struct NodeOrder {
  bool operator()(const Node& a, const Node& b) const {
    if (a.bound != b.bound) return a.bound > b.bound;  // min-heap on bound
    return a.id > b.id;
  }
};

}  // namespace

Solution ReferenceSolver::solve(const MilpModel& model, const SolveOptions& opts) const {
  auto issues = model.validate();
  if (!issues.empty()) throw ModelError("invalid model " + model.name() + ": " + issues.front());
  if (model.num_binaries() > capabilities().max_binaries)
    throw ModelError("capability exceeded: model " + model.name() + " has " +
                     std::to_string(model.num_binaries()) + " binaries (limit " +
                     std::to_string(capabilities().max_binaries) + ")");

  const int nvar = model.num_variables();
  const bool maximize = model.objective().sense == ObjSense::Max;

  // internal sense is min; flip the objective for max models
  MilpModel work = model;
  if (maximize) {
    for (int i = 0; i < nvar; ++i) work.set_objective_coef(i, -model.objective_coef(i));
  }

  const auto t0 = std::chrono::steady_clock::now();
  auto elapsed = [&] {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  };

  std::priority_queue<Node, std::vector<Node>, NodeOrder> open;
  Node root;
  root.lb.resize(nvar);
  root.ub.resize(nvar);
  for (int i = 0; i < nvar; ++i) {
    root.lb[i] = model.variable(i).lb;
    root.ub[i] = model.variable(i).ub;
  }
  open.push(std::move(root));

  Solution best;
  best.status = SolveStatus::Infeasible;
  double inc = kInf;  // incumbent internal objective
  bool have_inc = false;
  bool gap_pruned = false;
  bool hit_limit = false;
  bool root_unbounded = false;
  long next_id = 1;
  long nodes = 0;

  auto prune_slack = [&](double incumbent) {
    double rel = std::max(opts.mip_gap, 0.0) * (1.0 + std::fabs(incumbent));
    return std::max(rel, 1e-9 * (1.0 + std::fabs(incumbent)));
  };

  while (!open.empty()) {
    if (nodes >= opts.max_nodes || elapsed() > opts.time_limit_sec) {
      hit_limit = true;
      break;
    }
    Node node = open.top();
    open.pop();
    if (have_inc && node.bound >= inc - prune_slack(inc)) {
      if (node.bound >= inc - 1e-9 * (1.0 + std::fabs(inc))) continue;
      gap_pruned = true;  // cut only thanks to the relative gap target
      continue;
    }
    ++nodes;

    LpResult lp = solve_lp(work, node.lb, node.ub);
    if (lp.status == LpStatus::Infeasible) continue;
    if (lp.status == LpStatus::Unbounded) {
      if (node.id == 0) root_unbounded = true;
      break;
    }
    if (lp.status == LpStatus::IterationLimit) {
      hit_limit = true;
      break;
    }
    if (have_inc && lp.objective >= inc - prune_slack(inc)) {
      if (lp.objective < inc - 1e-9 * (1.0 + std::fabs(inc))) gap_pruned = true;
      continue;
    }

    // most fractional binary, lowest index on ties
    int branch = -1;
    double best_frac = kIntTol;
    for (int i = 0; i < nvar; ++i) {
      if (model.variable(i).type != VarType::Binary) continue;
      double f = std::fabs(lp.x[i] - std::round(lp.x[i]));
      if (f > best_frac + 1e-12) {
        best_frac = f;
        branch = i;
      }
    }
    if (branch < 0) {
      if (!have_inc || lp.objective < inc - 1e-12) {
        have_inc = true;
        inc = lp.objective;
        best.values = lp.x;
        for (int i = 0; i < nvar; ++i)
          if (model.variable(i).type == VarType::Binary)
            best.values[i] = std::round(best.values[i]);
      }
      continue;
    }

    Node down{next_id++, lp.objective, node.lb, node.ub};
    down.ub[branch] = 0.0;
    Node up{next_id++, lp.objective, std::move(node.lb), std::move(node.ub)};
    up.lb[branch] = 1.0;
    open.push(std::move(down));
    open.push(std::move(up));
  }

  if (root_unbounded && !have_inc) {
    best.status = SolveStatus::Unbounded;
    return best;
  }
  if (!have_inc) {
    best.status = hit_limit ? SolveStatus::IterationLimit : SolveStatus::Infeasible;
    return best;
  }

  double remaining = kInf;  // best bound still open
  if (!open.empty()) remaining = open.top().bound;
  double proven_gap = 0.0;
  if (hit_limit && remaining < inc)
    proven_gap = (inc - remaining) / (1.0 + std::fabs(inc));
  else if (gap_pruned)
    proven_gap = opts.mip_gap;

  best.mip_gap = std::max(proven_gap, 0.0);
  best.objective = objective_value(model, best.values);
  best.status = hit_limit ? SolveStatus::IterationLimit
                          : (gap_pruned ? SolveStatus::GapLimit : SolveStatus::Optimal);
  return best;
}

std::shared_ptr<SolverBackend> make_reference_solver() {
  return std::make_shared<ReferenceSolver>();
}

}  // namespace ged
