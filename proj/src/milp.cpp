#include "gedopt/milp.hpp"

#include <cmath>

namespace ged {

int MilpModel::add_variable(const std::string& name, double lb, double ub, VarType type) {
  if (var_index_.count(name)) throw ModelError("duplicate variable name: " + name);
  if (type == VarType::Binary) {
    if (lb < -kIntTol || ub > 1.0 + kIntTol)
      throw ModelError("binary variable " + name + " has bounds outside [0,1]");
    ++n_binary_;
  }
  if (lb > ub) throw ModelError("variable " + name + " has lb > ub");
  int idx = static_cast<int>(vars_.size());
  vars_.push_back(Variable{name, lb, ub, type});
  var_index_.emplace(name, idx);
  obj_.coefs.push_back(0.0);
  return idx;
}

int MilpModel::add_constraint(const std::string& name, std::vector<RowEntry> entries,
                              RowSense sense, double rhs) {
  for (const auto& e : entries) {
    if (e.var < 0 || e.var >= num_variables())
      throw ModelError("constraint " + name + " references undeclared variable index " +
                       std::to_string(e.var));
  }
  int idx = static_cast<int>(rows_.size());
  rows_.push_back(Constraint{name, std::move(entries), sense, rhs});
  return idx;
}

int MilpModel::find_variable(const std::string& name) const {
  auto it = var_index_.find(name);
  return it == var_index_.end() ? -1 : it->second;
}

void MilpModel::set_objective_coef(int var, double coef) { obj_.coefs.at(var) = coef; }

double MilpModel::objective_coef(int var) const { return obj_.coefs.at(var); }

void MilpModel::fix_variable(int var, double value) {
  vars_.at(var).lb = value;
  vars_.at(var).ub = value;
}

std::vector<std::string> MilpModel::validate() const {
  std::vector<std::string> issues;
  for (int i = 0; i < num_variables(); ++i) {
    const auto& v = vars_[i];
    if (v.lb > v.ub) issues.push_back("variable " + v.name + ": lb > ub");
    if (v.type == VarType::Binary && (v.lb < -kIntTol || v.ub > 1.0 + kIntTol))
      issues.push_back("binary variable " + v.name + ": bounds outside [0,1]");
  }
  for (const auto& r : rows_) {
    for (const auto& e : r.entries) {
      if (e.var < 0 || e.var >= num_variables())
        issues.push_back("constraint " + r.name + ": dangling variable reference");
      if (!std::isfinite(e.coef))
        issues.push_back("constraint " + r.name + ": non-finite coefficient");
    }
    if (!std::isfinite(r.rhs)) issues.push_back("constraint " + r.name + ": non-finite rhs");
  }
  if (!(obj_.scale > 0.0)) issues.push_back("objective scale factor must be positive");
  if (obj_.coefs.size() != vars_.size()) issues.push_back("objective length mismatch");
  return issues;
}

const char* to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::Optimal: return "optimal";
    case SolveStatus::Infeasible: return "infeasible";
    case SolveStatus::Unbounded: return "unbounded";
    case SolveStatus::GapLimit: return "gap-limit";
    case SolveStatus::IterationLimit: return "iteration-limit";
  }
  return "unknown";
}

double max_violation(const MilpModel& model, const std::vector<double>& x) {
  double worst = 0.0;
  for (int i = 0; i < model.num_variables(); ++i) {
    const auto& v = model.variable(i);
    worst = std::max(worst, v.lb - x[i]);
    worst = std::max(worst, x[i] - v.ub);
    if (v.type == VarType::Binary)
      worst = std::max(worst, std::fabs(x[i] - std::round(x[i])));
  }
  for (const auto& r : model.constraints()) {
    double lhs = 0.0;
    for (const auto& e : r.entries) lhs += e.coef * x[e.var];
    switch (r.sense) {
      case RowSense::LE: worst = std::max(worst, lhs - r.rhs); break;
      case RowSense::GE: worst = std::max(worst, r.rhs - lhs); break;
      case RowSense::EQ: worst = std::max(worst, std::fabs(lhs - r.rhs)); break;
    }
  }
  return worst;
}

double objective_value(const MilpModel& model, const std::vector<double>& x) {
  double v = model.objective().offset;
  for (int i = 0; i < model.num_variables(); ++i) v += model.objective().coefs[i] * x[i];
  return v * model.objective().scale;
}

}  // namespace ged
