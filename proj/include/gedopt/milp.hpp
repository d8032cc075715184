#pragma once

#include <limits>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace ged {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Feasibility and integrality tolerance used everywhere a solution is judged.
inline constexpr double kFeasTol = 1e-6;
inline constexpr double kIntTol = 1e-6;

enum class VarType { Continuous, Binary };
enum class RowSense { LE, EQ, GE };
enum class ObjSense { Min, Max };

struct ModelError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Variable {
  std::string name;
  double lb = 0.0;
  double ub = kInf;
  VarType type = VarType::Continuous;
};

struct RowEntry {
  int var = -1;
  double coef = 0.0;
};

struct Constraint {
  std::string name;
  std::vector<RowEntry> entries;
  RowSense sense = RowSense::LE;
  double rhs = 0.0;
};

// Objective coefficients are stored as-solved; `scale` maps a solved value back
// to original units: reported = (coefs . x + offset) * scale.
struct Objective {
  std::vector<double> coefs;
  ObjSense sense = ObjSense::Min;
  double offset = 0.0;
  double scale = 1.0;
};

class MilpModel {
 public:
  MilpModel() = default;
  explicit MilpModel(std::string name) : name_(std::move(name)) {}

  int add_variable(const std::string& name, double lb, double ub, VarType type);
  int add_constraint(const std::string& name, std::vector<RowEntry> entries,
                     RowSense sense, double rhs);

  // Index of a variable by name, -1 if absent.
  int find_variable(const std::string& name) const;

  const std::string& name() const { return name_; }
  void set_name(std::string n) { name_ = std::move(n); }

  int num_variables() const { return static_cast<int>(vars_.size()); }
  int num_constraints() const { return static_cast<int>(rows_.size()); }
  int num_binaries() const { return n_binary_; }

  const Variable& variable(int i) const { return vars_.at(i); }
  Variable& variable(int i) { return vars_.at(i); }
  const Constraint& constraint(int i) const { return rows_.at(i); }
  Constraint& constraint(int i) { return rows_.at(i); }
  const std::vector<Variable>& variables() const { return vars_; }
  const std::vector<Constraint>& constraints() const { return rows_; }

  Objective& objective() { return obj_; }
  const Objective& objective() const { return obj_; }
  void set_objective_coef(int var, double coef);
  double objective_coef(int var) const;

  void fix_variable(int var, double value);

  // Structural checks: dangling coefficient references, binary bounds outside
  // [0,1], nonpositive scale, duplicate names. Empty result means well-formed.
  std::vector<std::string> validate() const;

 private:
  std::string name_ = "model";
  std::vector<Variable> vars_;
  std::vector<Constraint> rows_;
  std::unordered_map<std::string, int> var_index_;
  Objective obj_;
  int n_binary_ = 0;
};

enum class SolveStatus { Optimal, Infeasible, Unbounded, GapLimit, IterationLimit };

const char* to_string(SolveStatus s);

struct Solution {
  SolveStatus status = SolveStatus::Infeasible;
  double objective = 0.0;  // original (unscaled) units
  std::vector<double> values;
  double mip_gap = 0.0;  // relative gap proven at termination
};

struct SolveOptions {
  double mip_gap = 0.0;            // relative optimality gap target
  double time_limit_sec = kInf;    // wall-clock cap; exceeding reports IterationLimit
  long max_nodes = 2000000;
};

struct BackendCaps {
  int max_binaries = 0;
  bool supports_warm_start = false;
};

class SolverBackend {
 public:
  virtual ~SolverBackend() = default;
  virtual std::string name() const = 0;
  virtual BackendCaps capabilities() const = 0;
  virtual Solution solve(const MilpModel& model, const SolveOptions& opts) const = 0;
  Solution solve(const MilpModel& model) const { return solve(model, SolveOptions{}); }
};

// Worst violation of rows, bounds and integrality at x; used by tests and the
// Solution invariant (optimal solutions stay within kFeasTol).
double max_violation(const MilpModel& model, const std::vector<double>& x);

// Objective value of x in original units.
double objective_value(const MilpModel& model, const std::vector<double>& x);

}  // namespace ged
