#include "gedopt/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>

namespace ged {
namespace {

constexpr double kDualTol = 1e-9;   // reduced-cost optimality tolerance
constexpr double kPivotTol = 1e-9;  // minimum pivot magnitude
constexpr double kZeroTol = 1e-11;

enum class VState { Basic, AtLower, AtUpper };

// Dense bounded-variable simplex working on the standard form
//   min c.s   s.t.  T s = b,  0 <= s_j <= u_j  (u_j possibly +inf).
struct Tableau {
  int m = 0;  // rows
  int n = 0;  // columns (structural + slack + artificial)
  std::vector<double> t;      // m x n, row-major: current B^-1 A
  std::vector<double> bval;   // basic variable values per row
  std::vector<double> upper;  // per column
  std::vector<double> cost;   // phase-2 objective
  std::vector<double> drow;   // reduced costs of the active objective
  std::vector<int> basis;     // column basic in each row
  std::vector<VState> state;  // per column
  std::vector<char> blocked;  // columns barred from entering (artificials in phase 2)

  double& at(int r, int c) { return t[static_cast<size_t>(r) * n + c]; }
  double val(int r, int c) const { return t[static_cast<size_t>(r) * n + c]; }

  double nonbasic_value(int j) const { return state[j] == VState::AtUpper ? upper[j] : 0.0; }

  void load_reduced_costs(const std::vector<double>& c) {
    drow = c;
    for (int r = 0; r < m; ++r) {
      double cb = c[basis[r]];
      if (cb == 0.0) continue;
      for (int j = 0; j < n; ++j) drow[j] -= cb * val(r, j);
    }
  }

  void pivot(int pr, int pc) {
    double piv = at(pr, pc);
    double inv = 1.0 / piv;
    double* prow = &t[static_cast<size_t>(pr) * n];
    for (int j = 0; j < n; ++j) prow[j] *= inv;
    prow[pc] = 1.0;
    for (int r = 0; r < m; ++r) {
      if (r == pr) continue;
      double f = at(r, pc);
      if (f == 0.0) continue;
      double* row = &t[static_cast<size_t>(r) * n];
      for (int j = 0; j < n; ++j) row[j] -= f * prow[j];
      row[pc] = 0.0;
    }
    double f = drow[pc];
    if (f != 0.0) {
      for (int j = 0; j < n; ++j) drow[j] -= f * prow[j];
      drow[pc] = 0.0;
    }
  }

  // One simplex run on the loaded reduced costs. Returns status; objective is
  // not tracked here (callers recompute what they need from bval/state).
  LpStatus iterate(long& iters_left) {
    long stall = 0;
    bool bland = false;
    while (iters_left-- > 0) {
      // entering column
      int enter = -1;
      int dir = +1;
      double best = -kDualTol;
      for (int j = 0; j < n; ++j) {
        if (state[j] == VState::Basic || blocked[j]) continue;
        double d = drow[j];
        double score;
        int sdir;
        if (state[j] == VState::AtLower) {
          score = d;
          sdir = +1;
        } else {
          score = -d;
          sdir = -1;
        }
        if (bland) {
          if (score < -kDualTol) {
            enter = j;
            dir = sdir;
            break;
          }
        } else if (score < best) {
          best = score;
          enter = j;
          dir = sdir;
        }
      }
      if (enter < 0) return LpStatus::Optimal;

      // ratio test: movement t >= 0 of the entering variable
      double limit = upper[enter];  // own opposite bound (bound flip)
      int leave_row = -1;
      bool leave_at_upper = false;
      double leave_piv = 0.0;
      for (int r = 0; r < m; ++r) {
        double g = dir * val(r, enter);
        if (g > kPivotTol) {
          double ratio = bval[r] / g;
          if (ratio < limit - kZeroTol ||
              (ratio < limit + kZeroTol && leave_row >= 0 &&
               (bland ? basis[r] < basis[leave_row] : std::fabs(g) > std::fabs(leave_piv)))) {
            limit = std::max(0.0, ratio);
            leave_row = r;
            leave_at_upper = false;
            leave_piv = g;
          }
        } else if (g < -kPivotTol && upper[basis[r]] < kInf) {
          double ratio = (upper[basis[r]] - bval[r]) / (-g);
          if (ratio < limit - kZeroTol ||
              (ratio < limit + kZeroTol && leave_row >= 0 &&
               (bland ? basis[r] < basis[leave_row] : std::fabs(g) > std::fabs(leave_piv)))) {
            limit = std::max(0.0, ratio);
            leave_row = r;
            leave_at_upper = true;
            leave_piv = g;
          }
        }
      }
      if (leave_row < 0 && !(limit < kInf)) return LpStatus::Unbounded;

      if (limit < kZeroTol) {
        if (++stall > 3 * (m + n)) bland = true;
      } else {
        stall = 0;
        bland = false;
      }

      if (leave_row < 0) {
        // bound flip: entering travels its full range
        for (int r = 0; r < m; ++r) bval[r] -= dir * val(r, enter) * limit;
        state[enter] = (state[enter] == VState::AtLower) ? VState::AtUpper : VState::AtLower;
        continue;
      }

      // move basics, then swap entering/leaving
      if (limit > 0.0) {
        for (int r = 0; r < m; ++r) bval[r] -= dir * val(r, enter) * limit;
      }
      int leave = basis[leave_row];
      state[leave] = leave_at_upper ? VState::AtUpper : VState::AtLower;
      double enter_value = (dir > 0) ? nonbasic_value(enter) + limit * dir
                                     : upper[enter] - limit;
      bval[leave_row] = enter_value;
      state[enter] = VState::Basic;
      basis[leave_row] = enter;
      pivot(leave_row, enter);
    }
    return LpStatus::IterationLimit;
  }
};

struct ColMap {
  // how standard-form columns map back onto a model variable
  enum Kind { Shift, Negate, SplitPos, SplitNeg } kind;
  int var;
  double offset;  // lb for Shift, ub for Negate
};

}  // namespace

LpResult solve_lp(const MilpModel& model, const std::vector<double>& lb,
                  const std::vector<double>& ub, long max_iters) {
  const int nvar = model.num_variables();
  const int m = model.num_constraints();

  LpResult out;
  for (int i = 0; i < nvar; ++i) {
    if (lb[i] > ub[i] + kZeroTol) {
      out.status = LpStatus::Infeasible;
      return out;
    }
  }

  // standard-form columns for model variables
  std::vector<ColMap> cols;
  std::vector<std::vector<std::pair<int, double>>> var_cols(nvar);  // (col, sign)
  std::vector<double> upper;
  std::vector<double> cost;
  const auto& c = model.objective().coefs;
  for (int i = 0; i < nvar; ++i) {
    double l = lb[i], u = ub[i];
    if (l > -kInf) {
      var_cols[i].push_back({static_cast<int>(cols.size()), +1.0});
      cols.push_back({ColMap::Shift, i, l});
      upper.push_back(u < kInf ? u - l : kInf);
      cost.push_back(c[i]);
    } else if (u < kInf) {
      var_cols[i].push_back({static_cast<int>(cols.size()), -1.0});
      cols.push_back({ColMap::Negate, i, u});
      upper.push_back(kInf);
      cost.push_back(-c[i]);
    } else {
      var_cols[i].push_back({static_cast<int>(cols.size()), +1.0});
      cols.push_back({ColMap::SplitPos, i, 0.0});
      upper.push_back(kInf);
      cost.push_back(c[i]);
      var_cols[i].push_back({static_cast<int>(cols.size()), -1.0});
      cols.push_back({ColMap::SplitNeg, i, 0.0});
      upper.push_back(kInf);
      cost.push_back(-c[i]);
    }
  }
  const int nstruct = static_cast<int>(cols.size());

  // assemble rows: structural part, rhs shifted by variable offsets
  std::vector<std::vector<double>> rows(m, std::vector<double>(nstruct, 0.0));
  std::vector<double> rhs(m, 0.0);
  std::vector<int> slack_dir(m, 0);  // +1 for LE, -1 for GE, 0 for EQ
  for (int r = 0; r < m; ++r) {
    const auto& con = model.constraint(r);
    double b = con.rhs;
    for (const auto& e : con.entries) {
      for (auto [col, sign] : var_cols[e.var]) rows[r][col] += sign * e.coef;
      const auto& cm = cols[var_cols[e.var][0].first];
      if (cm.kind == ColMap::Shift || cm.kind == ColMap::Negate) b -= e.coef * cm.offset;
    }
    rhs[r] = b;
    slack_dir[r] = con.sense == RowSense::LE ? +1 : (con.sense == RowSense::GE ? -1 : 0);
  }

  // slacks, rhs normalization, artificials
  int nslack = 0;
  for (int r = 0; r < m; ++r)
    if (slack_dir[r] != 0) ++nslack;

  Tableau tab;
  tab.m = m;
  std::vector<int> slack_col(m, -1);
  {
    int ncols = nstruct + nslack;  // artificials appended after, sized below
    // first pass to know artificial count
    std::vector<double> slack_sign(m, 0.0);
    int sc = nstruct;
    for (int r = 0; r < m; ++r) {
      if (slack_dir[r] != 0) {
        slack_col[r] = sc++;
        slack_sign[r] = slack_dir[r];
      }
    }
    int nart = 0;
    for (int r = 0; r < m; ++r) {
      double b = rhs[r];
      double eff_sign = slack_sign[r] * (b < 0 ? -1.0 : 1.0);
      if (eff_sign <= 0.0) ++nart;  // EQ rows or slack pointing the wrong way
    }
    tab.n = ncols + nart;
    tab.t.assign(static_cast<size_t>(m) * tab.n, 0.0);
    tab.upper.assign(tab.n, kInf);
    tab.cost.assign(tab.n, 0.0);
    tab.state.assign(tab.n, VState::AtLower);
    tab.blocked.assign(tab.n, 0);
    tab.basis.assign(m, -1);
    tab.bval.assign(m, 0.0);

    for (int j = 0; j < nstruct; ++j) {
      tab.upper[j] = upper[j];
      tab.cost[j] = cost[j];
    }
    int art = ncols;
    std::vector<double> phase1(tab.n, 0.0);
    for (int r = 0; r < m; ++r) {
      double flip = rhs[r] < 0 ? -1.0 : 1.0;
      for (int j = 0; j < nstruct; ++j) tab.at(r, j) = flip * rows[r][j];
      double b = flip * rhs[r];
      if (slack_col[r] >= 0) tab.at(r, slack_col[r]) = flip * slack_dir[r];
      if (slack_col[r] >= 0 && flip * slack_dir[r] > 0) {
        tab.basis[r] = slack_col[r];
      } else {
        tab.at(r, art) = 1.0;
        phase1[art] = 1.0;
        tab.basis[r] = art++;
      }
      tab.bval[r] = b;
      tab.state[tab.basis[r]] = VState::Basic;
    }

    // phase 1
    double art_total = 0.0;
    for (int r = 0; r < m; ++r)
      if (tab.basis[r] >= ncols) art_total += tab.bval[r];
    if (art_total > kZeroTol) {
      tab.load_reduced_costs(phase1);
      long iters = max_iters;
      LpStatus st = tab.iterate(iters);
      if (st != LpStatus::Optimal) {  // phase 1 is bounded; anything else is a failure
        out.status = LpStatus::IterationLimit;
        return out;
      }
      double infeas = 0.0;
      for (int r = 0; r < m; ++r)
        if (tab.basis[r] >= ncols) infeas += tab.bval[r];
      if (infeas > 1e-7) {
        out.status = LpStatus::Infeasible;
        return out;
      }
      // drive remaining artificials out of the basis where possible
      for (int r = 0; r < m; ++r) {
        if (tab.basis[r] < ncols) continue;
        int pc = -1;
        for (int j = 0; j < ncols; ++j) {
          if (tab.state[j] != VState::Basic && std::fabs(tab.val(r, j)) > 1e-7) {
            pc = j;
            break;
          }
        }
        if (pc >= 0) {
          int old = tab.basis[r];
          tab.state[old] = VState::AtLower;
          tab.state[pc] = VState::Basic;
          tab.basis[r] = pc;
          tab.bval[r] = 0.0;
          tab.pivot(r, pc);
        }
      }
    }
    for (int j = ncols; j < tab.n; ++j) {
      tab.blocked[j] = 1;
      tab.upper[j] = 0.0;
    }
  }

  // phase 2
  tab.load_reduced_costs(tab.cost);
  long iters = max_iters;
  LpStatus st = tab.iterate(iters);
  if (st == LpStatus::IterationLimit || st == LpStatus::Unbounded) {
    out.status = st;
    return out;
  }

  // recover model-space values
  std::vector<double> sval(tab.n, 0.0);
  for (int j = 0; j < tab.n; ++j)
    if (tab.state[j] == VState::AtUpper) sval[j] = tab.upper[j];
  for (int r = 0; r < m; ++r) sval[tab.basis[r]] = tab.bval[r];

  out.x.assign(nvar, 0.0);
  for (int j = 0; j < nstruct; ++j) {
    const auto& cm = cols[j];
    switch (cm.kind) {
      case ColMap::Shift: out.x[cm.var] = cm.offset + sval[j]; break;
      case ColMap::Negate: out.x[cm.var] = cm.offset - sval[j]; break;
      case ColMap::SplitPos: out.x[cm.var] += sval[j]; break;
      case ColMap::SplitNeg: out.x[cm.var] -= sval[j]; break;
    }
  }
  out.objective = 0.0;
  for (int i = 0; i < nvar; ++i) out.objective += c[i] * out.x[i];
  out.status = LpStatus::Optimal;
  return out;
}

}  // namespace ged
