// Copyright 2026 The bincover authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "bincover/lp.hpp"

#include <algorithm>
#include <stdexcept>

namespace bincover {

std::size_t LpProblem::add_var(const Rat& objective_coeff) {
  objective.push_back(objective_coeff);
  return num_vars++;
}

namespace {

enum class ColKind { kStructural, kSlack, kSurplus, kArtificial };

struct Column {
  ColKind kind;
  std::size_t owner;  // structural: var index; aux: internal row index
};

// Dense exact tableau. Rows keep their aux columns through both phases so
// duals can be read off the final reduced costs.
struct Tableau {
  std::vector<Column> cols;
  std::vector<std::vector<Rat>> a;  // row-major, cols.size() wide
  std::vector<Rat> rhs;
  std::vector<std::size_t> basis;   // basic column per row
  std::vector<Rat> rc;              // reduced costs (c - z) for current objective
  Rat objective_value;
  std::vector<bool> barred;         // columns that may not enter

  std::size_t num_rows() const { return a.size(); }
  std::size_t num_cols() const { return cols.size(); }

  void pivot(std::size_t r, std::size_t j) {
    const Rat piv = a[r][j];
    const Rat inv = Rat(1) / piv;
    for (Rat& v : a[r]) v *= inv;
    rhs[r] *= inv;
    for (std::size_t i = 0; i < num_rows(); ++i) {
      if (i == r || a[i][j].is_zero()) continue;
      const Rat f = a[i][j];
      for (std::size_t c = 0; c < num_cols(); ++c) {
        if (!a[r][c].is_zero()) a[i][c] -= f * a[r][c];
      }
      rhs[i] -= f * rhs[r];
    }
    if (!rc[j].is_zero()) {
      const Rat f = rc[j];
      for (std::size_t c = 0; c < num_cols(); ++c) {
        if (!a[r][c].is_zero()) rc[c] -= f * a[r][c];
      }
      objective_value += f * rhs[r];
    }
    basis[r] = j;
  }

  void load_objective(const std::vector<Rat>& col_obj) {
    rc = col_obj;
    objective_value = Rat(0);
    for (std::size_t r = 0; r < num_rows(); ++r) {
      const Rat& cb = col_obj[basis[r]];
      if (cb.is_zero()) continue;
      for (std::size_t c = 0; c < num_cols(); ++c) {
        if (!a[r][c].is_zero()) rc[c] -= cb * a[r][c];
      }
      objective_value += cb * rhs[r];
    }
  }

  // Runs the simplex to optimality for the loaded objective.
  // Returns false when unbounded.
  bool optimize() {
    const std::size_t stall_limit = 20 + 4 * num_rows();
    std::size_t stall = 0;
    bool bland = false;
    for (;;) {
      // Entering column.
      std::size_t enter = num_cols();
      if (bland) {
        for (std::size_t j = 0; j < num_cols(); ++j) {
          if (!barred[j] && rc[j].is_positive()) {
            enter = j;
            break;
          }
        }
      } else {
        for (std::size_t j = 0; j < num_cols(); ++j) {
          if (!barred[j] && rc[j].is_positive() &&
              (enter == num_cols() || rc[j] > rc[enter])) {
            enter = j;
          }
        }
      }
      if (enter == num_cols()) return true;  // optimal

      // Leaving row: minimum ratio, ties by smallest basic column (Bland).
      std::size_t leave = num_rows();
      for (std::size_t r = 0; r < num_rows(); ++r) {
        if (!a[r][enter].is_positive()) continue;
        if (leave == num_rows()) {
          leave = r;
          continue;
        }
        const Rat lhs = rhs[r] * a[leave][enter];
        const Rat rhs_cmp = rhs[leave] * a[r][enter];
        if (lhs < rhs_cmp || (lhs == rhs_cmp && basis[r] < basis[leave])) leave = r;
      }
      if (leave == num_rows()) return false;  // unbounded

      const bool degenerate = rhs[leave].is_zero();
      pivot(leave, enter);
      if (degenerate) {
        if (++stall > stall_limit) bland = true;
      } else {
        stall = 0;
      }
    }
  }
};

}  // namespace

LpSolution lp_solve(const LpProblem& p) {
  const std::size_t n = p.num_vars;
  if (p.objective.size() != n) throw std::invalid_argument("lp: objective size mismatch");

  // Shift lower bounds to zero: x = x' + lo.
  std::vector<Rat> lo(n);
  for (std::size_t j = 0; j < p.lower.size(); ++j) lo[j] = p.lower[j];
  Rat objective_shift;
  for (std::size_t j = 0; j < n; ++j) objective_shift += p.objective[j] * lo[j];

  struct InternalRow {
    std::vector<Rat> coeffs;  // dense over structurals
    Sense sense;
    Rat rhs;
    bool flipped = false;
    bool is_bound = false;
    std::size_t owner = 0;  // original row index, or variable for bound rows
  };
  std::vector<InternalRow> rows;
  rows.reserve(p.rows.size() + n);
  for (std::size_t r = 0; r < p.rows.size(); ++r) {
    InternalRow row;
    row.coeffs.assign(n, Rat(0));
    row.sense = p.rows[r].sense;
    row.rhs = p.rows[r].rhs;
    row.owner = r;
    for (const auto& [var, coeff] : p.rows[r].coeffs) {
      if (var >= n) throw std::invalid_argument("lp: variable index out of range");
      row.coeffs[var] += coeff;
      row.rhs -= coeff * lo[var];  // absorbed by the shift below (rhs' = rhs - A lo)
    }
    rows.push_back(std::move(row));
  }
  for (std::size_t j = 0; j < p.upper.size(); ++j) {
    if (!p.upper[j]) continue;
    InternalRow row;
    row.coeffs.assign(n, Rat(0));
    row.coeffs[j] = Rat(1);
    row.sense = Sense::kLe;
    row.rhs = *p.upper[j] - lo[j];
    row.is_bound = true;
    row.owner = j;
    rows.push_back(std::move(row));
  }
  for (InternalRow& row : rows) {
    if (row.rhs.is_negative()) {
      for (Rat& c : row.coeffs) c = -c;
      row.rhs = -row.rhs;
      row.flipped = true;
      if (row.sense == Sense::kLe) {
        row.sense = Sense::kGe;
      } else if (row.sense == Sense::kGe) {
        row.sense = Sense::kLe;
      }
    }
  }

  // Assemble the tableau.
  Tableau t;
  const std::size_t num_rows = rows.size();
  for (std::size_t j = 0; j < n; ++j) t.cols.push_back({ColKind::kStructural, j});
  std::vector<std::size_t> dual_col(num_rows);  // column whose rc yields the row dual
  std::vector<int> dual_sign(num_rows);
  std::size_t num_artificial = 0;
  for (std::size_t r = 0; r < num_rows; ++r) {
    switch (rows[r].sense) {
      case Sense::kLe:
        t.cols.push_back({ColKind::kSlack, r});
        dual_col[r] = t.cols.size() - 1;
        dual_sign[r] = -1;
        break;
      case Sense::kGe:
        t.cols.push_back({ColKind::kSurplus, r});
        dual_col[r] = t.cols.size() - 1;
        dual_sign[r] = 1;
        t.cols.push_back({ColKind::kArtificial, r});
        ++num_artificial;
        break;
      case Sense::kEq:
        t.cols.push_back({ColKind::kArtificial, r});
        dual_col[r] = t.cols.size() - 1;
        dual_sign[r] = -1;
        ++num_artificial;
        break;
    }
  }
  const std::size_t num_cols = t.cols.size();
  t.a.assign(num_rows, std::vector<Rat>(num_cols));
  t.rhs.resize(num_rows);
  t.basis.assign(num_rows, 0);
  t.barred.assign(num_cols, false);
  for (std::size_t r = 0; r < num_rows; ++r) {
    for (std::size_t j = 0; j < n; ++j) t.a[r][j] = rows[r].coeffs[j];
    t.rhs[r] = rows[r].rhs;
  }
  for (std::size_t c = n; c < num_cols; ++c) {
    const std::size_t r = t.cols[c].owner;
    switch (t.cols[c].kind) {
      case ColKind::kSlack:
        t.a[r][c] = Rat(1);
        t.basis[r] = c;
        break;
      case ColKind::kSurplus:
        t.a[r][c] = Rat(-1);
        break;
      case ColKind::kArtificial:
        t.a[r][c] = Rat(1);
        t.basis[r] = c;
        break;
      default:
        break;
    }
  }

  LpSolution sol;
  sol.values.assign(n, Rat(0));
  sol.duals.assign(p.rows.size(), Rat(0));
  sol.bound_duals.assign(n, Rat(0));
  sol.basic.assign(n, false);

  // Phase 1.
  if (num_artificial > 0) {
    std::vector<Rat> phase1(num_cols);
    for (std::size_t c = 0; c < num_cols; ++c) {
      if (t.cols[c].kind == ColKind::kArtificial) phase1[c] = Rat(-1);
    }
    t.load_objective(phase1);
    if (!t.optimize()) throw std::logic_error("lp: phase 1 unbounded");
    if (t.objective_value.is_negative()) {
      sol.status = LpStatus::kInfeasible;
      return sol;
    }
    // Drive artificials out of the basis where possible; rows that resist are
    // linearly dependent and harmless (all comparable entries are zero).
    for (std::size_t r = 0; r < num_rows; ++r) {
      if (t.cols[t.basis[r]].kind != ColKind::kArtificial) continue;
      for (std::size_t j = 0; j < num_cols; ++j) {
        if (t.cols[j].kind == ColKind::kArtificial || t.a[r][j].is_zero()) continue;
        t.pivot(r, j);
        break;
      }
    }
  }

  // Phase 2.
  std::vector<Rat> phase2(num_cols);
  for (std::size_t j = 0; j < n; ++j) phase2[j] = p.objective[j];
  for (std::size_t c = 0; c < num_cols; ++c) {
    if (t.cols[c].kind == ColKind::kArtificial) t.barred[c] = true;
  }
  t.load_objective(phase2);
  if (!t.optimize()) {
    sol.status = LpStatus::kUnbounded;
    return sol;
  }

  for (std::size_t r = 0; r < num_rows; ++r) {
    const Column& col = t.cols[t.basis[r]];
    if (col.kind == ColKind::kStructural) {
      sol.values[col.owner] = t.rhs[r];
      sol.basic[col.owner] = true;
    }
  }
  for (std::size_t j = 0; j < n; ++j) sol.values[j] += lo[j];
  sol.objective = Rat(0);
  for (std::size_t j = 0; j < n; ++j) sol.objective += p.objective[j] * sol.values[j];

  std::vector<Rat> internal_duals(num_rows);
  for (std::size_t r = 0; r < num_rows; ++r) {
    Rat y = t.rc[dual_col[r]];
    if (dual_sign[r] < 0) y = -y;
    if (rows[r].flipped) y = -y;
    internal_duals[r] = y;
    if (rows[r].is_bound) {
      sol.bound_duals[rows[r].owner] = std::move(y);
    } else {
      sol.duals[rows[r].owner] = std::move(y);
    }
  }

  // Exact self-check: primal feasibility, dual feasibility, strong duality.
  for (std::size_t r = 0; r < p.rows.size(); ++r) {
    Rat lhs;
    for (const auto& [var, coeff] : p.rows[r].coeffs) lhs += coeff * sol.values[var];
    const bool ok = p.rows[r].sense == Sense::kLe   ? lhs <= p.rows[r].rhs
                    : p.rows[r].sense == Sense::kGe ? lhs >= p.rows[r].rhs
                                                    : lhs == p.rows[r].rhs;
    if (!ok) throw std::logic_error("lp: primal residual check failed");
    const Rat& y = sol.duals[r];
    if (p.rows[r].sense == Sense::kLe && y.is_negative())
      throw std::logic_error("lp: dual sign check failed");
    if (p.rows[r].sense == Sense::kGe && y.is_positive())
      throw std::logic_error("lp: dual sign check failed");
  }
  for (std::size_t j = 0; j < n; ++j) {
    if (sol.values[j] < lo[j]) throw std::logic_error("lp: lower bound violated");
    if (j < p.upper.size() && p.upper[j] && sol.values[j] > *p.upper[j])
      throw std::logic_error("lp: upper bound violated");
    if (sol.bound_duals[j].is_negative()) throw std::logic_error("lp: bound dual sign");
  }
  // Reduced costs of the shifted problem: c_j - sum_r a_rj y_r - w_j <= 0.
  Rat dual_objective = objective_shift;
  for (std::size_t r = 0; r < num_rows; ++r) {
    dual_objective += internal_duals[r] * (rows[r].flipped ? -rows[r].rhs : rows[r].rhs);
  }
  for (std::size_t j = 0; j < n; ++j) {
    Rat slack = p.objective[j];
    for (std::size_t r = 0; r < num_rows; ++r) {
      Rat coeff = rows[r].coeffs[j];
      if (rows[r].flipped) coeff = -coeff;
      slack -= coeff * internal_duals[r];
    }
    if (slack.is_positive()) throw std::logic_error("lp: dual feasibility check failed");
  }
  if (dual_objective != sol.objective) throw std::logic_error("lp: strong duality check failed");

  return sol;
}

}  // namespace bincover
