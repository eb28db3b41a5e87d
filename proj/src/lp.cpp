// Copyright 2026 The capax Authors.
//
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

#include "capax/lp.hpp"

#include <optional>
#include <ostream>

namespace capax {

std::size_t LinearProgram::add_variable(VarKind kind, Rat cost) {
  variables.push_back(kind);
  objective.push_back(std::move(cost));
  for (Constraint& c : constraints) c.coeffs.emplace_back();
  return variables.size() - 1;
}

void LinearProgram::add_constraint(std::vector<Rat> coeffs, Relation rel,
                                   Rat rhs) {
  constraints.push_back(Constraint{std::move(coeffs), rel, std::move(rhs)});
}

std::string to_string(LpStatus status) {
  switch (status) {
    case LpStatus::kOptimal: return "optimal";
    case LpStatus::kInfeasible: return "infeasible";
    case LpStatus::kUnbounded: return "unbounded";
  }
  return "?";
}

namespace {

void check_shape(const LinearProgram& lp) {
  const std::size_t n = lp.variable_count();
  if (lp.objective.size() != n) {
    throw LpError(LpErrc::kShapeMismatch, "objective length mismatch");
  }
  for (const Constraint& c : lp.constraints) {
    if (c.coeffs.size() != n) {
      throw LpError(LpErrc::kShapeMismatch, "constraint length mismatch");
    }
  }
}

Rat dot(const std::vector<Rat>& a, const std::vector<Rat>& b) {
  Rat total;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i].is_zero() && !b[i].is_zero()) total += a[i] * b[i];
  }
  return total;
}

bool satisfies(const Rat& lhs, Relation rel, const Rat& rhs) {
  switch (rel) {
    case Relation::kLessEqual: return lhs <= rhs;
    case Relation::kEqual: return lhs == rhs;
    case Relation::kGreaterEqual: return lhs >= rhs;
  }
  return false;
}

bool primal_feasible(const LinearProgram& lp, const std::vector<Rat>& x) {
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (lp.variables[j] == VarKind::kNonnegative && x[j].sign() < 0) return false;
  }
  for (const Constraint& c : lp.constraints) {
    if (!satisfies(dot(c.coeffs, x), c.relation, c.rhs)) return false;
  }
  return true;
}

Relation flip(Relation rel) {
  switch (rel) {
    case Relation::kLessEqual: return Relation::kGreaterEqual;
    case Relation::kGreaterEqual: return Relation::kLessEqual;
    case Relation::kEqual: return Relation::kEqual;
  }
  return rel;
}

// Dense tableau for  max cost.x  s.t.  rows.x = rhs, x >= 0, with an
// identity basis available at construction.
class Tableau {
 public:
  Tableau(std::vector<std::vector<Rat>> rows, std::vector<std::size_t> basis,
          std::ostream* trace)
      : rows_(std::move(rows)), basis_(std::move(basis)), trace_(trace) {
    width_ = rows_.empty() ? 0 : rows_.front().size() - 1;
  }

  void set_width(std::size_t w) { width_ = w; }
  std::size_t width() const { return width_; }
  std::size_t height() const { return rows_.size(); }
  const Rat& at(std::size_t r, std::size_t c) const { return rows_[r][c]; }
  const Rat& rhs(std::size_t r) const { return rows_[r][width_]; }
  std::size_t basic(std::size_t r) const { return basis_[r]; }

  void set_cost(std::vector<Rat> cost) {
    cost_ = std::move(cost);
    reduced_.assign(width_, Rat());
    for (std::size_t j = 0; j < width_; ++j) {
      Rat d = cost_[j];
      for (std::size_t r = 0; r < rows_.size(); ++r) {
        const Rat& a = rows_[r][j];
        const Rat& cb = cost_[basis_[r]];
        if (!a.is_zero() && !cb.is_zero()) d -= cb * a;
      }
      reduced_[j] = std::move(d);
    }
  }

  // Bland: the lowest-index allowed column with positive reduced cost.
  std::optional<std::size_t> entering(const std::vector<bool>& allowed) const {
    for (std::size_t j = 0; j < width_; ++j) {
      if (allowed[j] && reduced_[j].sign() > 0) return j;
    }
    return std::nullopt;
  }

  // Minimum ratio; ties go to the lowest-index basic variable.
  std::optional<std::size_t> leaving(std::size_t col) const {
    std::optional<std::size_t> best;
    Rat best_ratio;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const Rat& a = rows_[r][col];
      if (a.sign() <= 0) continue;
      Rat ratio = rhs(r) / a;
      if (!best || ratio < best_ratio ||
          (ratio == best_ratio && basis_[r] < basis_[*best])) {
        best = r;
        best_ratio = std::move(ratio);
      }
    }
    return best;
  }

  void pivot(std::size_t pr, std::size_t pc) {
    std::vector<Rat>& prow = rows_[pr];
    const Rat inv = Rat(1) / prow[pc];
    std::vector<std::size_t> nonzero;
    for (std::size_t j = 0; j <= width_; ++j) {
      if (prow[j].is_zero()) continue;
      prow[j] *= inv;
      nonzero.push_back(j);
    }
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      if (r == pr || rows_[r][pc].is_zero()) continue;
      const Rat factor = rows_[r][pc];
      for (std::size_t j : nonzero) rows_[r][j] -= factor * prow[j];
    }
    if (!reduced_.empty() && !reduced_[pc].is_zero()) {
      const Rat factor = reduced_[pc];
      for (std::size_t j : nonzero) {
        if (j < width_) reduced_[j] -= factor * prow[j];
      }
    }
    basis_[pr] = pc;
    ++pivots_;
    dump();
  }

  // Runs Bland-rule pivots until optimal (returns nullopt) or an unbounded
  // column is found (returns it).
  std::optional<std::size_t> optimize(const std::vector<bool>& allowed) {
    while (auto col = entering(allowed)) {
      auto row = leaving(*col);
      if (!row) return col;
      pivot(*row, *col);
    }
    return std::nullopt;
  }

  const Rat& reduced(std::size_t j) const { return reduced_[j]; }
  const Rat& cost(std::size_t j) const { return cost_[j]; }

  // c_B^T B^{-1} read off the columns that formed the starting identity.
  std::vector<Rat> row_prices(const std::vector<std::size_t>& start_cols) const {
    std::vector<Rat> y(rows_.size());
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      for (std::size_t r = 0; r < rows_.size(); ++r) {
        const Rat& cb = cost_[basis_[r]];
        const Rat& binv = rows_[r][start_cols[i]];
        if (!cb.is_zero() && !binv.is_zero()) y[i] += cb * binv;
      }
    }
    return y;
  }

  std::vector<Rat> basic_solution() const {
    std::vector<Rat> x(width_);
    for (std::size_t r = 0; r < rows_.size(); ++r) x[basis_[r]] = rhs(r);
    return x;
  }

  void dump() const {
    if (trace_ == nullptr) return;
    std::ostream& os = *trace_;
    os << "tableau after pivot " << pivots_ << '\n';
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      os << "  x" << basis_[r] << " |";
      for (std::size_t j = 0; j <= width_; ++j) {
        if (j == width_) os << " |";
        os << ' ' << rows_[r][j];
      }
      os << '\n';
    }
    if (!reduced_.empty()) {
      os << "  d  |";
      for (const Rat& d : reduced_) os << ' ' << d;
      os << '\n';
    }
  }

 private:
  std::vector<std::vector<Rat>> rows_;
  std::vector<std::size_t> basis_;
  std::vector<Rat> cost_;
  std::vector<Rat> reduced_;
  std::size_t width_ = 0;
  std::size_t pivots_ = 0;
  std::ostream* trace_;
};

}  // namespace

LpOutcome solve(const LinearProgram& lp, const SolveOptions& options) {
  check_shape(lp);
  const std::size_t n = lp.variable_count();
  const std::size_t m = lp.row_count();
  if (n * m > options.max_cells) {
    throw LpError(LpErrc::kTooLarge,
                  "LP with " + std::to_string(m) + " rows and " +
                      std::to_string(n) + " variables exceeds " +
                      std::to_string(options.max_cells) + " cells");
  }

  // Structural columns: one per nonnegative variable, two per free one.
  std::vector<std::size_t> plus_col(n), minus_col(n, SIZE_MAX);
  std::size_t cols = 0;
  for (std::size_t j = 0; j < n; ++j) {
    plus_col[j] = cols++;
    if (lp.variables[j] == VarKind::kFree) minus_col[j] = cols++;
  }

  // Rows are negated where needed so that every rhs is nonnegative.
  std::vector<int> row_sign(m, 1);
  std::vector<Relation> std_rel(m);
  std::vector<std::size_t> slack_col(m, SIZE_MAX);
  for (std::size_t i = 0; i < m; ++i) {
    const Constraint& c = lp.constraints[i];
    row_sign[i] = c.rhs.sign() < 0 ? -1 : 1;
    std_rel[i] = row_sign[i] < 0 ? flip(c.relation) : c.relation;
    if (std_rel[i] != Relation::kEqual) slack_col[i] = cols++;
  }
  std::vector<std::size_t> art_col(m, SIZE_MAX);
  std::size_t artificials = 0;
  for (std::size_t i = 0; i < m; ++i) {
    if (std_rel[i] != Relation::kLessEqual) {
      art_col[i] = cols++;
      ++artificials;
    }
  }
  const std::size_t width = cols;

  std::vector<std::vector<Rat>> rows(m, std::vector<Rat>(width + 1));
  std::vector<std::size_t> start_cols(m);
  for (std::size_t i = 0; i < m; ++i) {
    const Constraint& c = lp.constraints[i];
    for (std::size_t j = 0; j < n; ++j) {
      if (c.coeffs[j].is_zero()) continue;
      Rat a = row_sign[i] < 0 ? -c.coeffs[j] : c.coeffs[j];
      if (minus_col[j] != SIZE_MAX) rows[i][minus_col[j]] = -a;
      rows[i][plus_col[j]] = std::move(a);
    }
    rows[i][width] = row_sign[i] < 0 ? -c.rhs : c.rhs;
    if (std_rel[i] == Relation::kLessEqual) {
      rows[i][slack_col[i]] = 1;
      start_cols[i] = slack_col[i];
    } else {
      if (slack_col[i] != SIZE_MAX) rows[i][slack_col[i]] = -1;
      rows[i][art_col[i]] = 1;
      start_cols[i] = art_col[i];
    }
  }

  Tableau tab(std::move(rows), start_cols, options.trace);
  tab.set_width(width);
  std::vector<bool> is_art(width, false);
  for (std::size_t i = 0; i < m; ++i) {
    if (art_col[i] != SIZE_MAX) is_art[art_col[i]] = true;
  }

  LpOutcome out;

  if (artificials > 0) {
    std::vector<Rat> phase1(width);
    for (std::size_t j = 0; j < width; ++j) {
      if (is_art[j]) phase1[j] = -1;
    }
    tab.set_cost(phase1);
    tab.dump();
    std::vector<bool> all(width, true);
    // Phase 1 is bounded above by zero, so no unbounded column can appear.
    tab.optimize(all);
    Rat infeasibility;
    for (std::size_t r = 0; r < m; ++r) {
      if (is_art[tab.basic(r)]) infeasibility += tab.rhs(r);
    }
    if (infeasibility.sign() > 0) {
      std::vector<Rat> y = tab.row_prices(start_cols);
      out.status = LpStatus::kInfeasible;
      out.farkas.resize(m);
      for (std::size_t i = 0; i < m; ++i) {
        Rat z = -y[i];
        switch (std_rel[i]) {
          case Relation::kGreaterEqual: out.farkas[i] = z; break;
          case Relation::kLessEqual: out.farkas[i] = -z; break;
          case Relation::kEqual:
            out.farkas[i] = row_sign[i] < 0 ? -z : z;
            break;
        }
      }
      return out;
    }
    // Drive zero-level artificials out of the basis where possible.
    for (std::size_t r = 0; r < m; ++r) {
      if (!is_art[tab.basic(r)]) continue;
      for (std::size_t j = 0; j < width; ++j) {
        if (!is_art[j] && !tab.at(r, j).is_zero()) {
          tab.pivot(r, j);
          break;
        }
      }
    }
  }

  const bool maximize = lp.sense == Sense::kMaximize;
  std::vector<Rat> cost(width);
  for (std::size_t j = 0; j < n; ++j) {
    Rat c = maximize ? lp.objective[j] : -lp.objective[j];
    if (minus_col[j] != SIZE_MAX) cost[minus_col[j]] = -c;
    cost[plus_col[j]] = std::move(c);
  }
  tab.set_cost(cost);
  tab.dump();
  std::vector<bool> allowed(width);
  for (std::size_t j = 0; j < width; ++j) allowed[j] = !is_art[j];

  auto to_original = [&](const std::vector<Rat>& v) {
    std::vector<Rat> x(n);
    for (std::size_t j = 0; j < n; ++j) {
      x[j] = v[plus_col[j]];
      if (minus_col[j] != SIZE_MAX) x[j] -= v[minus_col[j]];
    }
    return x;
  };

  if (auto unbounded_col = tab.optimize(allowed)) {
    std::vector<Rat> dir(width);
    dir[*unbounded_col] = 1;
    for (std::size_t r = 0; r < m; ++r) {
      dir[tab.basic(r)] = -tab.at(r, *unbounded_col);
    }
    out.status = LpStatus::kUnbounded;
    out.primal = to_original(tab.basic_solution());
    out.ray = to_original(dir);
    return out;
  }

  out.status = LpStatus::kOptimal;
  out.primal = to_original(tab.basic_solution());
  out.value = dot(lp.objective, out.primal);
  std::vector<Rat> y = tab.row_prices(start_cols);
  out.dual.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    Rat d = row_sign[i] < 0 ? -y[i] : y[i];
    out.dual[i] = maximize ? d : -d;
  }
  return out;
}

bool verify_outcome(const LinearProgram& lp, const LpOutcome& out) {
  check_shape(lp);
  const std::size_t n = lp.variable_count();
  const std::size_t m = lp.row_count();
  const bool maximize = lp.sense == Sense::kMaximize;

  switch (out.status) {
    case LpStatus::kOptimal: {
      if (out.primal.size() != n || out.dual.size() != m) {
        throw LpError(LpErrc::kShapeMismatch, "certificate size mismatch");
      }
      if (!primal_feasible(lp, out.primal)) return false;
      if (dot(lp.objective, out.primal) != out.value) return false;
      Rat dual_value;
      std::vector<Rat> aty(n);
      for (std::size_t i = 0; i < m; ++i) {
        const Constraint& c = lp.constraints[i];
        const Rat& y = out.dual[i];
        const int s = y.sign();
        if (c.relation == Relation::kLessEqual && (maximize ? s < 0 : s > 0)) {
          return false;
        }
        if (c.relation == Relation::kGreaterEqual &&
            (maximize ? s > 0 : s < 0)) {
          return false;
        }
        if (y.is_zero()) continue;
        dual_value += y * c.rhs;
        for (std::size_t j = 0; j < n; ++j) {
          if (!c.coeffs[j].is_zero()) aty[j] += y * c.coeffs[j];
        }
      }
      for (std::size_t j = 0; j < n; ++j) {
        if (lp.variables[j] == VarKind::kFree) {
          if (aty[j] != lp.objective[j]) return false;
        } else if (maximize ? aty[j] < lp.objective[j]
                            : aty[j] > lp.objective[j]) {
          return false;
        }
      }
      return dual_value == out.value;
    }
    case LpStatus::kInfeasible: {
      if (out.farkas.size() != m) {
        throw LpError(LpErrc::kShapeMismatch, "certificate size mismatch");
      }
      std::vector<Rat> agg(n);
      Rat rhs;
      for (std::size_t i = 0; i < m; ++i) {
        const Constraint& c = lp.constraints[i];
        const Rat& y = out.farkas[i];
        if (c.relation != Relation::kEqual && y.sign() < 0) return false;
        if (y.is_zero()) continue;
        const Rat w = c.relation == Relation::kLessEqual ? -y : y;
        rhs += w * c.rhs;
        for (std::size_t j = 0; j < n; ++j) {
          if (!c.coeffs[j].is_zero()) agg[j] += w * c.coeffs[j];
        }
      }
      for (std::size_t j = 0; j < n; ++j) {
        if (lp.variables[j] == VarKind::kFree ? !agg[j].is_zero()
                                              : agg[j].sign() > 0) {
          return false;
        }
      }
      return rhs.sign() > 0;
    }
    case LpStatus::kUnbounded: {
      if (out.primal.size() != n || out.ray.size() != n) {
        throw LpError(LpErrc::kShapeMismatch, "certificate size mismatch");
      }
      if (!primal_feasible(lp, out.primal)) return false;
      for (std::size_t j = 0; j < n; ++j) {
        if (lp.variables[j] == VarKind::kNonnegative && out.ray[j].sign() < 0) {
          return false;
        }
      }
      for (const Constraint& c : lp.constraints) {
        if (!satisfies(dot(c.coeffs, out.ray), c.relation, Rat())) return false;
      }
      const Rat gain = dot(lp.objective, out.ray);
      return maximize ? gain.sign() > 0 : gain.sign() < 0;
    }
  }
  return false;
}

LinearProgram dual_program(const LinearProgram& lp) {
  check_shape(lp);
  const bool maximize = lp.sense == Sense::kMaximize;
  const std::size_t n = lp.variable_count();
  LinearProgram d;
  d.sense = maximize ? Sense::kMinimize : Sense::kMaximize;
  // Row i's multiplier y_i is stored as negate[i] * (dual variable i).
  std::vector<int> negate;
  for (const Constraint& c : lp.constraints) {
    int s = 1;
    VarKind kind = VarKind::kNonnegative;
    if (c.relation == Relation::kEqual) {
      kind = VarKind::kFree;
    } else if ((c.relation == Relation::kGreaterEqual) == maximize) {
      s = -1;
    }
    negate.push_back(s);
    d.variables.push_back(kind);
    d.objective.push_back(s < 0 ? -c.rhs : c.rhs);
  }
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Rat> row;
    row.reserve(lp.row_count());
    for (std::size_t i = 0; i < lp.row_count(); ++i) {
      const Rat& a = lp.constraints[i].coeffs[j];
      row.push_back(negate[i] < 0 ? -a : a);
    }
    Relation rel = lp.variables[j] == VarKind::kFree
                       ? Relation::kEqual
                       : (maximize ? Relation::kGreaterEqual
                                   : Relation::kLessEqual);
    d.add_constraint(std::move(row), rel, lp.objective[j]);
  }
  return d;
}

}  // namespace capax
