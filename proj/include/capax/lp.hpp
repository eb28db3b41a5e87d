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

#ifndef CAPAX_LP_HPP
#define CAPAX_LP_HPP

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "capax/rational.hpp"

namespace capax {

enum class VarKind { kNonnegative, kFree };
enum class Relation { kLessEqual, kEqual, kGreaterEqual };
enum class Sense { kMaximize, kMinimize };

struct Constraint {
  std::vector<Rat> coeffs;
  Relation relation = Relation::kLessEqual;
  Rat rhs;
};

/// Linear program over exact rationals.
struct LinearProgram {
  Sense sense = Sense::kMaximize;
  std::vector<VarKind> variables;
  std::vector<Rat> objective;
  std::vector<Constraint> constraints;

  std::size_t variable_count() const { return variables.size(); }
  std::size_t row_count() const { return constraints.size(); }

  /// Adds a variable with zero objective and zero coefficients in every
  /// existing row; returns its index.
  std::size_t add_variable(VarKind kind, Rat cost = Rat());
  void add_constraint(std::vector<Rat> coeffs, Relation rel, Rat rhs);
};

enum class LpErrc { kShapeMismatch, kTooLarge };

class LpError : public std::runtime_error {
 public:
  LpError(LpErrc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  LpErrc code() const { return code_; }

 private:
  LpErrc code_;
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

/// Result of solve(), always carrying a certificate.
///
/// Certificate conventions, per constraint row i with data (a_i, rel_i, b_i):
///
///  * kOptimal: `primal` is an optimal point, `value` = c.x, and `dual` is a
///    row multiplier vector with b.y = value. For maximization y_i >= 0 on
///    <= rows, y_i <= 0 on >= rows, and (A^T y)_j >= c_j (= c_j for free
///    variables). For minimization the signs and the inequality flip.
///  * kInfeasible: `farkas` holds multipliers for the rows written as
///    ">=" (a <= row is negated first); inequality multipliers are >= 0,
///    equality multipliers are free. The aggregated row has coefficients
///    <= 0 on nonnegative variables, = 0 on free ones, and a right-hand
///    side > 0, which no feasible point can satisfy.
///  * kUnbounded: `primal` is feasible and `ray` is a recession direction
///    (A ray respects each relation with rhs 0, nonnegative variables do
///    not decrease) that strictly improves the objective.
struct LpOutcome {
  LpStatus status = LpStatus::kInfeasible;
  Rat value;
  std::vector<Rat> primal;
  std::vector<Rat> dual;
  std::vector<Rat> farkas;
  std::vector<Rat> ray;
};

struct SolveOptions {
  /// Rejects instances with more than this many rows * variables.
  std::size_t max_cells = 5000;
  /// When set, every tableau is dumped here in plain text.
  std::ostream* trace = nullptr;
};

/// Two-phase primal simplex on a dense rational tableau with Bland's rule.
LpOutcome solve(const LinearProgram& lp, const SolveOptions& options = {});

/// Checks the certificate in `out` by direct arithmetic. Throws
/// LpError(kShapeMismatch) when vector sizes do not match the program.
bool verify_outcome(const LinearProgram& lp, const LpOutcome& out);

/// The LP dual. Multipliers that must be nonpositive are represented by
/// their negation so that every dual variable is free or nonnegative; the
/// optimal values of `lp` and its dual coincide.
LinearProgram dual_program(const LinearProgram& lp);

std::string to_string(LpStatus status);

}  // namespace capax

#endif  // CAPAX_LP_HPP
