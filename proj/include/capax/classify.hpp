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

#ifndef CAPAX_CLASSIFY_HPP
#define CAPAX_CLASSIFY_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "capax/capacity.hpp"
#include "capax/lp.hpp"

namespace capax {

enum class ClassifyErrc {
  kCoreEmpty,
  kEmptySubset,
  kTooLarge,
  kInternalInconsistency,
};

class ClassifyError : public std::runtime_error {
 public:
  ClassifyError(ClassifyErrc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ClassifyErrc code() const { return code_; }

 private:
  ClassifyErrc code_;
};

/// Default ceiling on the ground set size for the LP-backed predicates.
inline constexpr int kDefaultClassifyLimit = 8;
/// Hard ceiling reachable through ClassifyOptions::max_n.
inline constexpr int kClassifyHardLimit = 10;

struct ClassifyOptions {
  /// Ground sets above this size are rejected. May be raised up to
  /// kClassifyHardLimit; a warning is printed to stderr above the default.
  int max_n = kDefaultClassifyLimit;
};

/// A pair (A, B) with v(A u B) + v(A n B) < v(A) + v(B).
using ConvexityWitness = std::pair<Subset, Subset>;

struct ConvexityResult {
  bool holds = true;
  std::optional<ConvexityWitness> witness;
};

/// Supermodularity through the local test
/// v(A+i+j) + v(A) >= v(A+i) + v(A+j), which is equivalent to the all-pairs
/// inequality.
ConvexityResult is_convex(const Capacity& v);
/// The defining inequality over every pair of subsets.
ConvexityResult is_convex_all_pairs(const Capacity& v);

struct BondarevaSolution {
  Rat value;
  /// Optimal weights; a valid family within the queried subset.
  BalancedFamily family;
};

/// max sum_A w_A v(A) over nonnegative w on nonempty A inside `b` whose
/// weighted cover of each point of `b` is at most one.
BondarevaSolution bondareva_solution(const Capacity& v, Subset b,
                                     const ClassifyOptions& options = {});
Rat bondareva_value(const Capacity& v, Subset b,
                    const ClassifyOptions& options = {});

struct BalancedResult {
  bool holds = false;
  std::optional<Measure> core_point;
  std::optional<BalancedFamily> violation;
};

/// Computes both the Bondareva value of the full set and feasibility of the
/// core system, and throws kInternalInconsistency if they disagree.
BalancedResult is_balanced(const Capacity& v, const ClassifyOptions& options = {});

struct TotallyBalancedResult {
  bool holds = true;
  /// Smallest failing subset in code order.
  std::optional<Subset> failing;
  std::optional<BalancedFamily> violation;
};

TotallyBalancedResult is_totally_balanced(const Capacity& v,
                                          const ClassifyOptions& options = {});

/// Lower bound on mu(subset) over the core: for every mu in the core,
///   mu(subset) >= offset + sum_k weight_k * v(set_k),
/// valid whenever weights are nonnegative and, for every point i,
///   offset + sum_{k : i in set_k} weight_k <= [i in subset].
struct CoreBound {
  Subset subset;
  Rat offset;
  std::vector<Subset> sets;
  std::vector<Rat> weights;

  bool is_valid(GroundSet g) const;
  Rat bound(const Capacity& v) const;
};

/// min mu(b) over the core of v. Throws kCoreEmpty when v is unbalanced.
Rat min_core_value(const Capacity& v, Subset b,
                   const ClassifyOptions& options = {});

struct ExactResult {
  bool holds = false;
  std::optional<Subset> failing;
  /// Proves min over the core of mu(failing) > v(failing).
  std::optional<CoreBound> gap;
  /// Set instead of `gap` when the core is empty.
  std::optional<BalancedFamily> empty_core;
};

ExactResult is_exact(const Capacity& v, const ClassifyOptions& options = {});

struct ClassReport {
  bool convex = false;
  bool exact = false;
  bool totally_balanced = false;
  bool balanced = false;
  std::optional<ConvexityWitness> convex_witness;
  ExactResult exact_detail;
  TotallyBalancedResult totally_balanced_detail;
  BalancedResult balanced_detail;
};

/// Runs all four predicates and checks convex => exact => totally balanced
/// => balanced; a broken implication raises kInternalInconsistency.
ClassReport classify_full(const Capacity& v, const ClassifyOptions& options = {});

/// Re-checks every witness in `report` by plain arithmetic, without any LP.
bool verify_report(const Capacity& v, const ClassReport& report);

bool verify_convexity_witness(const Capacity& v, const ConvexityWitness& w);
bool verify_core_point(const Capacity& v, const Measure& m);
/// A family within `b` with weighted value above v(b).
bool verify_balance_violation(const Capacity& v, Subset b,
                              const BalancedFamily& family);
bool verify_core_gap(const Capacity& v, const CoreBound& gap);

/// The core system as an LP: mu >= 0, sum mu = 1, mu(A) >= v(A) for every
/// nonempty proper A with v(A) > 0, and objective min mu(target).
LinearProgram core_program(const Capacity& v, Subset target);

}  // namespace capax

#endif  // CAPAX_CLASSIFY_HPP
