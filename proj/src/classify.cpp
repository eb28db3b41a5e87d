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

#include "capax/classify.hpp"

#include <algorithm>
#include <iostream>

namespace capax {

namespace {

// Nesting depth of public entry points on this thread; the size warning is
// printed once per outermost call.
thread_local int call_depth = 0;
thread_local bool size_warned = false;

class EntryScope {
 public:
  EntryScope() { ++call_depth; }
  ~EntryScope() {
    if (--call_depth == 0) size_warned = false;
  }
  EntryScope(const EntryScope&) = delete;
  EntryScope& operator=(const EntryScope&) = delete;
};

SolveOptions lp_options(const Capacity& v, const ClassifyOptions& options) {
  const int n = v.ground().size();
  if (options.max_n > kClassifyHardLimit) {
    throw ClassifyError(ClassifyErrc::kTooLarge,
                        "max_n may not exceed " + std::to_string(kClassifyHardLimit));
  }
  const int limit = options.max_n;
  if (n > limit) {
    throw ClassifyError(ClassifyErrc::kTooLarge,
                        "classification limited to n <= " +
                            std::to_string(limit) + " (got n = " +
                            std::to_string(n) + ")");
  }
  if (n > kDefaultClassifyLimit && !size_warned) {
    size_warned = true;
    std::cerr << "capax: warning: classifying n = " << n
              << "; exact LPs grow as 2^n and may be slow\n";
  }
  SolveOptions so;
  so.max_cells = std::max<std::size_t>(
      so.max_cells, static_cast<std::size_t>(n) * v.ground().subset_count());
  return so;
}

LpOutcome checked_solve(const LinearProgram& lp, const SolveOptions& so) {
  LpOutcome out = solve(lp, so);
  if (!verify_outcome(lp, out)) {
    throw ClassifyError(ClassifyErrc::kInternalInconsistency,
                        "LP certificate failed verification");
  }
  return out;
}

struct CoreSystem {
  LinearProgram lp;
  // Subset behind each row after the leading normalization row.
  std::vector<Subset> rows;
};

CoreSystem build_core_system(const Capacity& v, Subset target) {
  const GroundSet g = v.ground();
  const auto n = static_cast<std::size_t>(g.size());
  CoreSystem sys;
  sys.lp.sense = Sense::kMinimize;
  sys.lp.variables.assign(n, VarKind::kNonnegative);
  sys.lp.objective = char_vector(target, g);
  sys.lp.add_constraint(std::vector<Rat>(n, Rat(1)), Relation::kEqual, 1);
  for (std::uint32_t bits = 1; bits < g.full_bits(); ++bits) {
    const Subset a(bits);
    if (v(a).is_zero()) continue;
    sys.lp.add_constraint(char_vector(a, g), Relation::kGreaterEqual, v(a));
    sys.rows.push_back(a);
  }
  return sys;
}

Measure measure_from(GroundSet g, std::vector<Rat> weights) {
  return Measure::from_weights(g, std::move(weights));
}

CoreBound bound_from_dual(Subset target, const CoreSystem& sys,
                          const std::vector<Rat>& dual) {
  CoreBound cb;
  cb.subset = target;
  cb.offset = dual[0];
  for (std::size_t k = 0; k < sys.rows.size(); ++k) {
    if (dual[k + 1].is_zero()) continue;
    cb.sets.push_back(sys.rows[k]);
    cb.weights.push_back(dual[k + 1]);
  }
  return cb;
}

std::string describe(const std::optional<Subset>& s) {
  return s ? s->str() : std::string("-");
}

}  // namespace

ConvexityResult is_convex(const Capacity& v) {
  const GroundSet g = v.ground();
  for (std::uint32_t bits = 0; bits <= g.full_bits(); ++bits) {
    const Subset a(bits);
    for (int i = 0; i < g.size(); ++i) {
      if (a.contains(i)) continue;
      for (int j = i + 1; j < g.size(); ++j) {
        if (a.contains(j)) continue;
        const Subset ai = a.with(i);
        const Subset aj = a.with(j);
        if (v(ai.with(j)) + v(a) < v(ai) + v(aj)) {
          return {false, ConvexityWitness{ai, aj}};
        }
      }
    }
  }
  return {true, std::nullopt};
}

ConvexityResult is_convex_all_pairs(const Capacity& v) {
  const GroundSet g = v.ground();
  for (std::uint32_t x = 0; x <= g.full_bits(); ++x) {
    for (std::uint32_t y = 0; y <= g.full_bits(); ++y) {
      const Subset a(x), b(y);
      if (v(a | b) + v(a & b) < v(a) + v(b)) {
        return {false, ConvexityWitness{a, b}};
      }
    }
  }
  return {true, std::nullopt};
}

BondarevaSolution bondareva_solution(const Capacity& v, Subset b,
                                     const ClassifyOptions& options) {
  const EntryScope scope;
  if (b.is_empty()) {
    throw ClassifyError(ClassifyErrc::kEmptySubset,
                        "Bondareva value needs a nonempty subset");
  }
  const SolveOptions so = lp_options(v, options);
  const std::vector<int> points = b.members();

  // Only sets with positive value can contribute.
  std::vector<Subset> sets;
  for (std::uint32_t bits = b.bits(); bits != 0; bits = (bits - 1) & b.bits()) {
    if (!v(Subset(bits)).is_zero()) sets.push_back(Subset(bits));
  }
  std::reverse(sets.begin(), sets.end());
  BondarevaSolution sol;
  if (sets.empty()) return sol;

  LinearProgram lp;
  lp.sense = Sense::kMaximize;
  lp.variables.assign(sets.size(), VarKind::kNonnegative);
  for (Subset a : sets) lp.objective.push_back(v(a));
  for (int i : points) {
    std::vector<Rat> row(sets.size());
    for (std::size_t k = 0; k < sets.size(); ++k) {
      if (sets[k].contains(i)) row[k] = 1;
    }
    lp.add_constraint(std::move(row), Relation::kLessEqual, 1);
  }
  const LpOutcome out = checked_solve(lp, so);
  if (out.status != LpStatus::kOptimal) {
    throw ClassifyError(ClassifyErrc::kInternalInconsistency,
                        "Bondareva LP not optimal");
  }
  sol.value = out.value;
  for (std::size_t k = 0; k < sets.size(); ++k) {
    if (out.primal[k].is_zero()) continue;
    sol.family.sets.push_back(sets[k]);
    sol.family.weights.push_back(out.primal[k]);
  }
  return sol;
}

Rat bondareva_value(const Capacity& v, Subset b, const ClassifyOptions& options) {
  return bondareva_solution(v, b, options).value;
}

BalancedResult is_balanced(const Capacity& v, const ClassifyOptions& options) {
  const EntryScope scope;
  const SolveOptions so = lp_options(v, options);
  const Subset full = Subset::full(v.ground());
  const BondarevaSolution bs = bondareva_solution(v, full, options);

  CoreSystem sys = build_core_system(v, Subset::empty());
  const LpOutcome core = checked_solve(sys.lp, so);
  const bool feasible = core.status == LpStatus::kOptimal;
  const bool bounded_by_one = bs.value == Rat(1);
  if (feasible != bounded_by_one) {
    throw ClassifyError(ClassifyErrc::kInternalInconsistency,
                        "Bondareva value " + bs.value.str() +
                            " disagrees with core feasibility");
  }
  BalancedResult r;
  r.holds = feasible;
  if (feasible) {
    r.core_point = measure_from(v.ground(), core.primal);
  } else {
    r.violation = bs.family;
  }
  return r;
}

TotallyBalancedResult is_totally_balanced(const Capacity& v,
                                          const ClassifyOptions& options) {
  const EntryScope scope;
  lp_options(v, options);
  const GroundSet g = v.ground();
  for (std::uint32_t bits = 1; bits <= g.full_bits(); ++bits) {
    const Subset b(bits);
    // Singletons are always fine: the only family is {b} with weight <= 1.
    if (b.cardinality() == 1) continue;
    BondarevaSolution bs = bondareva_solution(v, b, options);
    if (bs.value > v(b)) {
      return {false, b, std::move(bs.family)};
    }
  }
  return {true, std::nullopt, std::nullopt};
}

Rat min_core_value(const Capacity& v, Subset b, const ClassifyOptions& options) {
  const EntryScope scope;
  const SolveOptions so = lp_options(v, options);
  CoreSystem sys = build_core_system(v, b);
  const LpOutcome out = checked_solve(sys.lp, so);
  if (out.status == LpStatus::kInfeasible) {
    throw ClassifyError(ClassifyErrc::kCoreEmpty, "core is empty");
  }
  return out.value;
}

ExactResult is_exact(const Capacity& v, const ClassifyOptions& options) {
  const EntryScope scope;
  const SolveOptions so = lp_options(v, options);
  const GroundSet g = v.ground();
  ExactResult r;
  const BalancedResult bal = is_balanced(v, options);
  if (!bal.holds) {
    r.holds = false;
    r.failing = Subset::full(g);
    r.empty_core = bal.violation;
    return r;
  }
  // Core points seen so far; any of them attaining v(B) settles B.
  std::vector<Measure> known{*bal.core_point};
  for (std::uint32_t bits = 1; bits < g.full_bits(); ++bits) {
    const Subset b(bits);
    const Rat& target = v(b);
    const bool attained = std::any_of(
        known.begin(), known.end(),
        [&](const Measure& m) { return m(b) == target; });
    if (attained) continue;
    CoreSystem sys = build_core_system(v, b);
    const LpOutcome out = checked_solve(sys.lp, so);
    if (out.status != LpStatus::kOptimal) {
      throw ClassifyError(ClassifyErrc::kInternalInconsistency,
                          "core LP became infeasible");
    }
    if (out.value > target) {
      r.holds = false;
      r.failing = b;
      r.gap = bound_from_dual(b, sys, out.dual);
      return r;
    }
    known.push_back(measure_from(g, out.primal));
  }
  r.holds = true;
  return r;
}

ClassReport classify_full(const Capacity& v, const ClassifyOptions& options) {
  const EntryScope scope;
  ClassReport rep;
  const ConvexityResult cv = is_convex(v);
  rep.convex = cv.holds;
  rep.convex_witness = cv.witness;
  rep.balanced_detail = is_balanced(v, options);
  rep.balanced = rep.balanced_detail.holds;
  rep.totally_balanced_detail = is_totally_balanced(v, options);
  rep.totally_balanced = rep.totally_balanced_detail.holds;
  rep.exact_detail = is_exact(v, options);
  rep.exact = rep.exact_detail.holds;

  auto broken = [](const std::string& what) {
    return ClassifyError(ClassifyErrc::kInternalInconsistency,
                         "class chain broken: " + what);
  };
  if (rep.convex && !rep.exact) {
    throw broken("convex but not exact (failing subset " +
                 describe(rep.exact_detail.failing) + ")");
  }
  if (rep.exact && !rep.totally_balanced) {
    throw broken("exact but not totally balanced (failing subset " +
                 describe(rep.totally_balanced_detail.failing) + ")");
  }
  if (rep.totally_balanced && !rep.balanced) {
    throw broken("totally balanced but not balanced");
  }
  return rep;
}

bool verify_convexity_witness(const Capacity& v, const ConvexityWitness& w) {
  const auto [a, b] = w;
  return a.valid_for(v.ground()) && b.valid_for(v.ground()) &&
         v(a | b) + v(a & b) < v(a) + v(b);
}

bool verify_core_point(const Capacity& v, const Measure& m) {
  if (m.ground() != v.ground()) return false;
  for (std::uint32_t bits = 0; bits <= v.ground().full_bits(); ++bits) {
    if (m(Subset(bits)) < v(Subset(bits))) return false;
  }
  return true;
}

bool verify_balance_violation(const Capacity& v, Subset b,
                              const BalancedFamily& family) {
  return b.valid_for(v.ground()) && family.is_valid_within(b) &&
         family.weighted_value(v) > v(b);
}

bool CoreBound::is_valid(GroundSet g) const {
  if (sets.size() != weights.size() || !subset.valid_for(g)) return false;
  for (std::size_t k = 0; k < sets.size(); ++k) {
    if (weights[k].sign() < 0 || !sets[k].valid_for(g)) return false;
  }
  for (int i = 0; i < g.size(); ++i) {
    Rat load = offset;
    for (std::size_t k = 0; k < sets.size(); ++k) {
      if (sets[k].contains(i)) load += weights[k];
    }
    if (load > Rat(subset.contains(i) ? 1 : 0)) return false;
  }
  return true;
}

Rat CoreBound::bound(const Capacity& v) const {
  Rat total = offset;
  for (std::size_t k = 0; k < sets.size(); ++k) total += weights[k] * v(sets[k]);
  return total;
}

bool verify_core_gap(const Capacity& v, const CoreBound& gap) {
  return gap.is_valid(v.ground()) && gap.bound(v) > v(gap.subset);
}

bool verify_report(const Capacity& v, const ClassReport& r) {
  const Subset full = Subset::full(v.ground());
  if (r.convex == r.convex_witness.has_value()) return false;
  if (r.convex_witness && !verify_convexity_witness(v, *r.convex_witness)) {
    return false;
  }
  const BalancedResult& b = r.balanced_detail;
  if (r.balanced) {
    if (!b.core_point || !verify_core_point(v, *b.core_point)) return false;
  } else if (!b.violation || !verify_balance_violation(v, full, *b.violation)) {
    return false;
  }
  const TotallyBalancedResult& tb = r.totally_balanced_detail;
  if (!r.totally_balanced &&
      (!tb.failing || !tb.violation ||
       !verify_balance_violation(v, *tb.failing, *tb.violation))) {
    return false;
  }
  const ExactResult& ex = r.exact_detail;
  if (!r.exact) {
    if (ex.gap) {
      if (!verify_core_gap(v, *ex.gap)) return false;
    } else if (!ex.empty_core ||
               !verify_balance_violation(v, full, *ex.empty_core)) {
      return false;
    }
  }
  return true;
}

LinearProgram core_program(const Capacity& v, Subset target) {
  return build_core_system(v, target).lp;
}

}  // namespace capax
