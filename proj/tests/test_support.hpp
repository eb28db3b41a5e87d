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

// Shared fixtures and corpus builders for the unit and acceptance suites.
#ifndef CAPAX_TESTS_TEST_SUPPORT_HPP
#define CAPAX_TESTS_TEST_SUPPORT_HPP

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "capax/capacity.hpp"
#include "capax/credal.hpp"
#include "capax/generators.hpp"
#include "capax/lp.hpp"
#include "capax/rng.hpp"

namespace capax::testing {

inline Rat q(const char* text) { return Rat::parse(text); }

/// Capacity from (subset, value) pairs; unspecified subsets by closure.
inline Capacity game(int n,
                     std::initializer_list<std::pair<Subset, const char*>> values) {
  std::map<Subset, Rat> m;
  for (const auto& [a, v] : values) m[a] = Rat::parse(v);
  return new_capacity(GroundSet(n), m, InputMode::kLenient);
}

/// n = 2 game with v({0}) = v({1}) = 9/10: neither convex nor balanced.
inline Capacity two_point_unbalanced() {
  return game(2, {{Subset::of({0}), "9/10"}, {Subset::of({1}), "9/10"}});
}

/// The n = 4 game with value 2/5 on the pairs of {0,1,2}, 1/2 on {0,1,2},
/// 1 on the full set, and v(A) = v(A \ {3}) otherwise. Balanced but not
/// totally balanced.
inline Capacity nu_star() {
  const GroundSet g(4);
  std::vector<Rat> table(g.subset_count());
  for (std::uint32_t bits = 1; bits <= g.full_bits(); ++bits) {
    const Subset a = Subset(bits).without(3);
    if (Subset(bits) == Subset::full(g)) {
      table[bits] = 1;
    } else if (a == Subset::of({0, 1, 2})) {
      table[bits] = Rat(1, 2);
    } else if (a.cardinality() == 2) {
      table[bits] = Rat(2, 5);
    }
  }
  return Capacity::from_table(g, std::move(table));
}

/// Seeded corpus of random monotone capacities with n cycling through
/// {2,3,4,5}; the grid alternates to vary value density.
inline std::vector<Capacity> monotone_corpus(std::size_t count,
                                             std::uint64_t base_seed = 1000) {
  std::vector<Capacity> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const int n = 2 + static_cast<int>(i % 4);
    const int grid = (i / 4) % 2 == 0 ? 4 : 10;
    out.push_back(random_monotone(GroundSet(n), base_seed + i, grid));
  }
  return out;
}

inline std::vector<Capacity> convex_corpus(std::size_t count,
                                           std::uint64_t seed = 77) {
  SplitMix64 rng(seed);
  std::vector<Capacity> out;
  for (std::size_t i = 0; i < count; ++i) {
    const int n = 2 + static_cast<int>(i % 4);
    out.push_back(random_unanimity_mixture(rng, GroundSet(n), rng.between(1, 4), 5));
  }
  return out;
}

/// Lower envelopes of random vertex credal sets (exact capacities).
inline std::vector<CredalSet> credal_corpus(std::size_t count,
                                            std::uint64_t seed = 4242,
                                            int max_n = 5) {
  SplitMix64 rng(seed);
  std::vector<CredalSet> out;
  for (std::size_t i = 0; i < count; ++i) {
    const int n = rng.between(2, max_n);
    out.push_back(random_credal_set(rng, GroundSet(n), rng.between(1, 6), 6));
  }
  return out;
}


/// Random LP with a known feasible point and a bounded objective: free
/// variables get a two-sided box, nonnegative ones a joint upper bound.
inline LinearProgram random_bounded_lp(SplitMix64& rng, int max_vars, int max_rows) {
  LinearProgram lp;
  lp.sense = rng.below(2) ? Sense::kMaximize : Sense::kMinimize;
  const int n = rng.between(1, max_vars);
  int free_budget = std::min(2, (max_rows - 1) / 2);
  std::vector<Rat> x0;
  for (int j = 0; j < n; ++j) {
    const bool free_var = free_budget > 0 && rng.below(4) == 0;
    if (free_var) --free_budget;
    lp.variables.push_back(free_var ? VarKind::kFree : VarKind::kNonnegative);
    lp.objective.emplace_back(rng.between(-5, 5));
    x0.emplace_back(free_var ? rng.between(-3, 3) : rng.between(0, 3),
                    rng.between(1, 3));
  }
  int free_count = 0;
  for (VarKind k : lp.variables) free_count += k == VarKind::kFree ? 1 : 0;
  const int random_rows = rng.between(0, max_rows - 1 - 2 * free_count);
  for (int i = 0; i < random_rows; ++i) {
    std::vector<Rat> row;
    Rat lhs;
    for (int j = 0; j < n; ++j) {
      row.emplace_back(rng.between(-4, 4), rng.between(1, 2));
      lhs += row.back() * x0[static_cast<std::size_t>(j)];
    }
    const Rat slack(rng.between(0, 2), rng.between(1, 3));
    switch (rng.below(3)) {
      case 0: lp.add_constraint(std::move(row), Relation::kLessEqual, lhs + slack); break;
      case 1: lp.add_constraint(std::move(row), Relation::kGreaterEqual, lhs - slack); break;
      default: lp.add_constraint(std::move(row), Relation::kEqual, lhs); break;
    }
  }
  std::vector<Rat> cap(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    if (lp.variables[static_cast<std::size_t>(j)] == VarKind::kNonnegative) {
      cap[static_cast<std::size_t>(j)] = 1;
    } else {
      std::vector<Rat> e(static_cast<std::size_t>(n));
      e[static_cast<std::size_t>(j)] = 1;
      lp.add_constraint(e, Relation::kLessEqual, 4);
      lp.add_constraint(e, Relation::kGreaterEqual, -4);
    }
  }
  lp.add_constraint(std::move(cap), Relation::kLessEqual, 12);
  return lp;
}

inline LinearProgram chvatal_cycling() {
  // Cycles under the largest-coefficient rule; 4 structural + 3 slack
  // variables.
  LinearProgram lp;
  lp.sense = Sense::kMaximize;
  lp.variables.assign(4, VarKind::kNonnegative);
  lp.objective = {10, -57, -9, -24};
  lp.add_constraint({Rat::parse("1/2"), Rat::parse("-11/2"), Rat::parse("-5/2"), 9}, Relation::kLessEqual, 0);
  lp.add_constraint({Rat::parse("1/2"), Rat::parse("-3/2"), Rat::parse("-1/2"), 1}, Relation::kLessEqual, 0);
  lp.add_constraint({1, 0, 0, 0}, Relation::kLessEqual, 1);
  return lp;
}

inline LinearProgram beale_cycling() {
  LinearProgram lp;
  lp.sense = Sense::kMinimize;
  lp.variables.assign(4, VarKind::kNonnegative);
  lp.objective = {Rat::parse("-3/4"), 150, Rat::parse("-1/50"), 6};
  lp.add_constraint({Rat::parse("1/4"), -60, Rat::parse("-1/25"), 9}, Relation::kLessEqual, 0);
  lp.add_constraint({Rat::parse("1/2"), -90, Rat::parse("-1/50"), 3}, Relation::kLessEqual, 0);
  lp.add_constraint({0, 0, 1, 0}, Relation::kLessEqual, 1);
  return lp;
}

}  // namespace capax::testing

#endif  // CAPAX_TESTS_TEST_SUPPORT_HPP
