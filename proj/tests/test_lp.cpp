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

#include <sstream>

#include "capax/lp.hpp"
#include "doctest.h"
#include "oracles/lp_vertex_oracle.hpp"
#include "test_support.hpp"

using namespace capax;
using capax::testing::q;

using capax::testing::beale_cycling;
using capax::testing::chvatal_cycling;

TEST_SUITE("lp") {

TEST_CASE("maximize x s.t. x <= 1") {
  LinearProgram lp;
  lp.variables = {VarKind::kNonnegative};
  lp.objective = {1};
  lp.add_constraint({1}, Relation::kLessEqual, 1);
  const LpOutcome out = solve(lp);
  REQUIRE(out.status == LpStatus::kOptimal);
  CHECK(out.value == Rat(1));
  CHECK(verify_outcome(lp, out));
}

TEST_CASE("maximize x + y s.t. x + y = 1") {
  LinearProgram lp;
  lp.variables.assign(2, VarKind::kNonnegative);
  lp.objective = {1, 1};
  lp.add_constraint({1, 1}, Relation::kEqual, 1);
  const LpOutcome out = solve(lp);
  REQUIRE(out.status == LpStatus::kOptimal);
  CHECK(out.value == Rat(1));
  REQUIRE(out.dual.size() == 1);
  CHECK(out.dual[0] * Rat(1) == Rat(1));
  CHECK(verify_outcome(lp, out));
}

TEST_CASE("x >= 1 and x <= 0 is infeasible with the (1,1) certificate") {
  LinearProgram lp;
  lp.variables = {VarKind::kNonnegative};
  lp.objective = {0};
  lp.add_constraint({1}, Relation::kGreaterEqual, 1);
  lp.add_constraint({1}, Relation::kLessEqual, 0);
  const LpOutcome out = solve(lp);
  REQUIRE(out.status == LpStatus::kInfeasible);
  CHECK(verify_outcome(lp, out));

  LpOutcome hand;
  hand.status = LpStatus::kInfeasible;
  hand.farkas = {1, 1};
  CHECK(verify_outcome(lp, hand));
  hand.farkas = {1, -1};  // negative multiplier on the <= row
  CHECK_FALSE(verify_outcome(lp, hand));

  lp.variables = {VarKind::kFree};
  CHECK(verify_outcome(lp, solve(lp)));
}

TEST_CASE("perturbed optimal certificates are rejected") {
  LinearProgram lp;
  lp.variables.assign(2, VarKind::kNonnegative);
  lp.objective = {3, 2};
  lp.add_constraint({1, 1}, Relation::kLessEqual, 4);
  lp.add_constraint({1, 3}, Relation::kLessEqual, 6);
  LpOutcome out = solve(lp);
  REQUIRE(out.status == LpStatus::kOptimal);
  CHECK(out.value == Rat(12));
  CHECK(verify_outcome(lp, out));
  LpOutcome bad = out;
  bad.value += Rat(1, 100);
  CHECK_FALSE(verify_outcome(lp, bad));
  bad = out;
  bad.dual[0] -= Rat(1, 2);
  CHECK_FALSE(verify_outcome(lp, bad));
  bad = out;
  bad.primal[0] += Rat(1);
  CHECK_FALSE(verify_outcome(lp, bad));
  bad = out;
  bad.dual.pop_back();
  CHECK_THROWS_AS(verify_outcome(lp, bad), LpError);
}

TEST_CASE("unbounded programs ship a ray") {
  LinearProgram lp;
  lp.variables = {VarKind::kNonnegative, VarKind::kFree};
  lp.objective = {1, -1};
  lp.add_constraint({1, 1}, Relation::kGreaterEqual, 1);
  const LpOutcome out = solve(lp);
  REQUIRE(out.status == LpStatus::kUnbounded);
  CHECK(verify_outcome(lp, out));
  LpOutcome bad = out;
  for (Rat& r : bad.ray) r = -r;
  CHECK_FALSE(verify_outcome(lp, bad));

  LinearProgram empty_rows;
  empty_rows.variables = {VarKind::kFree};
  empty_rows.objective = {-2};
  empty_rows.sense = Sense::kMinimize;
  const LpOutcome u = solve(empty_rows);
  CHECK(u.status == LpStatus::kUnbounded);
  CHECK(verify_outcome(empty_rows, u));
}

TEST_CASE("cycling fixtures terminate under Bland's rule") {
  const LinearProgram chvatal = chvatal_cycling();
  const LpOutcome a = solve(chvatal);
  REQUIRE(a.status == LpStatus::kOptimal);
  CHECK(a.value == Rat(1));
  CHECK(oracle::vertex_optimum(chvatal) == Rat(1));
  CHECK(verify_outcome(chvatal, a));

  const LinearProgram beale = beale_cycling();
  const LpOutcome b = solve(beale);
  REQUIRE(b.status == LpStatus::kOptimal);
  CHECK(b.value == q("-1/20"));
  CHECK(oracle::vertex_optimum(beale) == q("-1/20"));
  CHECK(verify_outcome(beale, b));
}

TEST_CASE("small random programs agree with vertex enumeration") {
  SplitMix64 rng(31337);
  for (int trial = 0; trial < 150; ++trial) {
    const LinearProgram lp = testing::random_bounded_lp(rng, 4, 7);
    const LpOutcome out = solve(lp);
    REQUIRE(out.status == LpStatus::kOptimal);
    CHECK(verify_outcome(lp, out));
    const auto expected = oracle::vertex_optimum(lp);
    REQUIRE(expected.has_value());
    CHECK(out.value == *expected);
  }
}

TEST_CASE("random infeasible programs carry valid Farkas certificates") {
  SplitMix64 rng(8);
  int infeasible = 0;
  for (int trial = 0; trial < 200; ++trial) {
    LinearProgram lp = testing::random_bounded_lp(rng, 5, 9);
    // A contradicting copy of a random row.
    const Constraint& c = lp.constraints[rng.below(lp.constraints.size())];
    lp.add_constraint(c.coeffs,
                      c.relation == Relation::kGreaterEqual ? Relation::kLessEqual
                                                            : Relation::kGreaterEqual,
                      c.relation == Relation::kGreaterEqual ? c.rhs - Rat(1)
                                                            : c.rhs + Rat(1));
    const LpOutcome out = solve(lp);
    CHECK(verify_outcome(lp, out));
    infeasible += out.status == LpStatus::kInfeasible ? 1 : 0;
  }
  CHECK(infeasible > 50);
}

TEST_CASE("the dual program has the same value") {
  SplitMix64 rng(12);
  for (int trial = 0; trial < 60; ++trial) {
    const LinearProgram lp = testing::random_bounded_lp(rng, 6, 10);
    const LpOutcome primal = solve(lp);
    const LinearProgram d = dual_program(lp);
    const LpOutcome dual = solve(d);
    REQUIRE(primal.status == LpStatus::kOptimal);
    REQUIRE(dual.status == LpStatus::kOptimal);
    CHECK(primal.value == dual.value);
    CHECK(verify_outcome(d, dual));
  }
}

TEST_CASE("size guard and trace") {
  LinearProgram lp;
  lp.variables.assign(100, VarKind::kNonnegative);
  lp.objective.assign(100, Rat());
  for (int i = 0; i < 51; ++i) {
    lp.add_constraint(std::vector<Rat>(100, Rat(1)), Relation::kLessEqual, 1);
  }
  CHECK_THROWS_AS(solve(lp), LpError);
  SolveOptions roomy;
  roomy.max_cells = 10000;
  CHECK(solve(lp, roomy).status == LpStatus::kOptimal);

  std::ostringstream trace;
  SolveOptions traced;
  traced.trace = &trace;
  solve(chvatal_cycling(), traced);
  CHECK(trace.str().find("tableau after pivot") != std::string::npos);

  LinearProgram malformed;
  malformed.variables = {VarKind::kNonnegative};
  malformed.objective = {1, 2};
  CHECK_THROWS_AS(solve(malformed), LpError);
}

}  // TEST_SUITE
