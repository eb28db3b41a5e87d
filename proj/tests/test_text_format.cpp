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

#include "capax/text_format.hpp"
#include "doctest.h"
#include "test_support.hpp"

namespace capax {
namespace {

using testing::q;

int parse_error_line(const std::string& text) {
  try {
    parse_game(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return -1;
}

TEST_SUITE("text_format") {

TEST_CASE("game files round trip") {
  for (const Capacity& v : testing::monotone_corpus(60, 2)) {
    const std::string text = format_game(v);
    CHECK(parse_game(text) == v);
    CHECK(format_game(parse_game(text)) == text);
  }
  CHECK(parse_game(format_game(testing::nu_star())) == testing::nu_star());
}

TEST_CASE("game files accept comments and any order") {
  const Capacity v = parse_game(
      "# two points\n"
      "ground 2   # header\n"
      "\n"
      "v {1} = 3/4\n"
      "v {0} = 1/2  # trailing comment\n");
  CHECK(v(Subset::of({0})) == q("1/2"));
  CHECK(v(Subset::of({1})) == q("3/4"));
  CHECK(v(Subset::of({0, 1})) == 1);
}

TEST_CASE("game parse errors carry line numbers") {
  CHECK(parse_error_line("ground 2\nv {0} = 1/0\nv {1} = 1/2\n") == 2);
  CHECK(parse_error_line("ground 2\nv {0} = 1/2\nv {0} = 1/3\nv {1} = 0\n") == 3);
  CHECK(parse_error_line("ground 2\nv {0} = 1/2\nv {1} 1/2\n") == 3);
  CHECK(parse_error_line("# comment\ngrund 2\n") == 2);
  CHECK(parse_error_line("ground 2\nv {0,2} = 1/2\nv {1} = 0\n") == 2);
  CHECK(parse_error_line("ground 2\nv {0} = abc\nv {1} = 0\n") == 2);
  CHECK(parse_error_line("ground 2\nx {0} = 1\n") == 2);
  CHECK(parse_error_line("") == 0);
}

TEST_CASE("game validation errors are not parse errors") {
  try {
    parse_game("ground 2\nv {0} = 1/2\n");
    FAIL("expected a missing subset");
  } catch (const CapacityError& e) {
    CHECK(e.code() == CapacityErrc::kMissingSubset);
  }
  try {
    parse_game("ground 2\nv {0} = 1/2\nv {1} = 1/2\nv {0,1} = 1/4\n");
    FAIL("expected bad normalization");
  } catch (const CapacityError& e) {
    CHECK(e.code() == CapacityErrc::kBadNormalization);
  }
  try {
    parse_game("ground 3\nv {0} = 1/2\nv {1} = 0\nv {2} = 0\nv {0,1} = 1/3\n"
               "v {0,2} = 1/2\nv {1,2} = 1/2\n");
    FAIL("expected non-monotone");
  } catch (const CapacityError& e) {
    CHECK(e.code() == CapacityErrc::kNotMonotone);
  }
  const Capacity lenient = parse_game("ground 3\nv {0} = 1/2\n", InputMode::kLenient);
  CHECK(lenient(Subset::of({0, 1})) == q("1/2"));
  CHECK(lenient(Subset::of({1, 2})) == 0);
}

TEST_CASE("measure files round trip") {
  SplitMix64 rng(3);
  for (int i = 0; i < 30; ++i) {
    const Measure m = random_measure(rng, GroundSet(1 + i % 5), 9);
    CHECK(parse_measure(format_measure(m)) == m);
  }
  const Measure sparse = parse_measure("measure 3\nm 1 = 1/4\nm 2 = 3/4\n");
  CHECK(sparse.weight(0) == 0);
  CHECK_THROWS_AS(parse_measure("measure 2\nm 0 = 1/2\nm 0 = 1/2\n"), ParseError);
  CHECK_THROWS_AS(parse_measure("measure 2\nm 2 = 1\n"), ParseError);
  CHECK_THROWS_AS(parse_measure("measure 2\nm 0 = 1/2\n"), CapacityError);
}

TEST_CASE("credal files round trip") {
  for (const CredalSet& a : testing::credal_corpus(30, 6, 4)) {
    const CredalSet b = parse_credal(format_credal(a));
    CHECK(b.vertices() == a.vertices());
  }
  const Capacity v = testing::convex_corpus(1, 5).front();
  const CredalSet core = parse_credal(format_credal(core_polytope(v)));
  CHECK(core.kind() == CredalSet::Kind::kConstraints);
  CHECK(lower_envelope(core) == v);
}

TEST_CASE("credal parse errors") {
  CHECK_THROWS_AS(parse_credal("credal 2 vertices 2\nm 0 = 1/2 1/2\n"), ParseError);
  CHECK_THROWS_AS(parse_credal("credal 2 vertices 1\nm 0 = 1/2\n"), ParseError);
  CHECK_THROWS_AS(parse_credal("credal 2 vertices 1\nm 1 = 1/2 1/2\n"), ParseError);
  CHECK_THROWS_AS(parse_credal("credal 2 polygon\n"), ParseError);
  CHECK_THROWS_AS(parse_credal("credal 2 vertices 1\nm 0 = 1/2 1/4\n"), CapacityError);
  CHECK_THROWS_AS(parse_credal("credal 2 core-of\nground 3\nv {0} = 0\n"), ParseError);
  try {
    parse_credal("credal 2 core-of\nv {0} = 9/10\nv {1} = 9/10\n");
    FAIL("expected an empty core");
  } catch (const CredalError& e) {
    CHECK((e.code() == CredalErrc::kCoreEmpty || e.code() == CredalErrc::kInfeasible));
  }
}

TEST_CASE("second-order files round trip") {
  const Capacity v = random_monotone(GroundSet(3), 8, 4);
  const SecondOrderCapacity c = lift_unit(v);
  const std::string text = format_second_order(c);
  CHECK(parse_second_order(text) == c);
  CHECK(format_second_order(parse_second_order(text)) == text);
  CHECK_THROWS_AS(parse_second_order("second-order 2 1\ngame\n"), ParseError);
  CHECK_THROWS_AS(parse_second_order("second-order 2 1\nv {0} = 1\n"), ParseError);
}

}  // TEST_SUITE

}  // namespace
}  // namespace capax
