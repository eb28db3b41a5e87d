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

#include "capax/capacity.hpp"
#include "capax/generators.hpp"
#include "doctest.h"
#include "test_support.hpp"

using namespace capax;
using capax::testing::q;

namespace {

CapacityErrc error_of(auto&& fn) {
  try {
    fn();
  } catch (const CapacityError& e) {
    return e.code();
  }
  FAIL("expected CapacityError");
  return CapacityErrc::kBadMeasure;
}

}  // namespace

TEST_SUITE("capacity") {

TEST_CASE("new_capacity: the one-point capacity") {
  const Capacity v = new_capacity(GroundSet(1), {});
  CHECK(v(Subset()) == Rat(0));
  CHECK(v(Subset::of({0})) == Rat(1));
}

TEST_CASE("new_capacity accepts monotone data and rejects the rest") {
  const GroundSet g(2);
  const Capacity v = new_capacity(g, {{Subset::of({0}), q("1/2")},
                                      {Subset::of({1}), q("3/4")}});
  CHECK(v(Subset::of({1})) == q("3/4"));
  CHECK(v(Subset::full(g)) == Rat(1));

  CHECK(error_of([&] {
          new_capacity(g, {{Subset::of({0}), q("1/2")},
                           {Subset::of({1}), q("1/2")},
                           {Subset::full(g), q("1/4")}});
        }) == CapacityErrc::kBadNormalization);
  CHECK(error_of([&] {
          new_capacity(g, {{Subset(), q("1/8")},
                           {Subset::of({0}), q("1/2")},
                           {Subset::of({1}), q("1/2")}});
        }) == CapacityErrc::kBadNormalization);
  CHECK(error_of([&] { new_capacity(g, {{Subset::of({0}), q("1/2")}}); }) ==
        CapacityErrc::kMissingSubset);
  CHECK(error_of([&] {
          new_capacity(g, {{Subset::of({0}), q("3/2")},
                           {Subset::of({1}), q("1/2")}});
        }) == CapacityErrc::kOutOfRange);

  const GroundSet g3(3);
  try {
    new_capacity(g3, {{Subset::of({0}), q("1/2")},
                      {Subset::of({1}), q("0")},
                      {Subset::of({2}), q("0")},
                      {Subset::of({0, 1}), q("1/3")},
                      {Subset::of({0, 2}), q("1/2")},
                      {Subset::of({1, 2}), q("0")}});
    FAIL("expected NotMonotone");
  } catch (const CapacityError& e) {
    CHECK(e.code() == CapacityErrc::kNotMonotone);
    CHECK(e.first() == Subset::of({0}));
    CHECK(e.second() == Subset::of({0, 1}));
  }
}

TEST_CASE("lenient mode fills by monotone closure") {
  const GroundSet g(3);
  const Capacity v = new_capacity(g, {{Subset::of({0}), q("1/3")},
                                      {Subset::of({1, 2}), q("1/2")}},
                                  InputMode::kLenient);
  CHECK(v(Subset::of({0, 1})) == q("1/3"));
  CHECK(v(Subset::of({2})) == Rat(0));
  CHECK(v(Subset::of({1, 2})) == q("1/2"));
  CHECK_THROWS_AS(new_capacity(g,
                               {{Subset::of({0}), q("1/2")},
                                {Subset::of({0, 1}), q("1/3")}},
                               InputMode::kLenient),
                  CapacityError);
}

TEST_CASE("dirac and unanimity") {
  const Capacity d = dirac(0, GroundSet(2));
  CHECK(d(Subset::of({0})) == Rat(1));
  CHECK(d(Subset::of({1})) == Rat(0));
  const Capacity d2 = dirac(2, GroundSet(3));
  CHECK(d2(Subset::of({0, 1})) == Rat(0));
  CHECK(d2(Subset::of({1, 2})) == Rat(1));

  CHECK(unanimity(Subset::of({1}), GroundSet(3)) == dirac(1, GroundSet(3)));
  const Capacity u = unanimity(Subset::of({0, 1}), GroundSet(3));
  CHECK(u(Subset::of({0, 1})) == Rat(1));
  CHECK(u(Subset::of({0, 2})) == Rat(0));
  CHECK(error_of([] { unanimity(Subset(), GroundSet(3)); }) ==
        CapacityErrc::kEmptyCarrier);
}

TEST_CASE("mix") {
  SplitMix64 rng(5);
  const GroundSet g(3);
  const Capacity a = random_monotone(g, 1, 6);
  const Capacity b = random_monotone(g, 2, 6);
  CHECK(mix(a, b, 1) == a);
  CHECK(mix(a, b, 0) == b);
  for (int i = 0; i < 20; ++i) {
    const Rat t(rng.between(0, 7), 7);
    CHECK(mix(a, a, t) == a);
  }
  const Measure m1 = random_measure(rng, g, 5);
  const Measure m2 = random_measure(rng, g, 5);
  const Rat t(2, 7);
  std::vector<Rat> w;
  for (int i = 0; i < 3; ++i) w.push_back(t * m1.weight(i) + (Rat(1) - t) * m2.weight(i));
  CHECK(mix(m1.as_capacity(), m2.as_capacity(), t) ==
        Measure::from_weights(g, w).as_capacity());
  CHECK(error_of([&] { mix(a, random_monotone(GroundSet(2), 1, 2), t); }) ==
        CapacityErrc::kGroundMismatch);
}

TEST_CASE("pushforward examples") {
  SplitMix64 rng(11);
  const GroundSet g(3);
  const Capacity v = random_monotone(g, 9, 5);
  CHECK(pushforward(PointMap::identity(g), v) == v);

  // Merge points 1 and 2 into point 1 of a two-point codomain.
  const PointMap merge(g, GroundSet(2), {0, 1, 1});
  CHECK(pushforward(merge, unanimity(Subset::of({1, 2}), g)) ==
        unanimity(Subset::of({1}), GroundSet(2)));

  CHECK_THROWS_AS(pushforward(PointMap::identity(GroundSet(2)), v), CapacityError);
}

TEST_CASE("pushforward is functorial") {
  SplitMix64 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    const GroundSet x(rng.between(1, 4)), y(rng.between(1, 4)), z(rng.between(1, 4));
    const Capacity v = random_monotone(x, rng.next(), 6);
    const PointMap f = random_point_map(rng, x, y, false);
    const PointMap h = random_point_map(rng, y, z, false);
    const Capacity pushed = pushforward(f, v);
    REQUIRE_NOTHROW(Capacity::from_table(y, pushed.table()));
    CHECK(pushforward(f.then(h), v) == pushforward(h, pushed));
  }
}

TEST_CASE("measure pushforward") {
  SplitMix64 rng(3);
  const GroundSet g(4);
  const Measure m = random_measure(rng, g, 7);
  CHECK(measure_pushforward(PointMap::identity(g), m) == m);
  const Measure all = measure_pushforward(PointMap::collapse(g), m);
  CHECK(all.weight(0) == Rat(1));
  const PointMap f(g, GroundSet(3), {2, 0, 2, 1});
  for (int x = 0; x < 4; ++x) {
    CHECK(measure_pushforward(f, Measure::point_mass(g, x)) ==
          Measure::point_mass(GroundSet(3), f(x)));
  }
  for (int trial = 0; trial < 100; ++trial) {
    const PointMap h = random_point_map(rng, g, GroundSet(rng.between(1, 5)), false);
    const Measure src = random_measure(rng, g, 9);
    const Measure p = measure_pushforward(h, src);
    Rat total;
    for (const Rat& w : p.weights()) total += w;
    CHECK(total == Rat(1));
    // Pf agrees with Mf on measures viewed as capacities.
    CHECK(p.as_capacity() == pushforward(h, src.as_capacity()));
  }
}

TEST_CASE("measures are validated") {
  const GroundSet g(2);
  CHECK(error_of([&] { Measure::from_weights(g, {q("1/2"), q("1/3")}); }) ==
        CapacityErrc::kBadMeasure);
  CHECK(error_of([&] { Measure::from_weights(g, {q("3/2"), q("-1/2")}); }) ==
        CapacityErrc::kBadMeasure);
  CHECK(error_of([&] { Measure::from_weights(g, {q("1")}); }) ==
        CapacityErrc::kBadMeasure);
}

TEST_CASE("random_monotone is deterministic and matches the reference stream") {
  const GroundSet g(3);
  CHECK(random_monotone(g, 7, 4) == random_monotone(g, 7, 4));
  // Frozen from tests/oracles/random_monotone_reference.py 3 7 4.
  const std::vector<Rat> golden{0, q("1/2"), 1, 1, q("3/4"), 1, 1, 1};
  CHECK(random_monotone(g, 7, 4).table() == golden);
  // ... and 4 123 5.
  const std::vector<Rat> golden4{0, q("1/5"), 0, q("4/5"), q("1/5"), q("2/5"),
                                 q("2/5"), q("4/5"), q("1/5"), q("1/5"), 1, 1,
                                 q("1/5"), q("2/5"), 1, 1};
  CHECK(random_monotone(GroundSet(4), 123, 5).table() == golden4);
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const Capacity v = random_monotone(GroundSet(1 + static_cast<int>(seed % 6)), seed, 3);
    CHECK_NOTHROW(Capacity::from_table(v.ground(), v.table()));
  }
}

TEST_CASE("balanced family validity") {
  BalancedFamily f{{Subset::of({0, 1}), Subset::of({1, 2}), Subset::of({0, 2})},
                   {q("1/2"), q("1/2"), q("1/2")}};
  CHECK(f.is_valid_within(Subset::of({0, 1, 2})));
  CHECK_FALSE(f.is_valid_within(Subset::of({0, 1})));
  f.weights[0] = q("2/3");
  CHECK_FALSE(f.is_valid_within(Subset::of({0, 1, 2})));
  f.weights[0] = q("-1/2");
  CHECK_FALSE(f.is_valid_within(Subset::of({0, 1, 2})));
}

}  // TEST_SUITE
