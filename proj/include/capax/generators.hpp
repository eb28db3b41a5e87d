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

#ifndef CAPAX_GENERATORS_HPP
#define CAPAX_GENERATORS_HPP

#include <vector>

#include "capax/capacity.hpp"
#include "capax/ground.hpp"
#include "capax/rng.hpp"

namespace capax {

/// Measure with weights k_i / sum(k), k_i drawn from 0..grid (one point is
/// forced to 1 if every draw is zero).
Measure random_measure(SplitMix64& rng, GroundSet g, int grid);

/// Convex combination of `terms` unanimity games with random nonempty
/// carriers and integer weights in 1..grid. Always convex.
Capacity random_unanimity_mixture(SplitMix64& rng, GroundSet g, int terms,
                                  int grid);

/// Random total map. With `surjective`, requires |domain| >= |codomain| and
/// hits every codomain point.
PointMap random_point_map(SplitMix64& rng, GroundSet domain, GroundSet codomain,
                          bool surjective);

}  // namespace capax

#endif  // CAPAX_GENERATORS_HPP
