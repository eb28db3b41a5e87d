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

#include "capax/generators.hpp"

#include <numeric>
#include <stdexcept>
#include <utility>

namespace capax {

Measure random_measure(SplitMix64& rng, GroundSet g, int grid) {
  std::vector<long> draws(static_cast<std::size_t>(g.size()));
  long total = 0;
  for (long& d : draws) {
    d = static_cast<long>(rng.below(static_cast<std::uint64_t>(grid) + 1));
    total += d;
  }
  if (total == 0) {
    draws[rng.below(draws.size())] = 1;
    total = 1;
  }
  std::vector<Rat> w;
  w.reserve(draws.size());
  for (long d : draws) w.emplace_back(d, total);
  return Measure::from_weights(g, std::move(w));
}

Capacity random_unanimity_mixture(SplitMix64& rng, GroundSet g, int terms,
                                  int grid) {
  std::vector<Rat> table(g.subset_count());
  std::vector<std::pair<Subset, long>> parts;
  long total = 0;
  for (int t = 0; t < terms; ++t) {
    Subset carrier(static_cast<std::uint32_t>(1 + rng.below(g.full_bits())));
    long weight = 1 + static_cast<long>(rng.below(static_cast<std::uint64_t>(grid)));
    parts.emplace_back(carrier, weight);
    total += weight;
  }
  for (std::uint32_t bits = 1; bits <= g.full_bits(); ++bits) {
    long hit = 0;
    for (const auto& [carrier, weight] : parts) {
      if (carrier.is_subset_of(Subset(bits))) hit += weight;
    }
    table[bits] = Rat(hit, total);
  }
  return Capacity::from_table(g, std::move(table));
}

PointMap random_point_map(SplitMix64& rng, GroundSet domain, GroundSet codomain,
                          bool surjective) {
  const int n = domain.size();
  const int m = codomain.size();
  std::vector<int> image(static_cast<std::size_t>(n));
  if (!surjective) {
    for (int& y : image) y = rng.between(0, m - 1);
    return PointMap(domain, codomain, std::move(image));
  }
  if (n < m) throw std::invalid_argument("no surjection onto a larger set");
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  for (int i = n - 1; i > 0; --i) {
    std::swap(order[static_cast<std::size_t>(i)],
              order[static_cast<std::size_t>(rng.between(0, i))]);
  }
  for (int k = 0; k < n; ++k) {
    image[static_cast<std::size_t>(order[static_cast<std::size_t>(k)])] =
        k < m ? k : rng.between(0, m - 1);
  }
  return PointMap(domain, codomain, std::move(image));
}

}  // namespace capax
