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

#include "capax/monad.hpp"

#include <algorithm>

namespace capax {

SecondOrderCapacity::SecondOrderCapacity(GroundSet ground,
                                         std::vector<Capacity> support,
                                         Capacity game)
    : ground_(ground), support_(std::move(support)), game_(std::move(game)) {
  if (support_.empty()) throw MonadError("second-order support is empty");
  if (game_.ground().size() != static_cast<int>(support_.size())) {
    throw MonadError("weight game size differs from support size");
  }
  for (std::size_t i = 0; i < support_.size(); ++i) {
    if (support_[i].ground() != ground_) {
      throw MonadError("support capacity on a different ground set");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (support_[i] == support_[j]) {
        throw MonadError("support entries " + std::to_string(j) + " and " +
                         std::to_string(i) + " coincide");
      }
    }
  }
}

SecondOrderCapacity unit_second(const Capacity& v) {
  return SecondOrderCapacity(v.ground(), {v}, dirac(0, GroundSet(1)));
}

SecondOrderCapacity lift_unit(const Capacity& v) {
  const GroundSet g = v.ground();
  std::vector<Capacity> support;
  support.reserve(static_cast<std::size_t>(g.size()));
  for (int x = 0; x < g.size(); ++x) support.push_back(dirac(x, g));
  return SecondOrderCapacity(g, std::move(support), v);
}

Capacity monad_mul(const SecondOrderCapacity& c) {
  const GroundSet g = c.ground();
  const auto k = c.support().size();
  const Capacity& w = c.game();
  std::vector<Rat> table(g.subset_count());
  std::vector<const Rat*> values(k);
  for (std::uint32_t bits = 0; bits <= g.full_bits(); ++bits) {
    const Subset f(bits);
    for (std::size_t i = 0; i < k; ++i) values[i] = &c.support()[i](f);

    std::vector<Rat> levels;
    for (const Rat* v : values) {
      if (v->sign() > 0) levels.push_back(*v);
    }
    std::sort(levels.begin(), levels.end());
    levels.erase(std::unique(levels.begin(), levels.end()), levels.end());

    // On (levels[j-1], levels[j]] the set {i : s_i(F) >= t} is fixed; its
    // weight caps t there.
    Rat best;
    Rat lower;
    for (const Rat& top : levels) {
      std::uint32_t members = 0;
      for (std::size_t i = 0; i < k; ++i) {
        if (*values[i] >= top) members |= std::uint32_t{1} << i;
      }
      const Rat candidate = min(top, w(Subset(members)));
      if (candidate > lower && candidate > best) best = candidate;
      lower = top;
    }
    table[bits] = std::move(best);
  }
  return Capacity::from_table(g, std::move(table));
}

}  // namespace capax
