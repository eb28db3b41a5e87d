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

// Candidate-scan oracle for the monad multiplication. The supremum of
// {t : w({i : s_i(F) >= t}) >= t} is reached at 0, at some s_i(F), or at
// some value of the weight game, so scanning that finite set and keeping
// the largest qualifying t gives the exact value.
#ifndef CAPAX_TESTS_ORACLES_MONAD_CANDIDATE_ORACLE_HPP
#define CAPAX_TESTS_ORACLES_MONAD_CANDIDATE_ORACLE_HPP

#include <vector>

#include "capax/monad.hpp"

namespace capax::oracle {

inline std::vector<Rat> multiply_by_scan(const SecondOrderCapacity& c) {
  const GroundSet g = c.ground();
  const Capacity& w = c.game();
  std::vector<Rat> out(g.subset_count());
  for (std::uint32_t f = 0; f <= g.full_bits(); ++f) {
    std::vector<Rat> candidates = w.table();
    candidates.push_back(Rat());
    for (const Capacity& s : c.support()) candidates.push_back(s(Subset(f)));
    Rat best;
    for (const Rat& t : candidates) {
      std::uint32_t members = 0;
      for (std::size_t i = 0; i < c.support().size(); ++i) {
        if (c.support()[i](Subset(f)) >= t) members |= 1U << i;
      }
      if (w(Subset(members)) >= t && best < t) best = t;
    }
    out[f] = best;
  }
  return out;
}

}  // namespace capax::oracle

#endif  // CAPAX_TESTS_ORACLES_MONAD_CANDIDATE_ORACLE_HPP
