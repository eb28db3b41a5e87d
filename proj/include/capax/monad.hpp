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

#ifndef CAPAX_MONAD_HPP
#define CAPAX_MONAD_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "capax/capacity.hpp"

namespace capax {

class MonadError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Finitely supported capacity on the space of capacities over X: a list of
/// k distinct capacities S = (s_0, ..., s_{k-1}) and a weight game w on k
/// points, read as C(K) = w({i : s_i in K}).
class SecondOrderCapacity {
 public:
  /// Throws MonadError on an empty or repeated support, a support member on
  /// the wrong ground set, or a weight game whose size is not k.
  SecondOrderCapacity(GroundSet ground, std::vector<Capacity> support,
                      Capacity game);

  GroundSet ground() const { return ground_; }
  const std::vector<Capacity>& support() const { return support_; }
  const Capacity& game() const { return game_; }

  friend bool operator==(const SecondOrderCapacity&,
                         const SecondOrderCapacity&) = default;

 private:
  GroundSet ground_;
  std::vector<Capacity> support_;
  Capacity game_;
};

/// eta at MX: the Dirac second-order capacity at v.
SecondOrderCapacity unit_second(const Capacity& v);

/// M(eta_X)(v): support = the Diracs of X, weight game = v.
SecondOrderCapacity lift_unit(const Capacity& v);

/// mu_X(C)(F) = sup{t in [0,1] : C({c : c(F) >= t}) >= t}, evaluated exactly
/// by scanning the intervals between consecutive distinct support values.
Capacity monad_mul(const SecondOrderCapacity& c);

}  // namespace capax

#endif  // CAPAX_MONAD_HPP
