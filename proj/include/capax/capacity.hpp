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

#ifndef CAPAX_CAPACITY_HPP
#define CAPAX_CAPACITY_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "capax/ground.hpp"
#include "capax/rational.hpp"

namespace capax {

enum class CapacityErrc {
  kMissingSubset,
  kNotMonotone,
  kOutOfRange,
  kBadNormalization,
  kGroundMismatch,
  kEmptyCarrier,
  kBadMeasure,
};

/// Raised when data does not describe a valid capacity or measure. The
/// offending subsets are attached where there is one (for kNotMonotone,
/// `first` is contained in `second` but has the larger value).
class CapacityError : public std::invalid_argument {
 public:
  CapacityError(CapacityErrc code, const std::string& what,
                std::optional<Subset> first = std::nullopt,
                std::optional<Subset> second = std::nullopt)
      : std::invalid_argument(what), code_(code), first_(first), second_(second) {}

  CapacityErrc code() const { return code_; }
  std::optional<Subset> first() const { return first_; }
  std::optional<Subset> second() const { return second_; }

 private:
  CapacityErrc code_;
  std::optional<Subset> first_;
  std::optional<Subset> second_;
};

/// Normed monotone set function on a finite ground set, stored as a dense
/// table indexed by subset code. Immutable once built; every instance has
/// passed validation: v(empty) = 0, v(full) = 1, values in [0,1], monotone.
class Capacity {
 public:
  /// Validates a full 2^n table.
  static Capacity from_table(GroundSet g, std::vector<Rat> table);

  GroundSet ground() const { return ground_; }
  const Rat& operator()(Subset a) const { return table_[a.index()]; }
  const std::vector<Rat>& table() const { return table_; }

  friend bool operator==(const Capacity&, const Capacity&) = default;

 private:
  Capacity(GroundSet g, std::vector<Rat> table)
      : ground_(g), table_(std::move(table)) {}

  GroundSet ground_;
  std::vector<Rat> table_;
};

/// Checks the capacity axioms on a raw table and throws CapacityError on the
/// first violation (normalization, then range, then monotonicity).
void validate_capacity_table(GroundSet g, const std::vector<Rat>& table);

enum class InputMode {
  /// Every nonempty proper subset must be assigned.
  kStrict,
  /// Unassigned subsets take the largest value assigned to one of their
  /// subsets (monotone closure of the given data).
  kLenient,
};

/// Builds a capacity from explicit assignments. The empty and full sets may
/// be omitted; when present they must equal 0 and 1.
Capacity new_capacity(GroundSet g, const std::map<Subset, Rat>& assignments,
                      InputMode mode = InputMode::kStrict);

/// Probability measure on a finite ground set.
class Measure {
 public:
  /// Throws CapacityError(kBadMeasure) unless weights are nonnegative and sum
  /// to one.
  static Measure from_weights(GroundSet g, std::vector<Rat> weights);
  static Measure point_mass(GroundSet g, int x);

  GroundSet ground() const { return ground_; }
  const std::vector<Rat>& weights() const { return weights_; }
  const Rat& weight(int i) const { return weights_[static_cast<std::size_t>(i)]; }
  /// Mass of a subset.
  Rat operator()(Subset a) const;

  Capacity as_capacity() const;

  friend bool operator==(const Measure&, const Measure&) = default;
  friend auto operator<=>(const Measure& a, const Measure& b) {
    return a.weights_ <=> b.weights_;
  }

 private:
  Measure(GroundSet g, std::vector<Rat> weights)
      : ground_(g), weights_(std::move(weights)) {}

  GroundSet ground_;
  std::vector<Rat> weights_;
};

/// Nonnegative weights on a list of subsets. Used as the witness that a
/// capacity violates (total) balancedness: when every set lies inside `b`,
/// the weighted cover of each point of `b` is at most one, and the weighted
/// value exceeds v(b).
struct BalancedFamily {
  std::vector<Subset> sets;
  std::vector<Rat> weights;

  /// Weights nonnegative, every set inside `b`, and each point of `b`
  /// covered with total weight at most one.
  bool is_valid_within(Subset b) const;
  Rat weighted_value(const Capacity& v) const;
};

/// eta: full mass at x.
Capacity dirac(int x, GroundSet g);

/// v(A) = 1 if carrier is contained in A, else 0.
Capacity unanimity(Subset carrier, GroundSet g);

/// Pointwise t*a + (1-t)*b for t in [0,1].
Capacity mix(const Capacity& a, const Capacity& b, const Rat& t);

/// Mf: result(B) = v(f^-1(B)).
Capacity pushforward(const PointMap& f, const Capacity& v);

/// Pf: weight of y is the total weight of its fibre.
Measure measure_pushforward(const PointMap& f, const Measure& m);

/// Deterministic random capacity. One value from {0, 1/grid, ..., 1} is drawn
/// per nonempty proper subset in increasing code order (SplitMix64(seed),
/// value = below(grid + 1) / grid), the full set gets 1, and the result is
/// the monotone closure v(A) = max over B inside A of raw(B).
Capacity random_monotone(GroundSet g, std::uint64_t seed, int grid);

}  // namespace capax

#endif  // CAPAX_CAPACITY_HPP
