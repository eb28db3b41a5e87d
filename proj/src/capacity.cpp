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

#include "capax/rng.hpp"

namespace capax {

namespace {

// In place: v(A) <- max(v(A), max_i v(A \ {i})), increasing code order.
void monotone_closure(GroundSet g, std::vector<Rat>& table) {
  for (std::uint32_t bits = 1; bits <= g.full_bits(); ++bits) {
    Subset a(bits);
    for (int i : a.members()) {
      const Rat& below = table[a.without(i).index()];
      if (table[a.index()] < below) table[a.index()] = below;
    }
  }
}

void require_same_ground(GroundSet a, GroundSet b, const char* what) {
  if (a != b) {
    throw CapacityError(CapacityErrc::kGroundMismatch,
                        std::string(what) + ": ground sets differ");
  }
}

}  // namespace

void validate_capacity_table(GroundSet g, const std::vector<Rat>& table) {
  if (table.size() != g.subset_count()) {
    throw CapacityError(CapacityErrc::kMissingSubset,
                        "capacity table has wrong size");
  }
  const Subset full = Subset::full(g);
  if (!table[0].is_zero()) {
    throw CapacityError(CapacityErrc::kBadNormalization,
                        "value of the empty set must be 0", Subset::empty());
  }
  if (table[full.index()] != Rat(1)) {
    throw CapacityError(CapacityErrc::kBadNormalization,
                        "value of the full set must be 1", full);
  }
  for (std::uint32_t bits = 1; bits < g.full_bits(); ++bits) {
    const Rat& v = table[bits];
    if (v.sign() < 0 || v > Rat(1)) {
      throw CapacityError(CapacityErrc::kOutOfRange,
                          "value of " + Subset(bits).str() + " outside [0,1]",
                          Subset(bits));
    }
  }
  for (std::uint32_t bits = 0; bits < g.full_bits(); ++bits) {
    Subset a(bits);
    for (int i = 0; i < g.size(); ++i) {
      if (a.contains(i)) continue;
      Subset b = a.with(i);
      if (table[b.index()] < table[a.index()]) {
        throw CapacityError(CapacityErrc::kNotMonotone,
                            "not monotone: v" + a.str() + " > v" + b.str(), a,
                            b);
      }
    }
  }
}

Capacity Capacity::from_table(GroundSet g, std::vector<Rat> table) {
  validate_capacity_table(g, table);
  return Capacity(g, std::move(table));
}

Capacity new_capacity(GroundSet g, const std::map<Subset, Rat>& assignments,
                      InputMode mode) {
  std::vector<Rat> table(g.subset_count());
  std::vector<bool> given(g.subset_count(), false);
  table.back() = 1;
  for (const auto& [a, v] : assignments) {
    if (!a.valid_for(g)) {
      throw CapacityError(CapacityErrc::kOutOfRange,
                          "subset outside the ground set", a);
    }
    table[a.index()] = v;
    given[a.index()] = true;
  }
  if (!table[0].is_zero() || table.back() != Rat(1)) {
    Subset bad = table[0].is_zero() ? Subset::full(g) : Subset::empty();
    throw CapacityError(CapacityErrc::kBadNormalization,
                        "v({}) must be 0 and v(X) must be 1", bad);
  }
  for (std::uint32_t bits = 1; bits < g.full_bits(); ++bits) {
    if (given[bits]) continue;
    if (mode == InputMode::kStrict) {
      throw CapacityError(CapacityErrc::kMissingSubset,
                          "no value for " + Subset(bits).str(), Subset(bits));
    }
  }
  if (mode == InputMode::kLenient) {
    // Closure over the given values only; the given values themselves are
    // checked for monotonicity afterwards.
    std::vector<Rat> closed = table;
    monotone_closure(g, closed);
    for (std::uint32_t bits = 1; bits < g.full_bits(); ++bits) {
      if (!given[bits]) table[bits] = closed[bits];
    }
  }
  return Capacity::from_table(g, std::move(table));
}

Measure Measure::from_weights(GroundSet g, std::vector<Rat> weights) {
  if (weights.size() != static_cast<std::size_t>(g.size())) {
    throw CapacityError(CapacityErrc::kBadMeasure,
                        "measure needs one weight per point");
  }
  Rat total;
  for (const Rat& w : weights) {
    if (w.sign() < 0) {
      throw CapacityError(CapacityErrc::kBadMeasure, "negative weight");
    }
    total += w;
  }
  if (total != Rat(1)) {
    throw CapacityError(CapacityErrc::kBadMeasure,
                        "weights sum to " + total.str() + ", not 1");
  }
  return Measure(g, std::move(weights));
}

Measure Measure::point_mass(GroundSet g, int x) {
  std::vector<Rat> w(static_cast<std::size_t>(g.size()));
  w.at(static_cast<std::size_t>(x)) = 1;
  return Measure(g, std::move(w));
}

Rat Measure::operator()(Subset a) const {
  Rat total;
  for (int i : a.members()) total += weights_[static_cast<std::size_t>(i)];
  return total;
}

Capacity Measure::as_capacity() const {
  std::vector<Rat> table(ground_.subset_count());
  for (std::uint32_t bits = 1; bits <= ground_.full_bits(); ++bits) {
    // Add the lowest point's weight to the value of the rest.
    Subset a(bits);
    int low = a.members().front();
    table[bits] = table[a.without(low).index()] +
                  weights_[static_cast<std::size_t>(low)];
  }
  return Capacity::from_table(ground_, std::move(table));
}

bool BalancedFamily::is_valid_within(Subset b) const {
  if (sets.size() != weights.size()) return false;
  std::vector<Rat> cover(32);
  for (std::size_t k = 0; k < sets.size(); ++k) {
    if (weights[k].sign() < 0 || !sets[k].is_subset_of(b)) return false;
    for (int i : sets[k].members()) cover[static_cast<std::size_t>(i)] += weights[k];
  }
  for (const Rat& c : cover) {
    if (c > Rat(1)) return false;
  }
  return true;
}

Rat BalancedFamily::weighted_value(const Capacity& v) const {
  Rat total;
  for (std::size_t k = 0; k < sets.size(); ++k) total += weights[k] * v(sets[k]);
  return total;
}

Capacity dirac(int x, GroundSet g) {
  if (x < 0 || x >= g.size()) {
    throw CapacityError(CapacityErrc::kOutOfRange, "point outside ground set");
  }
  return unanimity(Subset::singleton(x), g);
}

Capacity unanimity(Subset carrier, GroundSet g) {
  if (carrier.is_empty()) {
    throw CapacityError(CapacityErrc::kEmptyCarrier,
                        "unanimity carrier must be nonempty");
  }
  if (!carrier.valid_for(g)) {
    throw CapacityError(CapacityErrc::kOutOfRange,
                        "carrier outside ground set", carrier);
  }
  std::vector<Rat> table(g.subset_count());
  for (std::uint32_t bits = 0; bits <= g.full_bits(); ++bits) {
    if (carrier.is_subset_of(Subset(bits))) table[bits] = 1;
  }
  return Capacity::from_table(g, std::move(table));
}

Capacity mix(const Capacity& a, const Capacity& b, const Rat& t) {
  require_same_ground(a.ground(), b.ground(), "mix");
  if (t.sign() < 0 || t > Rat(1)) {
    throw CapacityError(CapacityErrc::kOutOfRange,
                        "mixing weight outside [0,1]");
  }
  const Rat s = Rat(1) - t;
  std::vector<Rat> table(a.table().size());
  for (std::size_t i = 0; i < table.size(); ++i) {
    table[i] = t * a.table()[i] + s * b.table()[i];
  }
  return Capacity::from_table(a.ground(), std::move(table));
}

Capacity pushforward(const PointMap& f, const Capacity& v) {
  require_same_ground(f.domain(), v.ground(), "pushforward");
  const GroundSet y = f.codomain();
  std::vector<Rat> table(y.subset_count());
  for (std::uint32_t bits = 0; bits <= y.full_bits(); ++bits) {
    table[bits] = v(preimage(f, Subset(bits)));
  }
  return Capacity::from_table(y, std::move(table));
}

Measure measure_pushforward(const PointMap& f, const Measure& m) {
  require_same_ground(f.domain(), m.ground(), "measure pushforward");
  std::vector<Rat> w(static_cast<std::size_t>(f.codomain().size()));
  for (int x = 0; x < f.domain().size(); ++x) {
    w[static_cast<std::size_t>(f(x))] += m.weight(x);
  }
  return Measure::from_weights(f.codomain(), std::move(w));
}

Capacity random_monotone(GroundSet g, std::uint64_t seed, int grid) {
  if (grid < 1) {
    throw CapacityError(CapacityErrc::kOutOfRange, "grid must be positive");
  }
  SplitMix64 rng(seed);
  std::vector<Rat> table(g.subset_count());
  for (std::uint32_t bits = 1; bits < g.full_bits(); ++bits) {
    long k = static_cast<long>(rng.below(static_cast<std::uint64_t>(grid) + 1));
    table[bits] = Rat(k, grid);
  }
  table.back() = 1;
  monotone_closure(g, table);
  return Capacity::from_table(g, std::move(table));
}

}  // namespace capax
