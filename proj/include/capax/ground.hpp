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

#ifndef CAPAX_GROUND_HPP
#define CAPAX_GROUND_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "capax/rational.hpp"

namespace capax {

/// Largest supported ground set; capacities are dense 2^n tables.
inline constexpr int kMaxGroundSize = 16;

/// Finite ground set {0, ..., n-1}.
class GroundSet {
 public:
  explicit GroundSet(int n);

  int size() const { return n_; }
  /// Number of subsets, 2^n.
  std::size_t subset_count() const { return std::size_t{1} << n_; }
  std::uint32_t full_bits() const {
    return static_cast<std::uint32_t>(subset_count() - 1);
  }

  friend bool operator==(GroundSet, GroundSet) = default;

 private:
  int n_;
};

/// A subset of a ground set encoded as a bitmask: bit i set iff i is a member.
class Subset {
 public:
  constexpr Subset() = default;
  constexpr explicit Subset(std::uint32_t bits) : bits_(bits) {}

  static Subset empty() { return Subset(); }
  static Subset full(GroundSet g) { return Subset(g.full_bits()); }
  static Subset singleton(int i) { return Subset(std::uint32_t{1} << i); }
  static Subset of(std::initializer_list<int> points);

  constexpr std::uint32_t bits() const { return bits_; }
  std::size_t index() const { return bits_; }

  bool contains(int i) const { return (bits_ >> i) & 1U; }
  bool is_empty() const { return bits_ == 0; }
  bool is_subset_of(Subset other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  int cardinality() const;
  bool valid_for(GroundSet g) const { return bits_ <= g.full_bits(); }

  Subset with(int i) const { return Subset(bits_ | (std::uint32_t{1} << i)); }
  Subset without(int i) const {
    return Subset(bits_ & ~(std::uint32_t{1} << i));
  }
  Subset complement(GroundSet g) const { return Subset(g.full_bits() & ~bits_); }

  friend Subset operator|(Subset a, Subset b) { return Subset(a.bits_ | b.bits_); }
  friend Subset operator&(Subset a, Subset b) { return Subset(a.bits_ & b.bits_); }
  friend constexpr auto operator<=>(Subset, Subset) = default;

  /// Members in increasing order.
  std::vector<int> members() const;

  /// Brace form "{0,2}"; "{}" for the empty set.
  std::string str() const;
  /// Inverse of str(). Throws std::invalid_argument on malformed input or
  /// a point outside the ground set.
  static Subset parse(std::string_view text, GroundSet g);

 private:
  std::uint32_t bits_ = 0;
};

/// Characteristic vector of `a` over `g`.
std::vector<Rat> char_vector(Subset a, GroundSet g);

/// Total map between ground sets, given by the image of each point.
class PointMap {
 public:
  PointMap(GroundSet domain, GroundSet codomain, std::vector<int> image);

  static PointMap identity(GroundSet g);
  /// The map collapsing every point of `domain` onto the single point of a
  /// one-point codomain.
  static PointMap collapse(GroundSet domain);

  GroundSet domain() const { return domain_; }
  GroundSet codomain() const { return codomain_; }
  const std::vector<int>& image() const { return image_; }
  int operator()(int x) const { return image_[static_cast<std::size_t>(x)]; }

  bool is_surjective() const;

  /// `after` applied after this map.
  PointMap then(const PointMap& after) const;

  friend bool operator==(const PointMap&, const PointMap&) = default;

 private:
  GroundSet domain_;
  GroundSet codomain_;
  std::vector<int> image_;
};

/// {x : f(x) in b}.
Subset preimage(const PointMap& f, Subset b);

/// f(a) = {f(x) : x in a}.
Subset image_of(const PointMap& f, Subset a);

}  // namespace capax

#endif  // CAPAX_GROUND_HPP
