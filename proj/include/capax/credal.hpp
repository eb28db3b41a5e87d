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

#ifndef CAPAX_CREDAL_HPP
#define CAPAX_CREDAL_HPP

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "capax/capacity.hpp"
#include "capax/ground.hpp"
#include "capax/lp.hpp"
#include "capax/rng.hpp"

namespace capax {

enum class CredalErrc {
  kEmpty,
  kInfeasible,
  kCoreEmpty,
  kGroundMismatch,
  kNotExact,
  kBadConstraint,
};

class CredalError : public std::runtime_error {
 public:
  CredalError(CredalErrc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  CredalErrc code() const { return code_; }

 private:
  CredalErrc code_;
};

/// Nonempty closed convex set of probability measures on a finite ground set.
///
/// Three representations:
///  * vertices: the convex hull of a finite list of measures;
///  * constraints: {mu >= 0, mu(X) = 1, mu(A) >= bound_A} for listed A;
///  * image: the pushforward of another credal set along a point map, kept
///    as an evaluation oracle (no vertex enumeration).
///
/// Every representation answers support-function queries min/max mu(A).
class CredalSet {
 public:
  enum class Kind { kVertices, kConstraints, kImage };

  static CredalSet from_vertices(GroundSet g, std::vector<Measure> vertices);
  /// Throws CredalError(kInfeasible) if the system has no solution.
  static CredalSet from_bounds(GroundSet g, std::map<Subset, Rat> bounds);

  Kind kind() const { return kind_; }
  GroundSet ground() const { return ground_; }
  const std::vector<Measure>& vertices() const { return vertices_; }
  const std::map<Subset, Rat>& bounds() const { return bounds_; }
  /// For images: the map and the set it is applied to.
  const PointMap& map() const { return *map_; }
  const CredalSet& base() const { return *base_; }

  Rat min_mass(Subset a) const;
  Rat max_mass(Subset a) const;

 private:
  friend CredalSet credal_pushforward(const PointMap& f, const CredalSet& a);
  explicit CredalSet(GroundSet g) : ground_(g) {}

  Kind kind_ = Kind::kVertices;
  GroundSet ground_;
  std::vector<Measure> vertices_;
  std::map<Subset, Rat> bounds_;
  std::optional<PointMap> map_;
  std::shared_ptr<const CredalSet> base_;
};

/// l_X: the core of a balanced capacity as a constraint-form credal set.
/// Throws CredalError(kCoreEmpty) for unbalanced input.
CredalSet core_polytope(const Capacity& v);

/// s_X: A -> min over the set of mu(A).
Capacity lower_envelope(const CredalSet& a);
/// A -> max over the set of mu(A).
Capacity upper_envelope(const CredalSet& a);

/// cc(Pf). Vertex sets push each vertex (duplicates merged, order sorted);
/// other forms become an image oracle.
CredalSet credal_pushforward(const PointMap& f, const CredalSet& a);

/// The constraint-form set {mu : mu(A) >= lower envelope(A)} induced by a
/// credal set.
CredalSet induced_constraints(const CredalSet& a);

/// Equality as far as envelopes can see: lower and upper envelopes agree on
/// every subset.
bool envelopes_equal(const CredalSet& a, const CredalSet& b);

/// lower_envelope(core_polytope(v)) == v. Throws CredalError(kNotExact) when v
/// is not exact.
bool check_retraction(const Capacity& v);

/// lower_envelope(credal_pushforward(f, a)) == pushforward(f, lower_envelope(a)).
bool check_naturality(const PointMap& f, const CredalSet& a);

/// Vertex-form credal set with `count` random vertices (see random_measure).
CredalSet random_credal_set(SplitMix64& rng, GroundSet g, int count, int grid);

}  // namespace capax

#endif  // CAPAX_CREDAL_HPP
