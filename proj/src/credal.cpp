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

#include "capax/credal.hpp"

#include <algorithm>

#include "capax/classify.hpp"
#include "capax/generators.hpp"

namespace capax {

namespace {

LinearProgram bounds_program(GroundSet g, const std::map<Subset, Rat>& bounds,
                             Sense sense, Subset target) {
  const auto n = static_cast<std::size_t>(g.size());
  LinearProgram lp;
  lp.sense = sense;
  lp.variables.assign(n, VarKind::kNonnegative);
  lp.objective = char_vector(target, g);
  lp.add_constraint(std::vector<Rat>(n, Rat(1)), Relation::kEqual, 1);
  for (const auto& [a, bound] : bounds) {
    if (bound.sign() <= 0) continue;  // implied by mu >= 0
    lp.add_constraint(char_vector(a, g), Relation::kGreaterEqual, bound);
  }
  return lp;
}

SolveOptions solve_options(GroundSet g) {
  SolveOptions so;
  so.max_cells = std::max<std::size_t>(
      so.max_cells, static_cast<std::size_t>(g.size()) * g.subset_count());
  return so;
}

Rat optimize_bounds(GroundSet g, const std::map<Subset, Rat>& bounds,
                    Sense sense, Subset target) {
  const LinearProgram lp = bounds_program(g, bounds, sense, target);
  const LpOutcome out = solve(lp, solve_options(g));
  if (out.status != LpStatus::kOptimal || !verify_outcome(lp, out)) {
    throw CredalError(CredalErrc::kInfeasible,
                      "constraint-form credal set has no optimum");
  }
  return out.value;
}

void require_ground(GroundSet a, GroundSet b) {
  if (a != b) {
    throw CredalError(CredalErrc::kGroundMismatch, "ground sets differ");
  }
}

template <typename Eval>
Capacity envelope(GroundSet g, Eval eval) {
  std::vector<Rat> table(g.subset_count());
  table.back() = 1;
  for (std::uint32_t bits = 1; bits < g.full_bits(); ++bits) {
    table[bits] = eval(Subset(bits));
  }
  return Capacity::from_table(g, std::move(table));
}

}  // namespace

CredalSet CredalSet::from_vertices(GroundSet g, std::vector<Measure> vertices) {
  if (vertices.empty()) {
    throw CredalError(CredalErrc::kEmpty, "credal set needs a vertex");
  }
  for (const Measure& m : vertices) require_ground(m.ground(), g);
  CredalSet s(g);
  s.kind_ = Kind::kVertices;
  s.vertices_ = std::move(vertices);
  return s;
}

CredalSet CredalSet::from_bounds(GroundSet g, std::map<Subset, Rat> bounds) {
  for (const auto& [a, bound] : bounds) {
    if (a.is_empty() || !a.valid_for(g)) {
      throw CredalError(CredalErrc::kBadConstraint,
                        "bound on an empty or foreign subset");
    }
  }
  const LinearProgram lp =
      bounds_program(g, bounds, Sense::kMaximize, Subset::empty());
  const LpOutcome out = solve(lp, solve_options(g));
  if (out.status == LpStatus::kInfeasible) {
    throw CredalError(CredalErrc::kInfeasible, "constraints are infeasible");
  }
  CredalSet s(g);
  s.kind_ = Kind::kConstraints;
  s.bounds_ = std::move(bounds);
  return s;
}

Rat CredalSet::min_mass(Subset a) const {
  switch (kind_) {
    case Kind::kVertices: {
      Rat best = vertices_.front()(a);
      for (const Measure& m : vertices_) best = min(best, m(a));
      return best;
    }
    case Kind::kConstraints:
      return optimize_bounds(ground_, bounds_, Sense::kMinimize, a);
    case Kind::kImage:
      return base_->min_mass(preimage(*map_, a));
  }
  return Rat();
}

Rat CredalSet::max_mass(Subset a) const {
  switch (kind_) {
    case Kind::kVertices: {
      Rat best = vertices_.front()(a);
      for (const Measure& m : vertices_) best = max(best, m(a));
      return best;
    }
    case Kind::kConstraints:
      return optimize_bounds(ground_, bounds_, Sense::kMaximize, a);
    case Kind::kImage:
      return base_->max_mass(preimage(*map_, a));
  }
  return Rat();
}

CredalSet core_polytope(const Capacity& v) {
  if (!is_balanced(v, ClassifyOptions{kClassifyHardLimit}).holds) {
    throw CredalError(CredalErrc::kCoreEmpty, "capacity has an empty core");
  }
  std::map<Subset, Rat> bounds;
  const GroundSet g = v.ground();
  for (std::uint32_t bits = 1; bits < g.full_bits(); ++bits) {
    bounds.emplace(Subset(bits), v(Subset(bits)));
  }
  return CredalSet::from_bounds(g, std::move(bounds));
}

Capacity lower_envelope(const CredalSet& a) {
  return envelope(a.ground(), [&](Subset s) { return a.min_mass(s); });
}

Capacity upper_envelope(const CredalSet& a) {
  return envelope(a.ground(), [&](Subset s) { return a.max_mass(s); });
}

CredalSet credal_pushforward(const PointMap& f, const CredalSet& a) {
  require_ground(f.domain(), a.ground());
  if (a.kind() == CredalSet::Kind::kVertices) {
    std::vector<Measure> pushed;
    pushed.reserve(a.vertices().size());
    for (const Measure& m : a.vertices()) {
      pushed.push_back(measure_pushforward(f, m));
    }
    std::sort(pushed.begin(), pushed.end());
    pushed.erase(std::unique(pushed.begin(), pushed.end()), pushed.end());
    return CredalSet::from_vertices(f.codomain(), std::move(pushed));
  }
  CredalSet out(f.codomain());
  out.kind_ = CredalSet::Kind::kImage;
  if (a.kind() == CredalSet::Kind::kImage) {
    out.map_ = a.map().then(f);
    out.base_ = a.base_;
  } else {
    out.map_ = f;
    out.base_ = std::make_shared<const CredalSet>(a);
  }
  return out;
}

CredalSet induced_constraints(const CredalSet& a) {
  const Capacity low = lower_envelope(a);
  std::map<Subset, Rat> bounds;
  for (std::uint32_t bits = 1; bits < a.ground().full_bits(); ++bits) {
    bounds.emplace(Subset(bits), low(Subset(bits)));
  }
  return CredalSet::from_bounds(a.ground(), std::move(bounds));
}

bool envelopes_equal(const CredalSet& a, const CredalSet& b) {
  if (a.ground() != b.ground()) return false;
  return lower_envelope(a) == lower_envelope(b) &&
         upper_envelope(a) == upper_envelope(b);
}

bool check_retraction(const Capacity& v) {
  if (!is_exact(v, ClassifyOptions{kClassifyHardLimit}).holds) {
    throw CredalError(CredalErrc::kNotExact, "capacity is not exact");
  }
  return lower_envelope(core_polytope(v)) == v;
}

bool check_naturality(const PointMap& f, const CredalSet& a) {
  require_ground(f.domain(), a.ground());
  const Capacity lhs = lower_envelope(credal_pushforward(f, a));
  const Capacity rhs = pushforward(f, lower_envelope(a));
  return lhs == rhs;
}

CredalSet random_credal_set(SplitMix64& rng, GroundSet g, int count, int grid) {
  std::vector<Measure> vertices;
  vertices.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) vertices.push_back(random_measure(rng, g, grid));
  return CredalSet::from_vertices(g, std::move(vertices));
}

}  // namespace capax
