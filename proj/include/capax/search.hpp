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

#ifndef CAPAX_SEARCH_HPP
#define CAPAX_SEARCH_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "capax/classify.hpp"
#include "capax/monad.hpp"

namespace capax {

class SearchConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class TargetClass { kExact, kTotallyBalanced };

std::string to_string(TargetClass c);
/// "exact" or "totally-balanced" (also accepts "totally_balanced").
TargetClass parse_target_class(const std::string& text);

inline constexpr int kSearchMaxN = 6;
inline constexpr int kSearchMaxK = 6;

struct SearchConfig {
  int n = 3;
  int k = 2;
  TargetClass target = TargetClass::kExact;
  std::uint64_t seed_first = 0;
  std::uint64_t seed_count = 0;
  int grid = 4;
  /// Worker threads; the report does not depend on it.
  int jobs = 1;
  /// Rejection-sampling budget per generated capacity.
  int max_attempts = 20000;

  /// Throws SearchConfigError when a field is out of range.
  void validate() const;
};

struct SearchEntry {
  std::uint64_t seed = 0;
  bool convex = false;
  bool exact = false;
  bool totally_balanced = false;
  bool balanced = false;
  bool in_class = false;
};

/// A second-order capacity whose components lie in the target class while
/// its multiplication does not, together with the witness for the failure.
struct Counterexample {
  std::uint64_t seed = 0;
  SecondOrderCapacity candidate;
  Capacity result;
  Subset failing;
  /// Totally balanced target, or exact target with an empty core: a
  /// family within `failing` worth more than result(failing).
  std::optional<BalancedFamily> family;
  /// Exact target with a nonempty core: a bound proving the core minimum
  /// of mu(failing) exceeds result(failing).
  std::optional<CoreBound> gap;
};

struct SearchReport {
  SearchConfig config;
  std::vector<SearchEntry> entries;
  std::vector<Counterexample> counterexamples;
  double seconds = 0.0;
};

/// Builds, per seed, k distinct capacities of the target class and a weight
/// game of that class on k points, multiplies, and classifies the result.
/// Exact capacities are lower envelopes of random vertex credal sets; totally
/// balanced ones are random_monotone draws filtered by the predicate. Every
/// counterexample is re-verified before it is reported.
SearchReport closure_search(const SearchConfig& config);

/// Independent re-check: component classes, the multiplication (recomputed
/// by a candidate scan), and the witness arithmetic.
bool reverify(const Counterexample& ce, TargetClass target);

/// Deterministic line-delimited summary ("capax-report v1").
std::string machine_report(const SearchReport& report);
/// Human-readable log, including timings.
std::string text_log(const SearchReport& report);

/// Comma-separated values of a capacity in subset-code order.
std::string table_string(const Capacity& v);

}  // namespace capax

#endif  // CAPAX_SEARCH_HPP
