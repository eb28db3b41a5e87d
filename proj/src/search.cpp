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

#include "capax/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <iomanip>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include "capax/credal.hpp"
#include "capax/rng.hpp"

namespace capax {

std::string to_string(TargetClass c) {
  return c == TargetClass::kExact ? "exact" : "totally-balanced";
}

TargetClass parse_target_class(const std::string& text) {
  if (text == "exact") return TargetClass::kExact;
  if (text == "totally-balanced" || text == "totally_balanced" || text == "tb") {
    return TargetClass::kTotallyBalanced;
  }
  throw SearchConfigError("unknown class '" + text + "'");
}

void SearchConfig::validate() const {
  auto fail = [](const std::string& what) { throw SearchConfigError(what); };
  if (n < 1 || n > kSearchMaxN) {
    fail("n must be in 1.." + std::to_string(kSearchMaxN));
  }
  if (k < 1 || k > kSearchMaxK) {
    fail("k must be in 1.." + std::to_string(kSearchMaxK));
  }
  if (n == 1 && k > 1) fail("k must be 1 when n = 1");
  if (grid < 1) fail("grid must be positive");
  if (jobs < 1) fail("jobs must be positive");
  if (max_attempts < 1) fail("max_attempts must be positive");
  if (seed_count > 0 && seed_first + (seed_count - 1) < seed_first) {
    fail("seed range overflows");
  }
}

std::string table_string(const Capacity& v) {
  std::string out;
  for (const Rat& x : v.table()) {
    if (!out.empty()) out += ',';
    out += x.str();
  }
  return out;
}

namespace {

bool in_class(const Capacity& v, TargetClass target) {
  const ClassifyOptions opts{kClassifyHardLimit};
  return target == TargetClass::kExact ? is_exact(v, opts).holds
                                       : is_totally_balanced(v, opts).holds;
}

// v(A) + v(B) <= v(A u B) for disjoint A, B. Necessary for total
// balancedness, and cheap enough to screen rejection draws.
bool superadditive(const Capacity& v) {
  const std::uint32_t full = v.ground().full_bits();
  for (std::uint32_t a = 1; a <= full; ++a) {
    const std::uint32_t rest = full & ~a;
    for (std::uint32_t b = rest; b != 0; b = (b - 1) & rest) {
      if (b < a) continue;
      if (v(Subset(a)) + v(Subset(b)) > v(Subset(a | b))) return false;
    }
  }
  return true;
}

// Draws capacities of the target class from a seed-specific generator.
class ClassSampler {
 public:
  ClassSampler(std::uint64_t seed, const SearchConfig& cfg)
      : seed_(seed), cfg_(cfg) {}

  Capacity draw(GroundSet g) {
    for (int attempt = 0; attempt < cfg_.max_attempts; ++attempt) {
      SplitMix64 rng = SplitMix64::substream(seed_, ++stream_);
      if (cfg_.target == TargetClass::kExact) {
        const int count = 1 + static_cast<int>(rng.below(3));
        Capacity v = lower_envelope(random_credal_set(rng, g, count, cfg_.grid));
        return v;
      }
      Capacity v = random_monotone(g, rng.next(), cfg_.grid);
      if (superadditive(v) && in_class(v, TargetClass::kTotallyBalanced)) return v;
    }
    throw SearchConfigError("no " + to_string(cfg_.target) +
                            " capacity found within the attempt budget");
  }

 private:
  std::uint64_t seed_;
  const SearchConfig& cfg_;
  std::uint64_t stream_ = 0;
};

struct SeedOutcome {
  SearchEntry entry;
  std::optional<Counterexample> counterexample;
};

SeedOutcome run_seed(std::uint64_t seed, const SearchConfig& cfg) {
  const GroundSet g(cfg.n);
  ClassSampler sampler(seed, cfg);
  std::vector<Capacity> support;
  int duplicates = 0;
  while (support.size() < static_cast<std::size_t>(cfg.k)) {
    Capacity v = sampler.draw(g);
    // Duplicates are redrawn from the next substream.
    if (std::find(support.begin(), support.end(), v) == support.end()) {
      support.push_back(std::move(v));
    } else if (++duplicates >= cfg.max_attempts) {
      throw SearchConfigError("cannot draw " + std::to_string(cfg.k) +
                              " distinct support capacities for seed " +
                              std::to_string(seed));
    }
  }
  Capacity game = sampler.draw(GroundSet(cfg.k));
  SecondOrderCapacity c(g, std::move(support), std::move(game));
  Capacity result = monad_mul(c);
  const ClassReport rep = classify_full(result, ClassifyOptions{kClassifyHardLimit});

  SeedOutcome out;
  out.entry = SearchEntry{seed,         rep.convex, rep.exact,
                          rep.totally_balanced, rep.balanced, false};
  out.entry.in_class = cfg.target == TargetClass::kExact ? rep.exact
                                                         : rep.totally_balanced;
  if (out.entry.in_class) return out;

  Counterexample ce{seed, std::move(c), result, Subset(), std::nullopt,
                    std::nullopt};
  if (cfg.target == TargetClass::kExact) {
    ce.failing = *rep.exact_detail.failing;
    ce.gap = rep.exact_detail.gap;
    ce.family = rep.exact_detail.empty_core;
  } else {
    ce.failing = *rep.totally_balanced_detail.failing;
    ce.family = rep.totally_balanced_detail.violation;
  }
  if (!reverify(ce, cfg.target)) {
    throw ClassifyError(ClassifyErrc::kInternalInconsistency,
                        "counterexample for seed " + std::to_string(seed) +
                            " failed re-verification");
  }
  out.counterexample = std::move(ce);
  return out;
}

// mu_X(C)(F) as the largest t in {0} u {s_i(F)} u {w(T) : all T} with
// w({i : s_i(F) >= t}) >= t.
Capacity multiply_by_candidates(const SecondOrderCapacity& c) {
  const GroundSet g = c.ground();
  const Capacity& w = c.game();
  std::vector<Rat> table(g.subset_count());
  for (std::uint32_t bits = 0; bits <= g.full_bits(); ++bits) {
    const Subset f(bits);
    std::set<Rat> candidates(w.table().begin(), w.table().end());
    for (const Capacity& s : c.support()) candidates.insert(s(f));
    Rat best;
    for (const Rat& t : candidates) {
      std::uint32_t members = 0;
      for (std::size_t i = 0; i < c.support().size(); ++i) {
        if (c.support()[i](f) >= t) members |= std::uint32_t{1} << i;
      }
      if (w(Subset(members)) >= t && t > best) best = t;
    }
    table[bits] = best;
  }
  return Capacity::from_table(g, std::move(table));
}

void write_family(std::ostream& os, const BalancedFamily& f) {
  for (std::size_t i = 0; i < f.sets.size(); ++i) {
    os << (i == 0 ? "" : ";") << f.sets[i].str() << ':' << f.weights[i];
  }
}

}  // namespace

bool reverify(const Counterexample& ce, TargetClass target) {
  const SecondOrderCapacity& c = ce.candidate;
  for (const Capacity& s : c.support()) {
    if (!in_class(s, target)) return false;
  }
  if (!in_class(c.game(), target)) return false;
  const Capacity recomputed = multiply_by_candidates(c);
  if (recomputed != ce.result || monad_mul(c) != ce.result) return false;
  const Subset full = Subset::full(ce.result.ground());
  if (ce.gap) {
    return ce.gap->subset == ce.failing && verify_core_gap(ce.result, *ce.gap);
  }
  if (!ce.family) return false;
  if (target == TargetClass::kExact && ce.failing != full) return false;
  return verify_balance_violation(ce.result, ce.failing, *ce.family);
}

SearchReport closure_search(const SearchConfig& config) {
  config.validate();
  const auto start = std::chrono::steady_clock::now();
  SearchReport report;
  report.config = config;
  const std::size_t count = static_cast<std::size_t>(config.seed_count);
  std::vector<std::optional<SeedOutcome>> slots(count);

  std::atomic<std::size_t> next{0};
  std::mutex error_mutex;
  std::exception_ptr error;
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        slots[i] = run_seed(config.seed_first + i, config);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        next = count;
      }
    }
  };
  const std::size_t threads =
      std::min<std::size_t>(static_cast<std::size_t>(config.jobs), count);
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();
  if (error) std::rethrow_exception(error);

  for (std::optional<SeedOutcome>& slot : slots) {
    report.entries.push_back(slot->entry);
    if (slot->counterexample) {
      report.counterexamples.push_back(std::move(*slot->counterexample));
    }
  }
  report.seconds = std::chrono::duration<double>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  return report;
}

std::string machine_report(const SearchReport& report) {
  const SearchConfig& cfg = report.config;
  std::ostringstream os;
  os << "capax-report v1\n";
  os << "config class=" << to_string(cfg.target) << " n=" << cfg.n
     << " k=" << cfg.k << " grid=" << cfg.grid
     << " seed-first=" << cfg.seed_first << " seed-count=" << cfg.seed_count
     << '\n';
  std::size_t in_class = 0;
  for (const SearchEntry& e : report.entries) {
    in_class += e.in_class ? 1 : 0;
    os << "entry seed=" << e.seed << " convex=" << e.convex
       << " exact=" << e.exact << " totally-balanced=" << e.totally_balanced
       << " balanced=" << e.balanced << " in-class=" << e.in_class << '\n';
  }
  for (const Counterexample& ce : report.counterexamples) {
    os << "counterexample seed=" << ce.seed << " failing=" << ce.failing.str()
       << " certificate=" << (ce.gap ? "core-bound" : "balanced-family")
       << '\n';
    const auto& support = ce.candidate.support();
    for (std::size_t i = 0; i < support.size(); ++i) {
      os << "support seed=" << ce.seed << " index=" << i
         << " table=" << table_string(support[i]) << '\n';
    }
    os << "game seed=" << ce.seed
       << " table=" << table_string(ce.candidate.game()) << '\n';
    os << "result seed=" << ce.seed << " table=" << table_string(ce.result)
       << '\n';
    if (ce.gap) {
      os << "witness seed=" << ce.seed << " offset=" << ce.gap->offset
         << " sets=";
      write_family(os, BalancedFamily{ce.gap->sets, ce.gap->weights});
      os << " bound=" << ce.gap->bound(ce.result) << '\n';
    } else if (ce.family) {
      os << "witness seed=" << ce.seed << " sets=";
      write_family(os, *ce.family);
      os << " value=" << ce.family->weighted_value(ce.result) << '\n';
    }
  }
  os << "summary seeds=" << report.entries.size() << " in-class=" << in_class
     << " counterexamples=" << report.counterexamples.size() << " verdict="
     << (report.counterexamples.empty() ? "inconclusive"
                                        : "counterexample-found")
     << '\n';
  return os.str();
}

std::string text_log(const SearchReport& report) {
  const SearchConfig& cfg = report.config;
  std::ostringstream os;
  os << "closure search: class " << to_string(cfg.target) << ", n = " << cfg.n
     << ", support size k = " << cfg.k << ", grid = " << cfg.grid << '\n';
  os << "seeds " << cfg.seed_first << " .. "
     << (cfg.seed_count == 0 ? std::string("(none)")
                             : std::to_string(cfg.seed_first + cfg.seed_count - 1))
     << ", " << cfg.jobs << " worker(s)\n";
  for (const SearchEntry& e : report.entries) {
    os << "  seed " << e.seed << ": result is "
       << (e.convex ? "convex, " : "") << (e.exact ? "exact, " : "")
       << (e.totally_balanced ? "totally balanced, " : "")
       << (e.balanced ? "balanced" : "unbalanced")
       << (e.in_class ? "" : "  <-- outside target class") << '\n';
  }
  for (const Counterexample& ce : report.counterexamples) {
    os << "counterexample at seed " << ce.seed << ": fails on "
       << ce.failing.str() << " (re-verified)\n";
  }
  if (report.counterexamples.empty()) {
    os << "no counterexample found; verdict inconclusive, since only finitely "
          "supported second-order capacities on a finite set were sampled.\n";
  } else {
    os << report.counterexamples.size()
       << " verified counterexample(s) to closure of the " << to_string(cfg.target)
       << " class under multiplication.\n";
  }
  os << std::fixed << std::setprecision(3) << "elapsed " << report.seconds
     << " s\n";
  return os.str();
}

}  // namespace capax
