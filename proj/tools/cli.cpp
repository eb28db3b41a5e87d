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

#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "capax/classify.hpp"
#include "capax/credal.hpp"
#include "capax/monad.hpp"
#include "capax/search.hpp"
#include "capax/text_format.hpp"
#include "selftest.hpp"

namespace capax::cli {

namespace {

// Thrown for bad flag values found after CLI11 parsing.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot read '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

void write_family(std::ostream& os, const BalancedFamily& f) {
  for (std::size_t i = 0; i < f.sets.size(); ++i) {
    os << (i == 0 ? "" : ";") << f.sets[i].str() << ':' << f.weights[i];
  }
}

void print_report(std::ostream& out, const Capacity& v, const ClassReport& r,
                  bool machine) {
  if (machine) {
    out << "capax-classify v1\n";
    out << "flags convex=" << r.convex << " exact=" << r.exact
        << " totally-balanced=" << r.totally_balanced
        << " balanced=" << r.balanced << '\n';
  } else {
    out << "convex:" << yes_no(r.convex) << " exact:" << yes_no(r.exact)
        << " totally-balanced:" << yes_no(r.totally_balanced)
        << " balanced:" << yes_no(r.balanced) << '\n';
  }
  if (r.balanced_detail.core_point) {
    out << "core-point:";
    for (const Rat& w : r.balanced_detail.core_point->weights()) out << ' ' << w;
    out << '\n';
  } else if (r.balanced_detail.violation) {
    out << "unbalanced-family: ";
    write_family(out, *r.balanced_detail.violation);
    out << " value=" << r.balanced_detail.violation->weighted_value(v) << " > 1\n";
  }
  if (r.convex_witness) {
    const auto [a, b] = *r.convex_witness;
    out << "convexity-violation: A=" << a.str() << " B=" << b.str() << " v(AuB)+v(AnB)="
        << v(a | b) + v(a & b) << " < v(A)+v(B)=" << v(a) + v(b) << '\n';
  }
  const TotallyBalancedResult& tb = r.totally_balanced_detail;
  if (tb.failing && tb.violation) {
    out << "totally-balanced-violation: B=" << tb.failing->str() << " family ";
    write_family(out, *tb.violation);
    out << " value=" << tb.violation->weighted_value(v) << " > v(B)="
        << v(*tb.failing) << '\n';
  }
  const ExactResult& ex = r.exact_detail;
  if (ex.gap) {
    out << "exactness-gap: B=" << ex.gap->subset.str()
        << " core-min>=" << ex.gap->bound(v) << " > v(B)=" << v(ex.gap->subset)
        << " offset=" << ex.gap->offset << " sets=";
    write_family(out, BalancedFamily{ex.gap->sets, ex.gap->weights});
    out << '\n';
  } else if (!ex.holds) {
    out << "exactness-gap: core is empty\n";
  }
}

PointMap parse_map(const std::string& text, GroundSet domain,
                   std::optional<int> codomain) {
  std::vector<int> image;
  std::stringstream ss(text);
  for (std::string tok; std::getline(ss, tok, ',');) {
    try {
      std::size_t used = 0;
      image.push_back(std::stoi(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw ConfigError("bad --map entry '" + tok + "'");
    }
  }
  if (image.size() != static_cast<std::size_t>(domain.size())) {
    throw ConfigError("--map needs " + std::to_string(domain.size()) + " entries");
  }
  int m = codomain.value_or(0);
  if (!codomain) {
    for (int y : image) m = std::max(m, y + 1);
  }
  try {
    return PointMap(domain, GroundSet(m), std::move(image));
  } catch (const std::exception& e) {
    throw ConfigError(e.what());
  }
}

std::pair<std::uint64_t, std::uint64_t> parse_seed_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      std::size_t used = 0;
      const std::uint64_t a = std::stoull(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
      return {a, 1};
    }
    std::size_t used_a = 0, used_b = 0;
    const std::string lhs = text.substr(0, dots);
    const std::string rhs = text.substr(dots + 2);
    const std::uint64_t a = std::stoull(lhs, &used_a);
    const std::uint64_t b = std::stoull(rhs, &used_b);
    if (used_a != lhs.size() || used_b != rhs.size() || b < a) {
      throw std::invalid_argument(text);
    }
    return {a, b - a + 1};
  } catch (const std::exception&) {
    throw ConfigError("bad --seeds range '" + text + "' (expected A..B with A <= B)");
  }
}

bool write_text_file(const std::string& path, const std::string& body) {
  std::ofstream f(path, std::ios::binary);
  f << body;
  return static_cast<bool>(f);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"capax: exact capacities, cores, envelopes and the capacity monad",
               "capax"};
  app.require_subcommand(1);

  std::string path;
  std::string format = "text";

  auto* classify = app.add_subcommand("classify", "Classify a game file");
  int max_n = kDefaultClassifyLimit;
  classify->add_option("path", path, "game file")->required();
  classify->add_option("--max-n", max_n, "largest ground set to classify (<= 10)");
  classify->add_option("--format", format, "text or machine")
      ->check(CLI::IsMember({"text", "machine"}));

  auto* core = app.add_subcommand("core", "Print the core of a game as a credal file");
  core->add_option("path", path, "game file")->required();

  auto* envelope = app.add_subcommand("envelope", "Lower envelope of a credal file");
  bool upper = false;
  envelope->add_option("path", path, "credal file")->required();
  envelope->add_flag("--upper", upper, "print the upper envelope instead");

  auto* push = app.add_subcommand("push", "Push a game, measure or vertex credal set along a map");
  std::string map_text;
  std::optional<int> codomain;
  push->add_option("path", path, "input file")->required();
  push->add_option("--map", map_text, "image of each point, e.g. 0,1,1")->required();
  push->add_option("--codomain", codomain, "codomain size (default: max image + 1)");

  auto* mul = app.add_subcommand("monad-mul", "Multiply a second-order capacity file");
  mul->add_option("path", path, "second-order file")->required();

  auto* search = app.add_subcommand("search", "Search for class failures of the multiplication");
  std::string cls = "exact";
  int n = 3, k = 2, jobs = 1, grid = 4;
  std::string seeds = "0..0";
  std::string out_prefix;
  search->add_option("--class", cls, "exact or totally-balanced");
  search->add_option("--n", n, "ground set size (<= 6)");
  search->add_option("--k", k, "support size (<= 6)");
  search->add_option("--seeds", seeds, "inclusive seed range A..B");
  search->add_option("--jobs", jobs, "worker threads");
  search->add_option("--grid", grid, "value grid denominator");
  search->add_option("--out", out_prefix, "write PREFIX.report and PREFIX.log");

  auto* selftest = app.add_subcommand("selftest", "Run the bundled fixture suite");
  std::optional<std::string> fixture_dir;
  selftest->add_option("--fixture-dir", fixture_dir,
                       "directory whose files override bundled fixtures");

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (classify->parsed()) {
      if (max_n < 1 || max_n > kClassifyHardLimit) {
        throw ConfigError("--max-n must be in 1.." + std::to_string(kClassifyHardLimit));
      }
      const Capacity v = parse_game(read_input(path));
      const ClassReport r = classify_full(v, ClassifyOptions{max_n});
      print_report(out, v, r, format == "machine");
      return kExitOk;
    }
    if (core->parsed()) {
      const Capacity v = parse_game(read_input(path));
      const CredalSet c = core_polytope(v);
      const BalancedResult b = is_balanced(v);
      out << format_credal(c);
      out << "# core point:";
      for (const Rat& w : b.core_point->weights()) out << ' ' << w;
      out << '\n';
      return kExitOk;
    }
    if (envelope->parsed()) {
      const CredalSet a = parse_credal(read_input(path));
      out << format_game(upper ? upper_envelope(a) : lower_envelope(a));
      return kExitOk;
    }
    if (push->parsed()) {
      const std::string text = read_input(path);
      std::istringstream first(text);
      std::string keyword;
      for (std::string line; std::getline(first, line);) {
        std::istringstream ls(line.substr(0, line.find('#')));
        if (ls >> keyword) break;
      }
      if (keyword == "ground") {
        const Capacity v = parse_game(text);
        out << format_game(pushforward(parse_map(map_text, v.ground(), codomain), v));
      } else if (keyword == "measure") {
        const Measure m = parse_measure(text);
        out << format_measure(
            measure_pushforward(parse_map(map_text, m.ground(), codomain), m));
      } else if (keyword == "credal") {
        const CredalSet a = parse_credal(text);
        out << format_credal(
            credal_pushforward(parse_map(map_text, a.ground(), codomain), a));
      } else {
        throw ParseError(0, "unrecognized file type '" + keyword + "'");
      }
      return kExitOk;
    }
    if (mul->parsed()) {
      out << format_game(monad_mul(parse_second_order(read_input(path))));
      return kExitOk;
    }
    if (search->parsed()) {
      SearchConfig cfg;
      cfg.target = parse_target_class(cls);
      cfg.n = n;
      cfg.k = k;
      cfg.jobs = jobs;
      cfg.grid = grid;
      std::tie(cfg.seed_first, cfg.seed_count) = parse_seed_range(seeds);
      cfg.validate();
      const SearchReport report = closure_search(cfg);
      const std::string machine = machine_report(report);
      if (out_prefix.empty()) {
        out << machine;
      } else {
        if (!write_text_file(out_prefix + ".report", machine) ||
            !write_text_file(out_prefix + ".log", text_log(report))) {
          err << "capax: cannot write report files under '" << out_prefix << "'\n";
          return kExitFailure;
        }
        out << "wrote " << out_prefix << ".report and " << out_prefix << ".log ("
            << report.entries.size() << " seeds, " << report.counterexamples.size()
            << " counterexamples)\n";
      }
      return kExitOk;
    }
    if (selftest->parsed()) {
      return run_selftest(out, fixture_dir);
    }
  } catch (const ParseError& e) {
    err << "capax: parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const ConfigError& e) {
    err << "capax: configuration error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const SearchConfigError& e) {
    err << "capax: configuration error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const CapacityError& e) {
    err << "capax: validation error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const CredalError& e) {
    err << "capax: validation error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const MonadError& e) {
    err << "capax: validation error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const ClassifyError& e) {
    err << "capax: " << e.what() << '\n';
    return e.code() == ClassifyErrc::kTooLarge ? kExitConfig : kExitFailure;
  } catch (const std::exception& e) {
    err << "capax: error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitFailure;
}

}  // namespace capax::cli
