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

#include "selftest.hpp"

#include <filesystem>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>
#include <vector>

#include "capax/classify.hpp"
#include "capax/credal.hpp"
#include "capax/lp.hpp"
#include "capax/monad.hpp"
#include "capax/text_format.hpp"

namespace capax::cli {

namespace {

constexpr const char* kDirac = R"(# Dirac capacity at point 1 of a three-point set
ground 3
v {0} = 0
v {1} = 1
v {2} = 0
v {0,1} = 1
v {0,2} = 0
v {1,2} = 1
)";

constexpr const char* kNuStar = R"(# balanced, not totally balanced
ground 4
v {0} = 0
v {1} = 0
v {2} = 0
v {3} = 0
v {0,1} = 2/5
v {0,2} = 2/5
v {1,2} = 2/5
v {0,3} = 0
v {1,3} = 0
v {2,3} = 0
v {0,1,2} = 1/2
v {0,1,3} = 2/5
v {0,2,3} = 2/5
v {1,2,3} = 2/5
)";

constexpr const char* kUnbalanced = R"(ground 2
v {0} = 9/10
v {1} = 9/10
)";

constexpr const char* kConvex = R"(# 1/2 u{0,1} + 1/3 u{2} + 1/6 u{0,1,2}
ground 3
v {0} = 0
v {1} = 0
v {2} = 1/3
v {0,1} = 1/2
v {0,2} = 1/3
v {1,2} = 1/3
)";

constexpr const char* kTwoVertex = R"(credal 3 vertices 2
m 0 = 1/2 1/2 0
m 1 = 0 1/2 1/2
)";

constexpr const char* kSecondOrder = R"(# lift of the convex fixture: Diracs weighted by the game
second-order 3 3
support 0
v {0} = 1
v {1} = 0
v {2} = 0
v {0,1} = 1
v {0,2} = 1
v {1,2} = 0
support 1
v {0} = 0
v {1} = 1
v {2} = 0
v {0,1} = 1
v {0,2} = 0
v {1,2} = 1
support 2
v {0} = 0
v {1} = 0
v {2} = 1
v {0,1} = 0
v {0,2} = 1
v {1,2} = 1
game
v {0} = 0
v {1} = 0
v {2} = 1/3
v {0,1} = 1/2
v {0,2} = 1/3
v {1,2} = 1/3
)";

struct Check {
  std::string name;
  std::string fixture;
  std::function<std::string(const std::string&)> run;  // "" on success
};

std::string flags(const ClassReport& r) {
  auto yn = [](bool b) { return b ? "yes" : "no"; };
  std::ostringstream os;
  os << yn(r.convex) << ',' << yn(r.exact) << ',' << yn(r.totally_balanced)
     << ',' << yn(r.balanced);
  return os.str();
}

std::function<std::string(const std::string&)> expect_classes(std::string want) {
  return [want](const std::string& text) -> std::string {
    const Capacity v = parse_game(text);
    const ClassReport r = classify_full(v);
    if (!verify_report(v, r)) return "witness failed re-verification";
    const std::string got = flags(r);
    return got == want ? "" : "classes " + got + ", expected " + want;
  };
}

std::string check_retraction_fixture(const std::string& text) {
  const Capacity v = parse_game(text);
  return check_retraction(v) ? "" : "lower envelope of the core differs";
}

std::string check_envelope_fixture(const std::string& text) {
  const CredalSet a = parse_credal(text);
  const Capacity low = lower_envelope(a);
  const Capacity want = parse_game(R"(ground 3
v {0} = 0
v {1} = 1/2
v {2} = 0
v {0,1} = 1/2
v {0,2} = 1/2
v {1,2} = 1/2
)");
  if (low != want) return "envelope differs from the expected table";
  if (!is_exact(low).holds) return "envelope is not exact";
  return "";
}

std::string check_naturality_fixture(const std::string& text) {
  const CredalSet a = parse_credal(text);
  const GroundSet g = a.ground();
  std::vector<int> merge(static_cast<std::size_t>(g.size()));
  for (int i = 0; i < g.size(); ++i) merge[static_cast<std::size_t>(i)] = i == 2 ? 0 : i;
  const int m = g.size() >= 3 ? g.size() - 1 : g.size();
  if (!check_naturality(PointMap(g, GroundSet(m), merge), a)) {
    return "naturality fails for the merge map";
  }
  if (!check_naturality(PointMap::collapse(g), a)) {
    return "naturality fails for the collapse map";
  }
  return "";
}

std::string check_unit_laws_fixture(const std::string& text) {
  const Capacity v = parse_game(text);
  if (monad_mul(unit_second(v)) != v) return "mu . eta_M != id";
  if (monad_mul(lift_unit(v)) != v) return "mu . M(eta) != id";
  return "";
}

std::string check_second_order_fixture(const std::string& text) {
  const SecondOrderCapacity c = parse_second_order(text);
  return monad_mul(c) == c.game() ? "" : "multiplication of a lifted game differs";
}

std::string check_duality(const std::string&) {
  LinearProgram lp;
  lp.variables.assign(4, VarKind::kNonnegative);
  lp.objective = {10, -57, -9, -24};
  lp.add_constraint({Rat(1, 2), Rat(-11, 2), Rat(-5, 2), 9}, Relation::kLessEqual, 0);
  lp.add_constraint({Rat(1, 2), Rat(-3, 2), Rat(-1, 2), 1}, Relation::kLessEqual, 0);
  lp.add_constraint({1, 0, 0, 0}, Relation::kLessEqual, 1);
  const LpOutcome out = solve(lp);
  if (out.status != LpStatus::kOptimal || out.value != Rat(1)) {
    return "cycling instance did not reach value 1";
  }
  if (!verify_outcome(lp, out)) return "certificate rejected";
  const LpOutcome dual = solve(dual_program(lp));
  if (dual.status != LpStatus::kOptimal || dual.value != out.value) {
    return "dual value differs";
  }
  return "";
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

const std::map<std::string, std::string>& bundled_fixtures() {
  static const std::map<std::string, std::string> fixtures{
      {"dirac.game", kDirac},
      {"nu_star.game", kNuStar},
      {"unbalanced.game", kUnbalanced},
      {"convex.game", kConvex},
      {"two_vertex.credal", kTwoVertex},
      {"lifted.second-order", kSecondOrder},
  };
  return fixtures;
}

int run_selftest(std::ostream& out, const std::optional<std::string>& fixture_dir) {
  const std::vector<Check> checks{
      {"chain", "dirac.game", expect_classes("yes,yes,yes,yes")},
      {"chain", "nu_star.game", expect_classes("no,no,no,yes")},
      {"chain", "unbalanced.game", expect_classes("no,no,no,no")},
      {"chain", "convex.game", expect_classes("yes,yes,yes,yes")},
      {"retraction", "dirac.game", check_retraction_fixture},
      {"retraction", "convex.game", check_retraction_fixture},
      {"envelope", "two_vertex.credal", check_envelope_fixture},
      {"naturality", "two_vertex.credal", check_naturality_fixture},
      {"unit-laws", "nu_star.game", check_unit_laws_fixture},
      {"unit-laws", "convex.game", check_unit_laws_fixture},
      {"monad-mul", "lifted.second-order", check_second_order_fixture},
      {"duality", "", check_duality},
  };
  out << "capax selftest\n";
  int failed = 0;
  for (const Check& c : checks) {
    std::string text;
    if (!c.fixture.empty()) {
      text = bundled_fixtures().at(c.fixture);
      if (fixture_dir) {
        const auto path = std::filesystem::path(*fixture_dir) / c.fixture;
        if (std::filesystem::exists(path)) text = read_file(path);
      }
    }
    std::string problem;
    try {
      problem = c.run(text);
    } catch (const std::exception& e) {
      problem = e.what();
    }
    const std::string label = c.name + (c.fixture.empty() ? "" : "/" + c.fixture);
    if (problem.empty()) {
      out << "  PASS  " << label << '\n';
    } else {
      ++failed;
      out << "  FAIL  " << label << ": " << problem << '\n';
    }
  }
  out << (checks.size() - static_cast<std::size_t>(failed)) << '/' << checks.size()
      << " checks passed\n";
  return failed == 0 ? 0 : 1;
}

}  // namespace capax::cli
