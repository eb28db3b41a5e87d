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

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "capax/text_format.hpp"
#include "cli.hpp"
#include "doctest.h"
#include "test_support.hpp"

namespace capax::cli {
namespace {

namespace fs = std::filesystem;

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run capax(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() {
    static int counter = 0;
    path_ = fs::temp_directory_path() /
            ("capax_cli_test_" + std::to_string(::getpid()) + "_" +
             std::to_string(counter++));
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string write(const std::string& name, const std::string& body) const {
    const fs::path p = path_ / name;
    std::ofstream(p) << body;
    return p.string();
  }
  std::string file(const std::string& name) const { return (path_ / name).string(); }
  std::string str() const { return path_.string(); }

 private:
  fs::path path_;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

TEST_SUITE("cli") {

TEST_CASE("classify reports flags and witnesses") {
  TempDir dir;
  const Run nu = capax({"classify", dir.write("nu.game", format_game(testing::nu_star()))});
  CHECK(nu.code == kExitOk);
  CHECK(nu.out.rfind("convex:no exact:no totally-balanced:no balanced:yes\n", 0) == 0);
  CHECK(nu.out.find("core-point:") != std::string::npos);
  CHECK(nu.out.find("totally-balanced-violation: B={0,1,2}") != std::string::npos);

  const Run d = capax({"classify", dir.write("d.game", format_game(dirac(0, GroundSet(3))))});
  CHECK(d.code == kExitOk);
  CHECK(d.out.rfind("convex:yes exact:yes totally-balanced:yes balanced:yes\n", 0) == 0);

  const Run m = capax({"classify", dir.file("nu.game"), "--format", "machine"});
  CHECK(m.out.find("flags convex=0 exact=0 totally-balanced=0 balanced=1") !=
        std::string::npos);
}

TEST_CASE("exit codes") {
  TempDir dir;
  const Run bad = capax({"classify", dir.write("bad.game", "ground 2\nv {0} = 1/0\nv {1} = 0\n")});
  CHECK(bad.code == kExitParse);
  CHECK(bad.err.find("line 2") != std::string::npos);
  CHECK(capax({"classify", dir.file("missing.game")}).code == kExitParse);
  CHECK(capax({"classify", dir.write("nm.game", "ground 2\nv {0} = 1/2\n")}).code ==
        kExitValidation);
  CHECK(capax({"classify", dir.write("big.game", format_game(dirac(0, GroundSet(9))))})
            .code == kExitConfig);
  CHECK(capax({"classify", dir.file("nm.game"), "--max-n", "12"}).code == kExitConfig);
  CHECK(capax({"frobnicate"}).code == kExitConfig);
  CHECK(capax({}).code == kExitConfig);
  CHECK(capax({"--help"}).code == kExitOk);
  CHECK(capax({"search", "--n", "12"}).code == kExitConfig);
  CHECK(capax({"search", "--seeds", "5..3"}).code == kExitConfig);
  CHECK(capax({"search", "--class", "convex"}).code == kExitConfig);
  CHECK(capax({"envelope", dir.write("unb.credal",
                                     "credal 2 core-of\nv {0} = 9/10\nv {1} = 9/10\n")})
            .code == kExitValidation);
}

TEST_CASE("envelope output") {
  TempDir dir;
  const Run one = capax({"envelope", dir.write("one.credal", "credal 3 vertices 1\nm 0 = 1/4 1/4 1/2\n")});
  CHECK(one.code == kExitOk);
  const Measure m = Measure::from_weights(GroundSet(3), {Rat(1, 4), Rat(1, 4), Rat(1, 2)});
  CHECK(parse_game(one.out) == m.as_capacity());

  const Run two = capax({"envelope", dir.write("two.credal",
                                               "credal 3 vertices 2\nm 0 = 1/2 1/2 0\n"
                                               "m 1 = 0 1/2 1/2\n")});
  const Capacity low = parse_game(two.out);
  CHECK(low(Subset::of({1})) == Rat(1, 2));
  CHECK(low(Subset::of({0})) == 0);
  CHECK(low(Subset::of({0, 2})) == Rat(1, 2));
}

TEST_CASE("push and monad-mul") {
  TempDir dir;
  const Capacity u = unanimity(Subset::of({1, 2}), GroundSet(3));
  const Run pushed = capax({"push", dir.write("u.game", format_game(u)), "--map", "0,1,1"});
  CHECK(pushed.code == kExitOk);
  CHECK(parse_game(pushed.out) == dirac(1, GroundSet(2)));
  CHECK(capax({"push", dir.file("u.game"), "--map", "0,1"}).code == kExitConfig);

  const Capacity v = random_monotone(GroundSet(3), 12, 5);
  const Run mul = capax({"monad-mul", dir.write("c.so", format_second_order(lift_unit(v)))});
  CHECK(mul.code == kExitOk);
  CHECK(parse_game(mul.out) == v);
}

TEST_CASE("search reports") {
  TempDir dir;
  const Run single = capax({"search", "--class", "exact", "--n", "3", "--k", "2",
                            "--seeds", "0..0"});
  CHECK(single.code == kExitOk);
  CHECK(single.out.find("summary seeds=1 ") != std::string::npos);

  const std::vector<std::string> base{"search", "--class", "totally-balanced", "--n", "3",
                                      "--k", "3", "--seeds", "0..19"};
  auto with = [&](std::vector<std::string> extra) {
    std::vector<std::string> args = base;
    args.insert(args.end(), extra.begin(), extra.end());
    return capax(args);
  };
  const Run j1 = with({"--jobs", "1"});
  const Run j8 = with({"--jobs", "8"});
  CHECK(j1.code == kExitOk);
  CHECK(j1.out == j8.out);

  const std::string prefix = dir.file("run");
  CHECK(with({"--out", prefix}).code == kExitOk);
  CHECK(slurp(prefix + ".report") == j1.out);
  CHECK(slurp(prefix + ".log").find("seeds") != std::string::npos);
}

TEST_CASE("selftest") {
  const Run a = capax({"selftest"});
  const Run b = capax({"selftest"});
  CHECK(a.code == kExitOk);
  CHECK(a.out == b.out);

  TempDir dir;
  dir.write("nu_star.game", "ground 4\nv {0} = 1/0\n");
  const Run broken = capax({"selftest", "--fixture-dir", dir.str()});
  CHECK(broken.code != kExitOk);
  CHECK(broken.out.find("FAIL  chain/nu_star.game") != std::string::npos);
}

}  // TEST_SUITE

}  // namespace
}  // namespace capax::cli
