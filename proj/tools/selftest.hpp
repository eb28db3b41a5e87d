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

#ifndef CAPAX_TOOLS_SELFTEST_HPP
#define CAPAX_TOOLS_SELFTEST_HPP

#include <iosfwd>
#include <map>
#include <optional>
#include <string>

namespace capax::cli {

/// Bundled fixture files by name.
const std::map<std::string, std::string>& bundled_fixtures();

/// Runs the fixture suite and prints one PASS/FAIL row per check. Files in
/// `fixture_dir` with a bundled fixture's name replace that fixture. Returns
/// 0 iff every check passes.
int run_selftest(std::ostream& out, const std::optional<std::string>& fixture_dir);

}  // namespace capax::cli

#endif  // CAPAX_TOOLS_SELFTEST_HPP
