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

#ifndef CAPAX_TEXT_FORMAT_HPP
#define CAPAX_TEXT_FORMAT_HPP

#include <stdexcept>
#include <string>
#include <string_view>

#include "capax/capacity.hpp"
#include "capax/credal.hpp"
#include "capax/monad.hpp"

namespace capax {

/// Syntax error in a text file; `line()` is 1-based (0 when the problem is
/// not tied to a line, e.g. a missing header).
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& reason)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + reason
                                    : reason),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Game files:
//
//   # comment
//   ground 3
//   v {0} = 1/4
//   v {0,2} = 1/2
//
// Order is irrelevant, a repeated subset is a ParseError, and the values are
// validated as a capacity (CapacityError) after parsing.
Capacity parse_game(std::string_view text, InputMode mode = InputMode::kStrict);
std::string format_game(const Capacity& v);

// Measure files: header "measure n", then "m i = p/q" lines. Points that are
// not listed get weight 0.
Measure parse_measure(std::string_view text);
std::string format_measure(const Measure& m);

// Credal files. Vertex form:
//
//   credal 3 vertices 2
//   m 0 = 1/2 1/2 0
//   m 1 = 0 1/2 1/2
//
// Each "m" line is one vertex given by its n weights. Core form: header
// "credal n core-of" followed by a game body ("v" lines); the set is the core
// of that game and an empty core raises CredalError(kCoreEmpty).
CredalSet parse_credal(std::string_view text);
/// Image-form sets, and constraint sets whose bounds are not a complete
/// capacity table, cannot be written and raise CredalError(kBadConstraint).
std::string format_credal(const CredalSet& a);

// Second-order files:
//
//   second-order 2 2
//   support 0
//   v {0} = 1
//   v {1} = 0
//   support 1
//   ...
//   game
//   v {0} = 1/2
//   v {1} = 1/2
//
// Each section body is a game body in strict mode.
SecondOrderCapacity parse_second_order(std::string_view text);
std::string format_second_order(const SecondOrderCapacity& c);

}  // namespace capax

#endif  // CAPAX_TEXT_FORMAT_HPP
