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

#include "capax/text_format.hpp"

#include <charconv>
#include <map>
#include <optional>
#include <sstream>
#include <vector>

namespace capax {

namespace {

struct Line {
  int number;
  std::string text;
};

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> out;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    std::string_view raw = text.substr(pos, end - pos);
    if (auto hash = raw.find('#'); hash != std::string_view::npos) {
      raw = raw.substr(0, hash);
    }
    std::string t = trim(raw);
    if (!t.empty()) out.push_back({number, std::move(t)});
    pos = end + 1;
  }
  return out;
}

std::vector<std::string> tokens(const std::string& s) {
  std::istringstream is(s);
  std::vector<std::string> out;
  for (std::string t; is >> t;) out.push_back(t);
  return out;
}

int parse_int(const std::string& tok, int line, const char* what) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw ParseError(line, std::string("expected ") + what + ", got '" + tok + "'");
  }
  return value;
}

Rat parse_rat(const std::string& tok, int line) {
  try {
    return Rat::parse(tok);
  } catch (const std::exception& e) {
    throw ParseError(line, e.what());
  }
}

GroundSet parse_ground(const std::string& tok, int line) {
  const int n = parse_int(tok, line, "a ground set size");
  try {
    return GroundSet(n);
  } catch (const std::out_of_range& e) {
    throw ParseError(line, e.what());
  }
}

// "<key> <lhs> = <rhs>": returns lhs and rhs with the key stripped.
std::pair<std::string, std::string> split_assignment(const Line& l,
                                                     std::string_view key) {
  if (l.text.rfind(key, 0) != 0 || l.text.size() <= key.size() ||
      (l.text[key.size()] != ' ' && l.text[key.size()] != '\t' &&
       l.text[key.size()] != '{')) {
    throw ParseError(l.number, "expected a '" + std::string(key) + "' line");
  }
  const auto eq = l.text.find('=');
  if (eq == std::string::npos) throw ParseError(l.number, "missing '='");
  return {trim(std::string_view(l.text).substr(key.size(), eq - key.size())),
          trim(std::string_view(l.text).substr(eq + 1))};
}

class GameBody {
 public:
  explicit GameBody(GroundSet g) : g_(g) {}

  void add(const Line& l) {
    auto [lhs, rhs] = split_assignment(l, "v");
    Subset a;
    try {
      a = Subset::parse(lhs, g_);
    } catch (const std::invalid_argument& e) {
      throw ParseError(l.number, e.what());
    }
    if (tokens(rhs).size() != 1) throw ParseError(l.number, "expected one value");
    Rat value = parse_rat(rhs, l.number);
    if (!values_.emplace(a, std::move(value)).second) {
      throw ParseError(l.number, "duplicate subset " + a.str());
    }
  }

  Capacity build(InputMode mode) const { return new_capacity(g_, values_, mode); }

 private:
  GroundSet g_;
  std::map<Subset, Rat> values_;
};

void write_body(std::ostream& os, const Capacity& v) {
  for (std::uint32_t bits = 1; bits <= v.ground().full_bits(); ++bits) {
    os << "v " << Subset(bits).str() << " = " << v(Subset(bits)) << '\n';
  }
}

const Line& header(const std::vector<Line>& lines) {
  if (lines.empty()) throw ParseError(0, "empty file");
  return lines.front();
}

}  // namespace

Capacity parse_game(std::string_view text, InputMode mode) {
  const auto lines = content_lines(text);
  const Line& h = header(lines);
  const auto head = tokens(h.text);
  if (head.size() != 2 || head[0] != "ground") {
    throw ParseError(h.number, "expected header 'ground n'");
  }
  GameBody body(parse_ground(head[1], h.number));
  for (std::size_t i = 1; i < lines.size(); ++i) body.add(lines[i]);
  return body.build(mode);
}

std::string format_game(const Capacity& v) {
  std::ostringstream os;
  os << "ground " << v.ground().size() << '\n';
  write_body(os, v);
  return os.str();
}

Measure parse_measure(std::string_view text) {
  const auto lines = content_lines(text);
  const Line& h = header(lines);
  const auto head = tokens(h.text);
  if (head.size() != 2 || head[0] != "measure") {
    throw ParseError(h.number, "expected header 'measure n'");
  }
  const GroundSet g = parse_ground(head[1], h.number);
  std::vector<Rat> weights(static_cast<std::size_t>(g.size()));
  std::vector<bool> seen(weights.size(), false);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    auto [lhs, rhs] = split_assignment(lines[i], "m");
    const int point = parse_int(lhs, lines[i].number, "a point index");
    if (point < 0 || point >= g.size()) {
      throw ParseError(lines[i].number, "point out of range");
    }
    if (seen[static_cast<std::size_t>(point)]) {
      throw ParseError(lines[i].number, "duplicate point");
    }
    seen[static_cast<std::size_t>(point)] = true;
    weights[static_cast<std::size_t>(point)] = parse_rat(rhs, lines[i].number);
  }
  return Measure::from_weights(g, std::move(weights));
}

std::string format_measure(const Measure& m) {
  std::ostringstream os;
  os << "measure " << m.ground().size() << '\n';
  for (int i = 0; i < m.ground().size(); ++i) {
    os << "m " << i << " = " << m.weight(i) << '\n';
  }
  return os.str();
}

CredalSet parse_credal(std::string_view text) {
  const auto lines = content_lines(text);
  const Line& h = header(lines);
  const auto head = tokens(h.text);
  if (head.size() < 3 || head[0] != "credal") {
    throw ParseError(h.number,
                     "expected header 'credal n vertices k' or 'credal n core-of'");
  }
  const GroundSet g = parse_ground(head[1], h.number);
  if (head[2] == "core-of" && head.size() == 3) {
    GameBody body(g);
    for (std::size_t i = 1; i < lines.size(); ++i) {
      const auto t = tokens(lines[i].text);
      if (t.size() == 2 && t[0] == "ground") {
        if (parse_int(t[1], lines[i].number, "a ground set size") != g.size()) {
          throw ParseError(lines[i].number, "ground size differs from header");
        }
        continue;
      }
      body.add(lines[i]);
    }
    return core_polytope(body.build(InputMode::kStrict));
  }
  if (head[2] != "vertices" || head.size() != 4) {
    throw ParseError(h.number, "unknown credal header");
  }
  const int k = parse_int(head[3], h.number, "a vertex count");
  if (k < 1) throw ParseError(h.number, "vertex count must be positive");
  std::vector<std::optional<Measure>> vertices(static_cast<std::size_t>(k));
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& l = lines[i];
    auto [lhs, rhs] = split_assignment(l, "m");
    const int index = parse_int(lhs, l.number, "a vertex index");
    if (index < 0 || index >= k) throw ParseError(l.number, "vertex index out of range");
    if (vertices[static_cast<std::size_t>(index)]) {
      throw ParseError(l.number, "duplicate vertex");
    }
    const auto values = tokens(rhs);
    if (values.size() != static_cast<std::size_t>(g.size())) {
      throw ParseError(l.number, "expected " + std::to_string(g.size()) + " weights");
    }
    std::vector<Rat> w;
    for (const std::string& v : values) w.push_back(parse_rat(v, l.number));
    vertices[static_cast<std::size_t>(index)] = Measure::from_weights(g, std::move(w));
  }
  std::vector<Measure> list;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (!vertices[i]) throw ParseError(0, "vertex " + std::to_string(i) + " missing");
    list.push_back(*vertices[i]);
  }
  return CredalSet::from_vertices(g, std::move(list));
}

std::string format_credal(const CredalSet& a) {
  std::ostringstream os;
  const int n = a.ground().size();
  switch (a.kind()) {
    case CredalSet::Kind::kVertices: {
      os << "credal " << n << " vertices " << a.vertices().size() << '\n';
      for (std::size_t i = 0; i < a.vertices().size(); ++i) {
        os << "m " << i << " =";
        for (const Rat& w : a.vertices()[i].weights()) os << ' ' << w;
        os << '\n';
      }
      return os.str();
    }
    case CredalSet::Kind::kConstraints: {
      std::map<Subset, Rat> values = a.bounds();
      try {
        const Capacity v = new_capacity(a.ground(), values, InputMode::kStrict);
        os << "credal " << n << " core-of\n";
        write_body(os, v);
        return os.str();
      } catch (const CapacityError& e) {
        throw CredalError(CredalErrc::kBadConstraint,
                          std::string("bounds are not a capacity: ") + e.what());
      }
    }
    case CredalSet::Kind::kImage:
      break;
  }
  throw CredalError(CredalErrc::kBadConstraint,
                    "image-form credal sets have no file representation");
}

SecondOrderCapacity parse_second_order(std::string_view text) {
  const auto lines = content_lines(text);
  const Line& h = header(lines);
  const auto head = tokens(h.text);
  if (head.size() != 3 || head[0] != "second-order") {
    throw ParseError(h.number, "expected header 'second-order n k'");
  }
  const GroundSet g = parse_ground(head[1], h.number);
  const GroundSet kset = parse_ground(head[2], h.number);
  const auto k = static_cast<std::size_t>(kset.size());

  std::vector<std::optional<GameBody>> support(k);
  std::optional<GameBody> game;
  GameBody* current = nullptr;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& l = lines[i];
    const auto t = tokens(l.text);
    if (t.size() == 2 && t[0] == "support") {
      const int index = parse_int(t[1], l.number, "a support index");
      if (index < 0 || static_cast<std::size_t>(index) >= k) {
        throw ParseError(l.number, "support index out of range");
      }
      auto& slot = support[static_cast<std::size_t>(index)];
      if (slot) throw ParseError(l.number, "duplicate support section");
      slot.emplace(g);
      current = &*slot;
    } else if (t.size() == 1 && t[0] == "game") {
      if (game) throw ParseError(l.number, "duplicate game section");
      game.emplace(kset);
      current = &*game;
    } else {
      if (current == nullptr) throw ParseError(l.number, "line outside a section");
      current->add(l);
    }
  }
  std::vector<Capacity> members;
  for (std::size_t i = 0; i < k; ++i) {
    if (!support[i]) throw ParseError(0, "support " + std::to_string(i) + " missing");
    members.push_back(support[i]->build(InputMode::kStrict));
  }
  if (!game) throw ParseError(0, "game section missing");
  return SecondOrderCapacity(g, std::move(members), game->build(InputMode::kStrict));
}

std::string format_second_order(const SecondOrderCapacity& c) {
  std::ostringstream os;
  os << "second-order " << c.ground().size() << ' ' << c.support().size() << '\n';
  for (std::size_t i = 0; i < c.support().size(); ++i) {
    os << "support " << i << '\n';
    write_body(os, c.support()[i]);
  }
  os << "game\n";
  write_body(os, c.game());
  return os.str();
}

}  // namespace capax
