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

#include "capax/ground.hpp"

#include <bit>
#include <cctype>
#include <charconv>

namespace capax {

GroundSet::GroundSet(int n) : n_(n) {
  if (n < 1 || n > kMaxGroundSize) {
    throw std::out_of_range("ground set size " + std::to_string(n) +
                            " outside 1.." + std::to_string(kMaxGroundSize));
  }
}

Subset Subset::of(std::initializer_list<int> points) {
  Subset s;
  for (int p : points) s = s.with(p);
  return s;
}

int Subset::cardinality() const { return std::popcount(bits_); }

std::vector<int> Subset::members() const {
  std::vector<int> out;
  for (std::uint32_t b = bits_; b != 0; b &= b - 1) {
    out.push_back(std::countr_zero(b));
  }
  return out;
}

std::string Subset::str() const {
  std::string out = "{";
  bool first = true;
  for (int i : members()) {
    if (!first) out += ',';
    out += std::to_string(i);
    first = false;
  }
  return out + "}";
}

Subset Subset::parse(std::string_view text, GroundSet g) {
  auto fail = [&](const std::string& why) {
    return std::invalid_argument("bad subset '" + std::string(text) +
                                 "': " + why);
  };
  std::string compact;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) compact += c;
  }
  if (compact.size() < 2 || compact.front() != '{' || compact.back() != '}') {
    throw fail("expected braces");
  }
  std::string_view body(compact);
  body = body.substr(1, body.size() - 2);
  Subset s;
  while (!body.empty()) {
    auto comma = body.find(',');
    std::string_view tok = body.substr(0, comma);
    int value = -1;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size() || tok.empty()) {
      throw fail("expected a point index");
    }
    if (value < 0 || value >= g.size()) throw fail("point out of range");
    if (s.contains(value)) throw fail("repeated point");
    s = s.with(value);
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
    if (body.empty()) throw fail("trailing comma");
  }
  return s;
}

std::vector<Rat> char_vector(Subset a, GroundSet g) {
  std::vector<Rat> out(static_cast<std::size_t>(g.size()));
  for (int i = 0; i < g.size(); ++i) {
    if (a.contains(i)) out[static_cast<std::size_t>(i)] = 1;
  }
  return out;
}

PointMap::PointMap(GroundSet domain, GroundSet codomain, std::vector<int> image)
    : domain_(domain), codomain_(codomain), image_(std::move(image)) {
  if (image_.size() != static_cast<std::size_t>(domain_.size())) {
    throw std::invalid_argument("point map image has wrong length");
  }
  for (int y : image_) {
    if (y < 0 || y >= codomain_.size()) {
      throw std::invalid_argument("point map image entry out of range");
    }
  }
}

PointMap PointMap::identity(GroundSet g) {
  std::vector<int> image(static_cast<std::size_t>(g.size()));
  for (int i = 0; i < g.size(); ++i) image[static_cast<std::size_t>(i)] = i;
  return PointMap(g, g, std::move(image));
}

PointMap PointMap::collapse(GroundSet domain) {
  return PointMap(domain, GroundSet(1),
                  std::vector<int>(static_cast<std::size_t>(domain.size()), 0));
}

bool PointMap::is_surjective() const {
  Subset hit;
  for (int y : image_) hit = hit.with(y);
  return hit == Subset::full(codomain_);
}

PointMap PointMap::then(const PointMap& after) const {
  if (after.domain() != codomain_) {
    throw std::invalid_argument("point maps do not compose");
  }
  std::vector<int> image;
  image.reserve(image_.size());
  for (int y : image_) image.push_back(after(y));
  return PointMap(domain_, after.codomain(), std::move(image));
}

Subset preimage(const PointMap& f, Subset b) {
  Subset out;
  for (int x = 0; x < f.domain().size(); ++x) {
    if (b.contains(f(x))) out = out.with(x);
  }
  return out;
}

Subset image_of(const PointMap& f, Subset a) {
  Subset out;
  for (int x : a.members()) out = out.with(f(x));
  return out;
}

}  // namespace capax
