// Copyright 2026 The Harvest Authors.
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

#include "harvest/node_path.h"

#include <cctype>
#include <charconv>

#include "harvest/errors.h"

namespace harvest {
namespace {

constexpr std::string_view kPreceding = "preceding-sibling::";
constexpr std::string_view kFollowing = "following-sibling::";
constexpr std::string_view kChild = "child::";

PathStep parse_step(std::string_view text, std::string_view whole) {
  auto fail = [&](const char* why) {
    return PathSyntaxError(std::string(why) + " in path '" + std::string(whole) + "'");
  };
  PathStep step;
  if (text.starts_with(kPreceding)) {
    step.axis = Axis::kPrecedingSibling;
    text.remove_prefix(kPreceding.size());
  } else if (text.starts_with(kFollowing)) {
    step.axis = Axis::kFollowingSibling;
    text.remove_prefix(kFollowing.size());
  } else if (text.starts_with(kChild)) {
    text.remove_prefix(kChild.size());
  }
  const std::size_t bracket = text.find('[');
  std::string_view name = text.substr(0, bracket);
  if (name.empty()) throw fail("empty step");
  for (char c : name) {
    const auto u = static_cast<unsigned char>(c);
    if (!(std::isalnum(u) || c == '-' || c == '_' || c == ':')) {
      throw fail("invalid tag name");
    }
    step.tag.push_back(static_cast<char>(std::tolower(u)));
  }
  if (bracket != std::string_view::npos) {
    if (text.back() != ']') throw fail("unterminated predicate");
    const std::string_view digits = text.substr(bracket + 1, text.size() - bracket - 2);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (ec != std::errc() || ptr != digits.data() + digits.size() || value < 1) {
      throw fail("invalid position predicate");
    }
    step.index = value;
  }
  return step;
}

}  // namespace

NodePath NodePath::parse(std::string_view text) {
  if (text.empty()) throw PathSyntaxError("empty path");
  const bool absolute = text.front() == '/';
  std::vector<PathStep> steps;
  std::size_t pos = absolute ? 1 : 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('/', pos), text.size());
    steps.push_back(parse_step(text.substr(pos, end - pos), text));
    pos = end + 1;
  }
  for (std::size_t i = 0; i < steps.size(); ++i) {
    if (steps[i].axis != Axis::kChild && (absolute || i > 0)) {
      throw PathSyntaxError("sibling axis only allowed as first relative step: '" +
                            std::string(text) + "'");
    }
  }
  return NodePath(absolute, std::move(steps));
}

bool NodePath::fully_indexed() const {
  for (const auto& s : steps_) {
    if (!s.index) return false;
  }
  return true;
}

NodePath NodePath::parent() const {
  NodePath p = *this;
  if (!p.steps_.empty()) p.steps_.pop_back();
  return p;
}

NodePath NodePath::generalized() const {
  NodePath p = *this;
  if (!p.steps_.empty()) p.steps_.back().index.reset();
  return p;
}

NodePath NodePath::child(PathStep step) const {
  NodePath p = *this;
  p.steps_.push_back(std::move(step));
  return p;
}

std::string NodePath::str() const {
  std::string out;
  for (std::size_t i = 0; i < steps_.size(); ++i) {
    if (absolute_ || i > 0) out.push_back('/');
    const auto& s = steps_[i];
    if (s.axis == Axis::kPrecedingSibling) out += kPreceding;
    if (s.axis == Axis::kFollowingSibling) out += kFollowing;
    out += s.tag;
    if (s.index) out += "[" + std::to_string(*s.index) + "]";
  }
  if (out.empty()) out = absolute_ ? "/" : ".";
  return out;
}

}  // namespace harvest
