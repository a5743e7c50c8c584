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

#ifndef HARVEST_NODE_PATH_H_
#define HARVEST_NODE_PATH_H_

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace harvest {

enum class Axis { kChild, kPrecedingSibling, kFollowingSibling };

// One location step. `index` is the 1-based XPath position predicate among
// same-tag nodes on the step's axis; for sibling axes position 1 is the
// nearest sibling.
struct PathStep {
  Axis axis = Axis::kChild;
  std::string tag;
  std::optional<int> index;

  friend bool operator==(const PathStep&, const PathStep&) = default;
  friend auto operator<=>(const PathStep&, const PathStep&) = default;
};

// An XPath-like address of DOM elements: `/html/body/div[3]/p` when
// absolute, `div[1]/span[2]` or `preceding-sibling::div[1]/time[1]` when
// relative to a context node.
class NodePath {
 public:
  NodePath() = default;
  NodePath(bool absolute, std::vector<PathStep> steps)
      : absolute_(absolute), steps_(std::move(steps)) {}

  // Throws PathSyntaxError.
  static NodePath parse(std::string_view text);

  bool absolute() const { return absolute_; }
  bool empty() const { return steps_.empty(); }
  std::size_t depth() const { return steps_.size(); }
  const std::vector<PathStep>& steps() const { return steps_; }

  bool fully_indexed() const;

  // The path with its last step dropped.
  NodePath parent() const;

  // The path with the positional predicate of its last step removed, so it
  // matches every same-tag sibling of the addressed node.
  NodePath generalized() const;

  NodePath child(PathStep step) const;

  std::string str() const;

  friend bool operator==(const NodePath&, const NodePath&) = default;
  friend auto operator<=>(const NodePath&, const NodePath&) = default;

 private:
  bool absolute_ = true;
  std::vector<PathStep> steps_;
};

}  // namespace harvest

#endif  // HARVEST_NODE_PATH_H_
