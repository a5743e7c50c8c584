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

#ifndef HARVEST_DOM_H_
#define HARVEST_DOM_H_

#include <cstddef>
#include <deque>
#include <functional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "harvest/node_path.h"
#include "harvest/url.h"

namespace harvest {

enum class NodeType { kDocument, kElement, kText, kComment };

struct Attribute {
  std::string name;
  std::string value;
};

// A DOM node. Nodes are owned by their Document and never move, so raw
// pointers to them stay valid for the Document's lifetime.
struct Node {
  NodeType type = NodeType::kElement;
  std::string name;  // lowercase tag name, elements only
  std::string data;  // text and comment content
  std::vector<Attribute> attributes;
  Node* parent = nullptr;
  std::vector<Node*> children;
  std::size_t order = 0;  // position in document order

  bool is_element() const { return type == NodeType::kElement; }
  bool is(std::string_view tag) const { return is_element() && name == tag; }
  const std::string* attribute(std::string_view attr) const;
  bool has_attribute(std::string_view attr) const { return attribute(attr) != nullptr; }

  // Concatenated text of every descendant text node.
  std::string text_content() const;
};

using TagSet = std::set<std::string, std::less<>>;

// option, footer, form, head, script, style, nav, aside, select, button,
// noscript.
const TagSet& default_tag_blacklist();

class Document {
 public:
  Document(std::string source_url, std::size_t raw_length);
  Document(Document&&) noexcept = default;
  Document& operator=(Document&&) noexcept = default;
  Document(const Document&) = delete;
  Document& operator=(const Document&) = delete;

  const std::string& source_url() const { return source_url_; }
  const Url& url() const { return url_; }
  // Target of the first <base href>, or url() when there is none. Relative
  // links resolve against this.
  const Url& base_url() const { return base_url_; }
  std::size_t raw_length() const { return raw_length_; }

  const Node* root() const { return root_; }
  Node* root() { return root_; }
  const Node* html() const;
  const Node* body() const;

  std::size_t node_count() const { return nodes_.size(); }

  // Tree construction, used by the parser.
  Node* create(NodeType type, std::string name_or_data = {});
  static void append_child(Node* parent, Node* child);
  void assign_document_order();
  void resolve_base_url();

  // Visits every element in document order.
  void for_each_element(const std::function<void(const Node*)>& fn) const;

 private:
  std::string source_url_;
  Url url_;
  Url base_url_;
  std::size_t raw_length_ = 0;
  std::deque<Node> nodes_;
  Node* root_ = nullptr;
};

// Absolute path of an element. A step carries a position predicate iff the
// element has same-tag siblings, so the path resolves to exactly `node`.
NodePath node_path(const Node* node);

// Path from `context` down to its descendant `target` with a position
// predicate on every step, so it selects at most one node per context.
NodePath relative_path(const Node* context, const Node* target);

std::vector<const Node*> resolve(const Document& doc, const NodePath& path);
std::vector<const Node*> resolve_from(const Node* context, const NodePath& path);

std::size_t count_matching(const Document& doc, const NodePath& path);

bool has_blacklisted_descendant(const Node* node, const TagSet& blacklist);
bool has_blacklisted_ancestor(const Node* node, const TagSet& blacklist);

bool descendants_blacklisted(const Document& doc, const NodePath& path,
                             const TagSet& blacklist = default_tag_blacklist());
bool ancestors_blacklisted(const Document& doc, const NodePath& path,
                           const TagSet& blacklist = default_tag_blacklist());

bool is_ancestor(const Node* ancestor, const Node* node);
const Node* common_ancestor(const Node* a, const Node* b);

// Space-separated class tokens contain `word` as a substring
// (case-insensitive).
bool class_contains(const Node* node, std::string_view word);

}  // namespace harvest

#endif  // HARVEST_DOM_H_
