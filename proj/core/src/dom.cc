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

#include "harvest/dom.h"

#include <algorithm>

#include "harvest/utf8.h"

namespace harvest {
namespace {

int same_tag_position(const Node* node, int* total) {
  int position = 0;
  int count = 0;
  for (const Node* sibling : node->parent->children) {
    if (!sibling->is(node->name)) continue;
    ++count;
    if (sibling == node) position = count;
  }
  if (total != nullptr) *total = count;
  return position;
}

void append_step(const Node* context, const PathStep& step,
                 std::vector<const Node*>& out) {
  const auto& siblings =
      step.axis == Axis::kChild ? context->children
                                : (context->parent ? context->parent->children
                                                   : context->children);
  std::vector<const Node*> matches;
  if (step.axis == Axis::kChild) {
    for (const Node* c : siblings) {
      if (c->is(step.tag)) matches.push_back(c);
    }
  } else if (context->parent != nullptr) {
    const auto self = std::find(siblings.begin(), siblings.end(), context);
    if (step.axis == Axis::kPrecedingSibling) {
      for (auto it = std::make_reverse_iterator(self); it != siblings.rend(); ++it) {
        if ((*it)->is(step.tag)) matches.push_back(*it);
      }
    } else {
      for (auto it = self + 1; it != siblings.end(); ++it) {
        if ((*it)->is(step.tag)) matches.push_back(*it);
      }
    }
  }
  if (step.index) {
    const auto i = static_cast<std::size_t>(*step.index);
    if (i <= matches.size()) out.push_back(matches[i - 1]);
  } else {
    out.insert(out.end(), matches.begin(), matches.end());
  }
}

bool any_descendant(const Node* node, const TagSet& blacklist) {
  for (const Node* c : node->children) {
    if (!c->is_element()) continue;
    if (blacklist.contains(c->name) || any_descendant(c, blacklist)) return true;
  }
  return false;
}

void collect_text(const Node* node, std::string& out) {
  if (node->type == NodeType::kText) {
    out += node->data;
    return;
  }
  for (const Node* c : node->children) collect_text(c, out);
}

}  // namespace

const std::string* Node::attribute(std::string_view attr) const {
  for (const auto& a : attributes) {
    if (a.name == attr) return &a.value;
  }
  return nullptr;
}

std::string Node::text_content() const {
  std::string out;
  collect_text(this, out);
  return out;
}

const TagSet& default_tag_blacklist() {
  static const TagSet kBlacklist = {"option", "footer", "form",   "head",
                                    "script", "style",  "nav",    "aside",
                                    "select", "button", "noscript"};
  return kBlacklist;
}

Document::Document(std::string source_url, std::size_t raw_length)
    : source_url_(std::move(source_url)),
      url_(Url::parse_absolute(source_url_)),
      base_url_(url_),
      raw_length_(raw_length) {
  root_ = create(NodeType::kDocument);
}

void Document::resolve_base_url() {
  base_url_ = url_;
  const Node* base = nullptr;
  for_each_element([&](const Node* n) {
    if (base == nullptr && n->is("base") && n->has_attribute("href")) base = n;
  });
  if (base == nullptr) return;
  if (auto resolved = resolve_url(url_, *base->attribute("href"))) {
    base_url_ = Url::parse_absolute(*resolved);
  }
}

Node* Document::create(NodeType type, std::string name_or_data) {
  Node& node = nodes_.emplace_back();
  node.type = type;
  if (type == NodeType::kElement) {
    node.name = std::move(name_or_data);
  } else {
    node.data = std::move(name_or_data);
  }
  return &node;
}

void Document::append_child(Node* parent, Node* child) {
  child->parent = parent;
  parent->children.push_back(child);
}

void Document::assign_document_order() {
  std::size_t next = 0;
  std::vector<Node*> stack = {root_};
  while (!stack.empty()) {
    Node* n = stack.back();
    stack.pop_back();
    n->order = next++;
    for (auto it = n->children.rbegin(); it != n->children.rend(); ++it) {
      stack.push_back(*it);
    }
  }
}

void Document::for_each_element(const std::function<void(const Node*)>& fn) const {
  std::vector<const Node*> stack = {root_};
  while (!stack.empty()) {
    const Node* n = stack.back();
    stack.pop_back();
    if (n->is_element()) fn(n);
    for (auto it = n->children.rbegin(); it != n->children.rend(); ++it) {
      stack.push_back(*it);
    }
  }
}

const Node* Document::html() const {
  for (const Node* c : root_->children) {
    if (c->is("html")) return c;
  }
  return nullptr;
}

const Node* Document::body() const {
  const Node* h = html();
  if (h == nullptr) return nullptr;
  for (const Node* c : h->children) {
    if (c->is("body")) return c;
  }
  return nullptr;
}

NodePath node_path(const Node* node) {
  std::vector<PathStep> steps;
  for (const Node* n = node; n != nullptr && n->is_element(); n = n->parent) {
    PathStep step{Axis::kChild, n->name, std::nullopt};
    if (n->parent != nullptr) {
      int total = 0;
      const int position = same_tag_position(n, &total);
      if (total > 1) step.index = position;
    }
    steps.push_back(std::move(step));
  }
  std::reverse(steps.begin(), steps.end());
  return NodePath(true, std::move(steps));
}

NodePath relative_path(const Node* context, const Node* target) {
  std::vector<PathStep> steps;
  for (const Node* n = target; n != nullptr && n != context; n = n->parent) {
    steps.push_back({Axis::kChild, n->name, same_tag_position(n, nullptr)});
  }
  std::reverse(steps.begin(), steps.end());
  return NodePath(false, std::move(steps));
}

std::vector<const Node*> resolve_from(const Node* context, const NodePath& path) {
  std::vector<const Node*> current = {context};
  for (const auto& step : path.steps()) {
    std::vector<const Node*> next;
    for (const Node* c : current) append_step(c, step, next);
    if (step.axis != Axis::kChild) {
      std::sort(next.begin(), next.end(),
                [](const Node* a, const Node* b) { return a->order < b->order; });
      next.erase(std::unique(next.begin(), next.end()), next.end());
    }
    current = std::move(next);
    if (current.empty()) break;
  }
  return current;
}

std::vector<const Node*> resolve(const Document& doc, const NodePath& path) {
  if (path.empty()) return {};
  return resolve_from(doc.root(), path);
}

std::size_t count_matching(const Document& doc, const NodePath& path) {
  return resolve(doc, path).size();
}

bool has_blacklisted_descendant(const Node* node, const TagSet& blacklist) {
  return any_descendant(node, blacklist);
}

bool has_blacklisted_ancestor(const Node* node, const TagSet& blacklist) {
  for (const Node* a = node->parent; a != nullptr; a = a->parent) {
    if (a->is_element() && blacklist.contains(a->name)) return true;
  }
  return false;
}

bool descendants_blacklisted(const Document& doc, const NodePath& path,
                             const TagSet& blacklist) {
  const auto nodes = resolve(doc, path);
  return std::any_of(nodes.begin(), nodes.end(), [&](const Node* n) {
    return has_blacklisted_descendant(n, blacklist);
  });
}

bool ancestors_blacklisted(const Document& doc, const NodePath& path,
                           const TagSet& blacklist) {
  const auto nodes = resolve(doc, path);
  return std::any_of(nodes.begin(), nodes.end(), [&](const Node* n) {
    return has_blacklisted_ancestor(n, blacklist);
  });
}

bool is_ancestor(const Node* ancestor, const Node* node) {
  for (const Node* a = node->parent; a != nullptr; a = a->parent) {
    if (a == ancestor) return true;
  }
  return false;
}

const Node* common_ancestor(const Node* a, const Node* b) {
  if (a == b || is_ancestor(a, b)) return a;
  for (const Node* x = a->parent; x != nullptr; x = x->parent) {
    if (is_ancestor(x, b)) return x;
  }
  return nullptr;
}

bool class_contains(const Node* node, std::string_view word) {
  const std::string* cls = node->attribute("class");
  if (cls == nullptr) return false;
  return utf8::to_lower(*cls).find(word) != std::string::npos;
}

}  // namespace harvest
