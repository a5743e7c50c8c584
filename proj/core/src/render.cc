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

#include "harvest/render.h"

#include <algorithm>

#include "harvest/utf8.h"

namespace harvest {
namespace {

bool is_skipped(const Node* el) {
  static const TagSet kSkipped = {"script", "style",  "head",   "template",
                                  "noscript", "title", "iframe", "object",
                                  "embed",  "svg",    "math",   "canvas"};
  if (kSkipped.contains(el->name)) return true;
  if (el->has_attribute("hidden")) return true;
  if (const std::string* style = el->attribute("style")) {
    std::string compact;
    for (char c : *style) {
      if (c != ' ' && c != '\t') compact.push_back(static_cast<char>(std::tolower(c)));
    }
    if (compact.find("display:none") != std::string::npos ||
        compact.find("visibility:hidden") != std::string::npos) {
      return true;
    }
  }
  return false;
}

class LineCollector {
 public:
  explicit LineCollector(std::vector<TextLine>& out) : out_(out) {}

  void walk(const Node* node) {
    switch (node->type) {
      case NodeType::kText:
        buffer_ += node->data;
        if (!utf8::is_blank(node->data)) contributors_.push_back(node->parent);
        return;
      case NodeType::kComment:
        return;
      case NodeType::kDocument:
        for (const Node* c : node->children) walk(c);
        return;
      case NodeType::kElement:
        break;
    }
    if (is_skipped(node)) return;
    if (node->name == "br" || node->name == "hr") {
      flush();
      return;
    }
    const bool block = is_block_element(node->name);
    if (block) flush();
    for (const Node* c : node->children) walk(c);
    if (block) flush();
  }

  void flush() {
    std::string text = utf8::collapse_whitespace(buffer_);
    buffer_.clear();
    if (text.empty()) {
      contributors_.clear();
      return;
    }
    const Node* origin = contributors_.front();
    for (const Node* n : contributors_) origin = common_ancestor(origin, n);
    contributors_.clear();
    out_.push_back({std::move(text), node_path(origin), origin});
  }

 private:
  std::vector<TextLine>& out_;
  std::string buffer_;
  std::vector<const Node*> contributors_;
};

}  // namespace

bool is_block_element(std::string_view tag) {
  static const TagSet kBlocks = {
      "address", "article", "aside",   "blockquote", "body",     "caption",
      "center",  "dd",      "details", "dialog",     "dir",      "div",
      "dl",      "dt",      "fieldset", "figcaption", "figure",  "footer",
      "form",    "h1",      "h2",      "h3",         "h4",       "h5",
      "h6",      "header",  "hgroup",  "html",       "legend",   "li",
      "main",    "menu",    "nav",     "ol",         "option",   "p",
      "pre",     "section", "summary", "table",      "tbody",    "td",
      "textarea", "tfoot",  "th",      "thead",      "tr",       "ul",
      "listing", "xmp",     "optgroup", "select",    "noframes", "frameset"};
  return kBlocks.contains(tag);
}

std::vector<TextLine> render_lines(const Node* node) {
  std::vector<TextLine> lines;
  LineCollector collector(lines);
  collector.walk(node);
  collector.flush();
  return lines;
}

std::string render_node_text(const Node* node) {
  std::string out;
  for (const auto& line : render_lines(node)) {
    if (!out.empty()) out.push_back('\n');
    out += line.text;
  }
  return out;
}

RenderedPage render_text(const Document& doc) {
  RenderedPage page;
  page.lines = render_lines(doc.root());
  for (const auto& line : page.lines) {
    if (!page.full_text.empty()) page.full_text.push_back('\n');
    page.full_text += line.text;
  }
  return page;
}

std::string subtree_text(const Document& doc, const NodePath& path) {
  std::string out;
  for (const Node* node : resolve(doc, path)) {
    std::string text = render_node_text(node);
    if (text.empty()) continue;
    if (!out.empty()) out.push_back('\n');
    out += text;
  }
  return out;
}

}  // namespace harvest
