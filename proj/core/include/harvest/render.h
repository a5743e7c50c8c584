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

#ifndef HARVEST_RENDER_H_
#define HARVEST_RENDER_H_

#include <string>
#include <vector>

#include "harvest/dom.h"
#include "harvest/node_path.h"

namespace harvest {

struct TextLine {
  std::string text;  // whitespace-collapsed, trimmed, never empty
  NodePath origin;   // nearest common ancestor of the line's text nodes
  const Node* node = nullptr;
};

struct RenderedPage {
  std::vector<TextLine> lines;
  std::string full_text;  // line texts joined by '\n'
};

// Layout-aware text rendering. Block-level elements (p, div, li, tr, td,
// headings, ...) and <br> break lines; inline elements do not. Script,
// style, head, template and noscript content, comments and elements marked
// hidden are skipped.
RenderedPage render_text(const Document& doc);

std::vector<TextLine> render_lines(const Node* node);

// Rendered text of one subtree, lines joined by '\n'.
std::string render_node_text(const Node* node);

// Rendered text of every node matching `path`, in document order, joined
// by '\n'.
std::string subtree_text(const Document& doc, const NodePath& path);

bool is_block_element(std::string_view tag);

}  // namespace harvest

#endif  // HARVEST_RENDER_H_
