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

#include "harvest/post_locator.h"

#include <algorithm>
#include <set>

#include "harvest/errors.h"

namespace harvest {

void LocatorConfig::validate() const {
  if (min_post_count < 1) throw ConfigError("min_post_count must be >= 1");
  if (!(ancestor_discount >= 1.0)) throw ConfigError("ancestor_discount must be >= 1");
  if (ancestor_levels < 0) throw ConfigError("ancestor_levels must be >= 0");
}

bool ranks_before(const CandidatePath& a, const CandidatePath& b) {
  if (a.score != b.score) return a.score > b.score;
  if (a.element_count != b.element_count) return a.element_count > b.element_count;
  if (a.xpath.depth() != b.xpath.depth()) return a.xpath.depth() < b.xpath.depth();
  return a.xpath.str() < b.xpath.str();
}

double score_nodes(const VsmVector& page_vsm, const std::vector<const Node*>& nodes,
                   const LocatorConfig& cfg) {
  for (const Node* n : nodes) {
    if (has_blacklisted_descendant(n, cfg.tag_blacklist)) return 0.0;
  }
  std::string text;
  bool discounted = false;
  for (const Node* n : nodes) {
    const std::string node_text = render_node_text(n);
    if (!node_text.empty()) {
      if (!text.empty()) text.push_back('\n');
      text += node_text;
    }
    discounted = discounted || has_blacklisted_ancestor(n, cfg.tag_blacklist);
  }
  double sim = cosine_similarity(page_vsm, build_vsm(text));
  if (discounted) sim /= cfg.ancestor_discount;
  return sim;
}

double score_xpath(const RenderedPage& page, const NodePath& path, const Document& doc,
                   const LocatorConfig& cfg) {
  const auto nodes = resolve(doc, path);
  if (nodes.empty()) throw PathResolutionError("path matches nothing: " + path.str());
  return score_nodes(build_vsm(page.full_text), nodes, cfg);
}

std::vector<NodePath> candidate_paths(const RenderedPage& page, int ancestor_levels) {
  std::vector<NodePath> out;
  std::set<NodePath> seen;
  for (const auto& line : page.lines) {
    NodePath path = line.origin;
    for (int level = 0; level <= ancestor_levels && !path.empty(); ++level) {
      NodePath candidate = path.generalized();
      if (seen.insert(candidate).second) out.push_back(std::move(candidate));
      path = path.parent();
    }
  }
  return out;
}

std::vector<CandidatePath> admitted_candidates(const RenderedPage& page, const Document& doc,
                                               const LocatorConfig& cfg) {
  cfg.validate();
  const VsmVector page_vsm = build_vsm(page.full_text);
  std::vector<CandidatePath> admitted;
  for (auto& path : candidate_paths(page, cfg.ancestor_levels)) {
    const auto nodes = resolve(doc, path);
    if (nodes.size() <= static_cast<std::size_t>(cfg.min_post_count)) continue;
    const double score = score_nodes(page_vsm, nodes, cfg);
    if (score <= 0.0) continue;
    admitted.push_back({std::move(path), score, nodes.size()});
  }
  return admitted;
}

CandidatePath locate_post_path(const RenderedPage& page, const Document& doc,
                               const LocatorConfig& cfg) {
  auto admitted = admitted_candidates(page, doc, cfg);
  if (admitted.empty()) {
    throw NoPostsFound("no element path repeats more than " +
                       std::to_string(cfg.min_post_count) + " times with text coverage");
  }
  return *std::min_element(admitted.begin(), admitted.end(), ranks_before);
}

}  // namespace harvest
