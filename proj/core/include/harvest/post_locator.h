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

#ifndef HARVEST_POST_LOCATOR_H_
#define HARVEST_POST_LOCATOR_H_

#include <cstddef>
#include <vector>

#include "harvest/dom.h"
#include "harvest/node_path.h"
#include "harvest/render.h"
#include "harvest/vsm.h"

namespace harvest {

struct LocatorConfig {
  // A candidate needs strictly more matching elements than this.
  int min_post_count = 3;
  TagSet tag_blacklist = default_tag_blacklist();
  // Divisor applied to candidates below a blacklisted ancestor.
  double ancestor_discount = 10.0;
  // Ancestor levels generalized per line, on top of the line's own origin.
  int ancestor_levels = 3;

  // Throws ConfigError.
  void validate() const;
};

struct CandidatePath {
  NodePath xpath;
  double score = 0.0;
  std::size_t element_count = 0;
};

// True if `a` ranks before `b`: higher score, then more elements, then the
// shorter path, then the lexicographically smaller XPath string.
bool ranks_before(const CandidatePath& a, const CandidatePath& b);

// Likelihood that the nodes matched by `path` are the post containers: 0 if
// any matched node has a blacklisted descendant, otherwise the cosine
// similarity between the page text and the matched subtree text, divided by
// `ancestor_discount` when a matched node has a blacklisted ancestor.
// Throws PathResolutionError if `path` matches nothing.
double score_xpath(const RenderedPage& page, const NodePath& path, const Document& doc,
                   const LocatorConfig& cfg);

// Same as score_xpath with the page vector precomputed.
double score_nodes(const VsmVector& page_vsm, const std::vector<const Node*>& nodes,
                   const LocatorConfig& cfg);

// Generalized candidate paths derived from each line's origin and up to
// `ancestor_levels` of its ancestors, deduplicated, in first-seen order.
std::vector<NodePath> candidate_paths(const RenderedPage& page, int ancestor_levels);

// All candidates that pass the element-count admission rule and score above
// zero.
std::vector<CandidatePath> admitted_candidates(const RenderedPage& page, const Document& doc,
                                               const LocatorConfig& cfg);

// The highest-ranked admitted candidate. Throws NoPostsFound if there is
// none.
CandidatePath locate_post_path(const RenderedPage& page, const Document& doc,
                               const LocatorConfig& cfg);

}  // namespace harvest

#endif  // HARVEST_POST_LOCATOR_H_
