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

#include "harvest/pipeline.h"

#include "harvest/errors.h"
#include "harvest/html_parser.h"
#include "harvest/render.h"

namespace harvest {

ExtractionResult extract(std::string_view html, std::string_view page_url,
                         const ExtractionConfig& cfg, Timestamp now) {
  const Document doc = parse_html(html, page_url);
  const RenderedPage page = render_text(doc);
  if (page.lines.empty()) throw NoPostsFound("page has no visible text");
  const CandidatePath located = locate_post_path(page, doc, cfg.locator);

  ExtractionResult result;
  result.url = doc.source_url();
  result.post_xpath = located.xpath;
  result.post_score = located.score;

  std::vector<const Node*> post_nodes;
  for (const Node* node : resolve(doc, located.xpath)) {
    std::string text = render_node_text(node);
    if (text.empty()) continue;
    result.posts.push_back({post_nodes.size(), std::move(text), {}, {}, {}});
    post_nodes.push_back(node);
  }
  if (post_nodes.size() <= static_cast<std::size_t>(cfg.locator.min_post_count)) {
    throw NoPostsFound("too few non-empty posts under " + located.xpath.str());
  }

  if (auto dates = extract_dates(doc, post_nodes, now, cfg.metadata)) {
    for (std::size_t i = 0; i < post_nodes.size(); ++i) result.posts[i].date = dates->dates[i];
    result.date_xpath = dates->xpath;
  } else {
    result.diagnostics.push_back({"date", "no date candidate covers the posts"});
  }

  if (auto links = extract_post_links(doc, post_nodes, doc.url())) {
    for (std::size_t i = 0; i < post_nodes.size(); ++i) result.posts[i].url = links->urls[i];
    result.link_xpath = links->xpath;
  } else {
    result.diagnostics.push_back({"url", "no link candidate yields one on-page URL per post"});
  }

  if (auto users = extract_users(doc, post_nodes, result.link_xpath, cfg.metadata)) {
    for (std::size_t i = 0; i < post_nodes.size(); ++i) result.posts[i].user = users->names[i];
    result.user_xpath = users->xpath;
  } else {
    result.diagnostics.push_back({"user", "no user candidate yields a name for every post"});
  }
  return result;
}

}  // namespace harvest
