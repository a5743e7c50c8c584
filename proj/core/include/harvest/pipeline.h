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

#ifndef HARVEST_PIPELINE_H_
#define HARVEST_PIPELINE_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "harvest/metadata.h"
#include "harvest/node_path.h"
#include "harvest/post_locator.h"
#include "harvest/timestamp.h"

namespace harvest {

struct ExtractionConfig {
  LocatorConfig locator;
  MetadataConfig metadata;
};

struct ForumPost {
  std::size_t index = 0;  // position in document order
  std::string text;
  std::optional<std::string> user;
  std::optional<Timestamp> date;
  std::optional<std::string> url;
};

struct Diagnostic {
  std::string stage;
  std::string message;
};

struct ExtractionResult {
  std::string url;
  std::vector<ForumPost> posts;
  NodePath post_xpath;
  double post_score = 0.0;
  // Relative to each post node.
  std::optional<NodePath> date_xpath;
  std::optional<NodePath> user_xpath;
  std::optional<NodePath> link_xpath;
  std::vector<Diagnostic> diagnostics;
};

// Parses the page, locates the post container path, renders each post and
// extracts dates, permalinks and authors. Metadata that cannot be found is
// left empty and reported as a diagnostic. Throws NoPostsFound when the page
// has no post structure, UrlError for a relative `page_url`.
ExtractionResult extract(std::string_view html, std::string_view page_url,
                         const ExtractionConfig& cfg, Timestamp now);

}  // namespace harvest

#endif  // HARVEST_PIPELINE_H_
