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

#ifndef HARVEST_METADATA_H_
#define HARVEST_METADATA_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "harvest/dom.h"
#include "harvest/node_path.h"
#include "harvest/timestamp.h"

namespace harvest {

struct MetadataConfig {
  // User candidate scoring.
  double user_class_weight = 2.0;      // class mentions user/member/person/profile
  double user_variation_weight = 1.0;  // names differ across posts
  double user_link_weight = 1.0;       // candidate is a link
  // Accept same-host links whose path looks like a profile page
  // (/user/alice, member.php?u=7) as user links.
  bool allow_profile_links = true;
  // Longest element text, in code points, searched for a date.
  std::size_t max_date_text_length = 100;
};

using PostNodes = std::span<const Node* const>;

// ---------------------------------------------------------------------------
// Dates

enum class DateSource { kDatetimeAttribute, kParsedText };

// A relative XPath evaluated against every post node. `dates` is aligned
// with the post nodes; posts the path yields no usable date for are empty.
struct DateCandidate {
  NodePath xpath;
  DateSource source = DateSource::kParsedText;
  std::vector<std::optional<Timestamp>> dates;

  std::size_t count() const;
  std::optional<Timestamp> latest() const;
};

// Non-decreasing or non-increasing over the present values, with at least
// two distinct values.
bool is_chronological(const std::vector<std::optional<Timestamp>>& dates);

bool date_ranks_before(const DateCandidate& a, const DateCandidate& b);

// Candidates found in each post subtree and its adjacent element siblings,
// with dates before 1993-04-30 or after `now` removed and candidates
// covering fewer than n-2 of the n posts dropped.
std::vector<DateCandidate> date_candidates(PostNodes posts, Timestamp now,
                                           const MetadataConfig& cfg = {});

std::optional<DateCandidate> extract_dates(const Document& doc, PostNodes posts, Timestamp now,
                                           const MetadataConfig& cfg = {});

// ---------------------------------------------------------------------------
// Post links

enum class LinkKind { kHref, kAnchorName };

struct LinkCandidate {
  NodePath xpath;
  LinkKind kind = LinkKind::kHref;
  std::vector<std::string> urls;  // one absolute URL per post
  std::vector<std::optional<std::int64_t>> trailing_numbers;

  // Every URL ends in a number and the numbers strictly increase.
  bool increasing() const;
};

// Integer at the very end of the URL (after dropping a trailing '/').
std::optional<std::int64_t> trailing_number(std::string_view url);

// True if `url` addresses `page_url` or a location below it.
bool points_to_page(std::string_view url, const Url& page_url);

bool link_ranks_before(const LinkCandidate& a, const LinkCandidate& b);

// Link and anchor-name candidates that yield one distinct on-page URL per
// post. Relative hrefs resolve against `base_url`, which defaults to the
// page itself.
std::vector<LinkCandidate> link_candidates(PostNodes posts, const Url& page_url);
std::vector<LinkCandidate> link_candidates(PostNodes posts, const Url& page_url,
                                           const Url& base_url);

std::optional<LinkCandidate> extract_post_links(const Document& doc, PostNodes posts,
                                                const Url& page_url);

// ---------------------------------------------------------------------------
// Users

struct UserCandidate {
  NodePath xpath;
  std::vector<std::string> names;  // one per post
  bool is_link = false;
  double score = 0.0;
};

// Fewer than 100 characters, fewer than four words, at least one letter.
bool is_plausible_user_name(std::string_view name);

bool user_ranks_before(const UserCandidate& a, const UserCandidate& b);

std::vector<UserCandidate> user_candidates(PostNodes posts, const Url& page_url,
                                           const std::optional<NodePath>& post_link_xpath,
                                           const MetadataConfig& cfg = {});
std::vector<UserCandidate> user_candidates(PostNodes posts, const Url& page_url,
                                           const Url& base_url,
                                           const std::optional<NodePath>& post_link_xpath,
                                           const MetadataConfig& cfg = {});

std::optional<UserCandidate> extract_users(const Document& doc, PostNodes posts,
                                           const std::optional<NodePath>& post_link_xpath,
                                           const MetadataConfig& cfg = {});

}  // namespace harvest

#endif  // HARVEST_METADATA_H_
