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

#include "harvest/metadata.h"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <set>

#include "harvest/date_parser.h"
#include "harvest/render.h"
#include "harvest/utf8.h"

namespace harvest {
namespace {

void for_each_element(const Node* root, bool include_root,
                      const std::function<void(const Node*)>& fn) {
  if (include_root) fn(root);
  for (const Node* c : root->children) {
    if (c->is_element()) for_each_element(c, true, fn);
  }
}

std::string flat_text(const Node* node) {
  return utf8::collapse_whitespace(render_node_text(node));
}

std::string own_text(const Node* node) {
  std::string out;
  for (const Node* c : node->children) {
    if (c->type == NodeType::kText) out += c->data + " ";
  }
  return utf8::collapse_whitespace(out);
}

// Nearest element sibling in the given direction, unless it is itself a
// post node.
const Node* adjacent_sibling(const Node* node, bool preceding,
                             const std::set<const Node*>& post_set) {
  if (node->parent == nullptr) return nullptr;
  const auto& siblings = node->parent->children;
  auto self = std::find(siblings.begin(), siblings.end(), node);
  const Node* found = nullptr;
  if (preceding) {
    for (auto it = std::make_reverse_iterator(self); it != siblings.rend(); ++it) {
      if ((*it)->is_element()) {
        found = *it;
        break;
      }
    }
  } else {
    for (auto it = self + 1; it != siblings.end(); ++it) {
      if ((*it)->is_element()) {
        found = *it;
        break;
      }
    }
  }
  if (found != nullptr && post_set.contains(found)) return nullptr;
  return found;
}

NodePath prefixed(const PathStep& first, const NodePath& rest) {
  std::vector<PathStep> steps = {first};
  steps.insert(steps.end(), rest.steps().begin(), rest.steps().end());
  return NodePath(false, std::move(steps));
}

bool path_ranks_before(const NodePath& a, const NodePath& b) {
  if (a.depth() != b.depth()) return a.depth() < b.depth();
  return a.str() < b.str();
}

std::string lower_ascii(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

// Per-post values for a (relative path, variant) key.
template <typename T>
struct Accumulator {
  NodePath xpath;
  int variant = 0;
  std::vector<std::optional<T>> values;
};

template <typename T>
using AccumulatorMap = std::map<std::pair<NodePath, int>, Accumulator<T>>;

template <typename T>
void record(AccumulatorMap<T>& map, const NodePath& path, int variant, std::size_t post,
            std::size_t n_posts, std::optional<T> value) {
  auto [it, inserted] = map.try_emplace({path, variant});
  if (inserted) {
    it->second.xpath = path;
    it->second.variant = variant;
    it->second.values.resize(n_posts);
  }
  if (value && !it->second.values[post]) it->second.values[post] = std::move(value);
}

}  // namespace

// ---------------------------------------------------------------------------
// Dates

std::size_t DateCandidate::count() const {
  return static_cast<std::size_t>(
      std::count_if(dates.begin(), dates.end(), [](const auto& d) { return d.has_value(); }));
}

std::optional<Timestamp> DateCandidate::latest() const {
  std::optional<Timestamp> best;
  for (const auto& d : dates) {
    if (d && (!best || *d > *best)) best = d;
  }
  return best;
}

bool is_chronological(const std::vector<std::optional<Timestamp>>& dates) {
  bool ascending = true;
  bool descending = true;
  bool varies = false;
  std::optional<Timestamp> prev;
  for (const auto& d : dates) {
    if (!d) continue;
    if (prev) {
      if (*d < *prev) ascending = false;
      if (*d > *prev) descending = false;
      if (*d != *prev) varies = true;
    }
    prev = d;
  }
  return varies && (ascending || descending);
}

bool date_ranks_before(const DateCandidate& a, const DateCandidate& b) {
  const bool ca = is_chronological(a.dates);
  const bool cb = is_chronological(b.dates);
  if (ca != cb) return ca;
  const auto la = a.latest();
  const auto lb = b.latest();
  if (la != lb) return la > lb;
  if (a.source != b.source) return a.source == DateSource::kDatetimeAttribute;
  if (a.count() != b.count()) return a.count() > b.count();
  return path_ranks_before(a.xpath, b.xpath);
}

std::vector<DateCandidate> date_candidates(PostNodes posts, Timestamp now,
                                           const MetadataConfig& cfg) {
  const std::size_t n = posts.size();
  const std::set<const Node*> post_set(posts.begin(), posts.end());
  const Timestamp floor = epoch_floor();
  AccumulatorMap<Timestamp> found;

  auto admissible = [&](std::optional<Timestamp> t) -> std::optional<Timestamp> {
    if (t && *t >= floor && *t <= now) return t;
    return std::nullopt;
  };

  auto visit = [&](std::size_t post, const Node* element, const NodePath& path) {
    if (const std::string* attr = element->attribute("datetime")) {
      auto t = parse_iso8601(*attr);
      if (!t) {
        if (auto m = find_date(*attr, now)) t = m->value;
      }
      record(found, path, static_cast<int>(DateSource::kDatetimeAttribute), post, n,
             admissible(t));
    }
    std::string text = flat_text(element);
    if (utf8::length(text) > cfg.max_date_text_length) text = own_text(element);
    if (text.empty() || utf8::length(text) > cfg.max_date_text_length) return;
    if (auto m = find_date(text, now)) {
      record(found, path, static_cast<int>(DateSource::kParsedText), post, n,
             admissible(m->value));
    }
  };

  for (std::size_t i = 0; i < n; ++i) {
    const Node* post = posts[i];
    for_each_element(post, true, [&](const Node* e) { visit(i, e, relative_path(post, e)); });
    for (const bool preceding : {true, false}) {
      const Node* sibling = adjacent_sibling(post, preceding, post_set);
      if (sibling == nullptr) continue;
      const PathStep first{preceding ? Axis::kPrecedingSibling : Axis::kFollowingSibling,
                           sibling->name, 1};
      for_each_element(sibling, true, [&](const Node* e) {
        visit(i, e, prefixed(first, relative_path(sibling, e)));
      });
    }
  }

  const std::size_t min_count = n > 2 ? n - 2 : 1;
  std::vector<DateCandidate> out;
  for (auto& [_, acc] : found) {
    DateCandidate c{acc.xpath, static_cast<DateSource>(acc.variant), std::move(acc.values)};
    if (c.count() >= min_count) out.push_back(std::move(c));
  }
  return out;
}

std::optional<DateCandidate> extract_dates(const Document& /*doc*/, PostNodes posts,
                                           Timestamp now, const MetadataConfig& cfg) {
  if (posts.empty()) return std::nullopt;
  auto candidates = date_candidates(posts, now, cfg);
  if (candidates.empty()) return std::nullopt;
  return *std::min_element(candidates.begin(), candidates.end(), date_ranks_before);
}

// ---------------------------------------------------------------------------
// Post links

std::optional<std::int64_t> trailing_number(std::string_view url) {
  while (!url.empty() && url.back() == '/') url.remove_suffix(1);
  std::size_t start = url.size();
  while (start > 0 && std::isdigit(static_cast<unsigned char>(url[start - 1]))) --start;
  if (start == url.size() || url.size() - start > 18) return std::nullopt;
  return std::stoll(std::string(url.substr(start)));
}

bool LinkCandidate::increasing() const {
  for (std::size_t i = 0; i < trailing_numbers.size(); ++i) {
    if (!trailing_numbers[i]) return false;
    if (i > 0 && *trailing_numbers[i] <= *trailing_numbers[i - 1]) return false;
  }
  return !trailing_numbers.empty();
}

bool points_to_page(std::string_view url, const Url& page_url) {
  const std::string base = normalize_url(page_url.without_fragment().str());
  const std::string target = normalize_url(url);
  if (!target.starts_with(base)) return false;
  if (target.size() == base.size() || base.back() == '/') return true;
  const char next = target[base.size()];
  return next == '#' || next == '?' || next == '&' || next == '/' || next == ';';
}

bool link_ranks_before(const LinkCandidate& a, const LinkCandidate& b) {
  const bool ia = a.increasing();
  const bool ib = b.increasing();
  if (ia != ib) return ia;
  if (a.kind != b.kind) return a.kind == LinkKind::kHref;
  return path_ranks_before(a.xpath, b.xpath);
}

std::vector<LinkCandidate> link_candidates(PostNodes posts, const Url& page_url) {
  return link_candidates(posts, page_url, page_url);
}

std::vector<LinkCandidate> link_candidates(PostNodes posts, const Url& page_url,
                                           const Url& base_url) {
  const std::size_t n = posts.size();
  AccumulatorMap<std::string> found;
  const std::string page_base = page_url.without_fragment().str();
  for (std::size_t i = 0; i < n; ++i) {
    const Node* post = posts[i];
    for_each_element(post, false, [&](const Node* e) {
      if (!e->is("a") && !e->is("area")) return;
      const NodePath path = relative_path(post, e);
      if (const std::string* href = e->attribute("href")) {
        record(found, path, static_cast<int>(LinkKind::kHref), i, n, resolve_url(base_url, *href));
      }
      const std::string* name = e->attribute("name");
      if (e->is("a") && name != nullptr && !utf8::is_blank(*name)) {
        record(found, path, static_cast<int>(LinkKind::kAnchorName), i, n,
               std::optional<std::string>(page_base + "#" + *name));
      }
    });
  }

  std::vector<LinkCandidate> out;
  for (auto& [_, acc] : found) {
    const bool complete = std::all_of(acc.values.begin(), acc.values.end(), [&](const auto& v) {
      return v.has_value() && points_to_page(*v, page_url);
    });
    if (!complete) continue;
    LinkCandidate c{acc.xpath, static_cast<LinkKind>(acc.variant), {}, {}};
    std::set<std::string> distinct;
    for (auto& v : acc.values) {
      distinct.insert(normalize_url(*v));
      c.trailing_numbers.push_back(trailing_number(*v));
      c.urls.push_back(std::move(*v));
    }
    // A permalink addresses one post, so every post needs its own URL.
    if (distinct.size() != c.urls.size()) continue;
    out.push_back(std::move(c));
  }
  return out;
}

std::optional<LinkCandidate> extract_post_links(const Document& doc, PostNodes posts,
                                                const Url& page_url) {
  if (posts.empty()) return std::nullopt;
  auto candidates = link_candidates(posts, page_url, doc.base_url());
  if (candidates.empty()) return std::nullopt;
  return *std::min_element(candidates.begin(), candidates.end(), link_ranks_before);
}

// ---------------------------------------------------------------------------
// Users

namespace {

bool looks_like_profile(const Url& url) {
  static const std::set<std::string, std::less<>> kWords = {
      "u",       "user",     "users",    "member", "members",    "profile",
      "profiles", "author",  "people",   "person", "benutzer",   "mitglied",
      "mitglieder", "memberlist", "userinfo"};
  std::string haystack = lower_ascii(url.path);
  if (url.query) haystack += "?" + lower_ascii(*url.query);
  std::string word;
  for (std::size_t i = 0; i <= haystack.size(); ++i) {
    const char c = i < haystack.size() ? haystack[i] : '/';
    if (std::isalpha(static_cast<unsigned char>(c))) {
      word.push_back(c);
      continue;
    }
    if (!word.empty() && (kWords.contains(word) || word.starts_with("user") ||
                          word.starts_with("member") || word.starts_with("profile"))) {
      return true;
    }
    word.clear();
  }
  return false;
}

// Links that stay on the forum page, or lead to a user profile when that is
// allowed.
bool stays_on_page(std::string_view href, const Url& page_url, const Url& base_url,
                   const MetadataConfig& cfg) {
  std::string_view h = href;
  while (!h.empty() && std::isspace(static_cast<unsigned char>(h.front()))) h.remove_prefix(1);
  if (h.starts_with("#")) return true;
  const auto resolved = resolve_url(base_url, h);
  if (!resolved) return false;
  const Url target = *Url::parse(*resolved);
  if (normalize_url(target.without_fragment().str()) ==
      normalize_url(page_url.without_fragment().str())) {
    return true;
  }
  return cfg.allow_profile_links && target.host == page_url.host && looks_like_profile(target);
}

bool has_user_class(const Node* element, const Node* post) {
  static constexpr std::string_view kWords[] = {"user", "member", "person", "profile"};
  for (const Node* n : {element, static_cast<const Node*>(element->parent)}) {
    if (n == nullptr || n == post) continue;
    for (auto w : kWords) {
      if (class_contains(n, w)) return true;
    }
  }
  return false;
}

struct NameValue {
  std::string name;
  bool user_class = false;
};

}  // namespace

bool is_plausible_user_name(std::string_view name) {
  if (utf8::is_blank(name)) return false;
  if (utf8::length(name) >= 100) return false;
  // Post counters and bare timestamps ("#3", "12:04") are not names.
  bool has_letter = false;
  for (std::size_t pos = 0; pos < name.size() && !has_letter;) {
    const char32_t cp = utf8::next(name, pos);
    has_letter = !utf8::is_separator(cp) && !(cp >= '0' && cp <= '9');
  }
  if (!has_letter) return false;
  const std::string collapsed = utf8::collapse_whitespace(name);
  const auto words = std::count(collapsed.begin(), collapsed.end(), ' ') + 1;
  return words < 4;
}

bool user_ranks_before(const UserCandidate& a, const UserCandidate& b) {
  if (a.score != b.score) return a.score > b.score;
  return path_ranks_before(a.xpath, b.xpath);
}

std::vector<UserCandidate> user_candidates(PostNodes posts, const Url& page_url,
                                           const std::optional<NodePath>& post_link_xpath,
                                           const MetadataConfig& cfg) {
  return user_candidates(posts, page_url, page_url, post_link_xpath, cfg);
}

std::vector<UserCandidate> user_candidates(PostNodes posts, const Url& page_url,
                                           const Url& base_url,
                                           const std::optional<NodePath>& post_link_xpath,
                                           const MetadataConfig& cfg) {
  const std::size_t n = posts.size();
  AccumulatorMap<NameValue> found;
  constexpr int kText = 0;
  constexpr int kLink = 1;
  for (std::size_t i = 0; i < n; ++i) {
    const Node* post = posts[i];
    for_each_element(post, false, [&](const Node* e) {
      const bool link = e->is("a") && e->has_attribute("href");
      const bool text = e->is("span") || e->is("strong") || e->is("div") || e->is("b");
      if (!link && !text) return;
      const NodePath path = relative_path(post, e);
      std::string name = flat_text(e);
      std::optional<NameValue> value;
      if (is_plausible_user_name(name)) value = NameValue{name, has_user_class(e, post)};
      if (link) {
        if (post_link_xpath && path == *post_link_xpath) return;
        const bool ok = stays_on_page(*e->attribute("href"), page_url, base_url, cfg);
        record(found, path, kLink, i, n, ok ? value : std::nullopt);
      } else {
        record(found, path, kText, i, n, value);
      }
    });
  }

  std::vector<UserCandidate> out;
  for (auto& [_, acc] : found) {
    if (!std::all_of(acc.values.begin(), acc.values.end(),
                     [](const auto& v) { return v.has_value(); })) {
      continue;
    }
    UserCandidate c;
    c.xpath = acc.xpath;
    c.is_link = acc.variant == kLink;
    bool all_classed = true;
    std::set<std::string> distinct;
    for (auto& v : acc.values) {
      all_classed = all_classed && v->user_class;
      distinct.insert(utf8::to_lower(v->name));
      c.names.push_back(std::move(v->name));
    }
    if (c.is_link) c.score += cfg.user_link_weight;
    if (all_classed) c.score += cfg.user_class_weight;
    if (distinct.size() > 1) c.score += cfg.user_variation_weight;
    out.push_back(std::move(c));
  }
  return out;
}

std::optional<UserCandidate> extract_users(const Document& doc, PostNodes posts,
                                           const std::optional<NodePath>& post_link_xpath,
                                           const MetadataConfig& cfg) {
  if (posts.empty()) return std::nullopt;
  auto candidates = user_candidates(posts, doc.url(), doc.base_url(), post_link_xpath, cfg);
  if (candidates.empty()) return std::nullopt;
  return *std::min_element(candidates.begin(), candidates.end(), user_ranks_before);
}

}  // namespace harvest
