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

#include "harvest/config.h"

#include <algorithm>
#include <fstream>
#include <iterator>

#include <json.hpp>

#include "harvest/errors.h"
#include "harvest/utf8.h"

namespace harvest {

namespace {

using nlohmann::json;

const json& section(const json& root, const char* name) {
  static const json empty = json::object();
  auto it = root.find(name);
  if (it == root.end()) return empty;
  if (!it->is_object()) throw ConfigError(std::string("\"") + name + "\" must be an object");
  return *it;
}

void reject_unknown(const json& obj, const char* where, std::initializer_list<std::string_view> keys) {
  for (const auto& [key, value] : obj.items()) {
    if (std::find(keys.begin(), keys.end(), key) == keys.end())
      throw ConfigError(std::string("unknown key ") + where + "." + key);
  }
}

template <typename T>
void read(const json& obj, const char* key, T& out) {
  auto it = obj.find(key);
  if (it == obj.end()) return;
  try {
    out = it->get<T>();
  } catch (const json::exception&) {
    throw ConfigError(std::string("bad value for \"") + key + "\"");
  }
}

}  // namespace

TagSet parse_tag_list(std::string_view list) {
  TagSet tags;
  std::size_t start = 0;
  while (start <= list.size()) {
    std::size_t end = list.find(',', start);
    if (end == std::string_view::npos) end = list.size();
    std::string tag = utf8::to_lower(utf8::collapse_whitespace(list.substr(start, end - start)));
    if (!tag.empty()) tags.insert(std::move(tag));
    start = end + 1;
  }
  return tags;
}

Config parse_config(std::string_view text, Config base) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("invalid config JSON: ") + e.what());
  }
  if (!root.is_object()) throw ConfigError("config must be a JSON object");
  reject_unknown(root, "config", {"locator", "metadata", "http"});

  const json& loc = section(root, "locator");
  reject_unknown(loc, "locator",
                 {"min_post_count", "tag_blacklist", "ancestor_discount", "ancestor_levels"});
  auto& lc = base.extraction.locator;
  read(loc, "min_post_count", lc.min_post_count);
  read(loc, "ancestor_discount", lc.ancestor_discount);
  read(loc, "ancestor_levels", lc.ancestor_levels);
  if (loc.contains("tag_blacklist")) {
    std::vector<std::string> tags;
    read(loc, "tag_blacklist", tags);
    lc.tag_blacklist.clear();
    for (const auto& t : tags) lc.tag_blacklist.insert(utf8::to_lower(t));
  }
  lc.validate();

  const json& meta = section(root, "metadata");
  reject_unknown(meta, "metadata",
                 {"user_class_weight", "user_variation_weight", "user_link_weight",
                  "allow_profile_links", "max_date_text_length"});
  auto& mc = base.extraction.metadata;
  read(meta, "user_class_weight", mc.user_class_weight);
  read(meta, "user_variation_weight", mc.user_variation_weight);
  read(meta, "user_link_weight", mc.user_link_weight);
  read(meta, "allow_profile_links", mc.allow_profile_links);
  read(meta, "max_date_text_length", mc.max_date_text_length);

  const json& http = section(root, "http");
  reject_unknown(http, "http", {"user_agent", "timeout_seconds"});
  read(http, "user_agent", base.http.user_agent);
  read(http, "timeout_seconds", base.http.timeout_seconds);
  if (base.http.timeout_seconds <= 0) throw ConfigError("http.timeout_seconds must be positive");
  return base;
}

Config load_config(const std::filesystem::path& path, Config base) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read config file " + path.string());
  std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  return parse_config(text, std::move(base));
}

}  // namespace harvest
