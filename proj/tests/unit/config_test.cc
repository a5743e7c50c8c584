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

#include <filesystem>
#include <fstream>

#include <gtest/gtest.h>

#include "harvest/errors.h"

namespace harvest {
namespace {

TEST(Config, EmptyObjectKeepsDefaults) {
  const Config c = parse_config("{}");
  EXPECT_EQ(c.extraction.locator.min_post_count, 3);
  EXPECT_EQ(c.extraction.locator.tag_blacklist, default_tag_blacklist());
  EXPECT_EQ(c.http.user_agent, "harvest/1.0");
}

TEST(Config, ReadsAllSections) {
  const Config c = parse_config(R"({
    "locator": {"min_post_count": 5, "tag_blacklist": ["Form", "nav"], "ancestor_levels": 4},
    "metadata": {"user_class_weight": 3, "allow_profile_links": false},
    "http": {"user_agent": "bot", "timeout_seconds": 5}
  })");
  EXPECT_EQ(c.extraction.locator.min_post_count, 5);
  EXPECT_EQ(c.extraction.locator.tag_blacklist, (TagSet{"form", "nav"}));
  EXPECT_EQ(c.extraction.locator.ancestor_levels, 4);
  EXPECT_EQ(c.extraction.metadata.user_class_weight, 3.0);
  EXPECT_FALSE(c.extraction.metadata.allow_profile_links);
  EXPECT_EQ(c.http.user_agent, "bot");
  EXPECT_EQ(c.http.timeout_seconds, 5);
}

TEST(Config, LayersOnBase) {
  Config base;
  base.http.user_agent = "base";
  const Config c = parse_config(R"({"locator": {"min_post_count": 2}})", base);
  EXPECT_EQ(c.http.user_agent, "base");
  EXPECT_EQ(c.extraction.locator.min_post_count, 2);
}

TEST(Config, RejectsBadInput) {
  EXPECT_THROW(parse_config("[1]"), ConfigError);
  EXPECT_THROW(parse_config("{"), ConfigError);
  EXPECT_THROW(parse_config(R"({"locatr": {}})"), ConfigError);
  EXPECT_THROW(parse_config(R"({"locator": {"min_posts": 2}})"), ConfigError);
  EXPECT_THROW(parse_config(R"({"locator": {"min_post_count": "3"}})"), ConfigError);
  EXPECT_THROW(parse_config(R"({"locator": {"min_post_count": 0}})"), ConfigError);
  EXPECT_THROW(parse_config(R"({"locator": {"ancestor_discount": 0.5}})"), ConfigError);
}

TEST(Config, LoadsFile) {
  const auto path = std::filesystem::temp_directory_path() / "harvest_config_test.json";
  std::ofstream(path) << R"({"http": {"timeout_seconds": 9}})";
  EXPECT_EQ(load_config(path).http.timeout_seconds, 9);
  std::filesystem::remove(path);
  EXPECT_THROW(load_config(path), ConfigError);
}

TEST(Config, TagLists) {
  EXPECT_EQ(parse_tag_list("Form, nav,,  footer "), (TagSet{"form", "nav", "footer"}));
  EXPECT_TRUE(parse_tag_list("").empty());
}

}  // namespace
}  // namespace harvest
