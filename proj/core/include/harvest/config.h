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

#ifndef HARVEST_CONFIG_H_
#define HARVEST_CONFIG_H_

#include <filesystem>
#include <string>
#include <string_view>

#include "harvest/pipeline.h"

namespace harvest {

struct HttpConfig {
  std::string user_agent = "harvest/1.0";
  long timeout_seconds = 30;
};

struct Config {
  ExtractionConfig extraction;
  HttpConfig http;
};

// Reads a JSON document of the form
//
//   {"locator":  {"min_post_count": 3, "tag_blacklist": ["nav", ...],
//                 "ancestor_discount": 10, "ancestor_levels": 3},
//    "metadata": {"user_class_weight": 2, "user_variation_weight": 1,
//                 "user_link_weight": 1, "allow_profile_links": true,
//                 "max_date_text_length": 100},
//    "http":     {"user_agent": "...", "timeout_seconds": 30}}
//
// Every key is optional and overrides the corresponding field of `base`.
// Unknown keys are rejected. Throws ConfigError.
Config parse_config(std::string_view json, Config base = {});
Config load_config(const std::filesystem::path& path, Config base = {});

// Splits "a, b,c" into lowercase tag names; empty items are dropped.
TagSet parse_tag_list(std::string_view list);

}  // namespace harvest

#endif  // HARVEST_CONFIG_H_
