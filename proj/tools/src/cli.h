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

#ifndef HARVEST_TOOLS_CLI_H_
#define HARVEST_TOOLS_CLI_H_

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>

#include "fetch.h"
#include "harvest/config.h"

namespace harvest::tools {

enum class OutputFormat { kJson, kText };

// Options shared by both subcommands. Unset values fall back to the config
// file named by HARVEST_CONFIG, then to built-in defaults.
struct CliOptions {
  std::optional<int> min_post_count;
  std::optional<std::string> blacklist;  // comma list, replaces the default set
  OutputFormat format = OutputFormat::kJson;
  std::optional<std::string> now;        // ISO-8601
  std::optional<std::string> out;        // output file instead of stdout
  std::optional<std::string> config_path;
};

struct ExtractArgs {
  std::string input;               // file path or http(s) URL
  std::optional<std::string> url;  // page URL; required for file input
};

struct EvalArgs {
  std::string gold_dir;
  std::optional<std::string> families;  // e.g. "lev,token"
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitNoPosts = 2;

using Fetcher = std::function<FetchedPage(const std::string&, const HttpConfig&)>;

// Builds the effective configuration. Throws ConfigError.
Config resolve_config(const CliOptions& opts);

int cmd_extract(const ExtractArgs& args, const CliOptions& opts, std::ostream& out,
                std::ostream& err, const Fetcher& fetch = fetch_url);

int cmd_eval(const EvalArgs& args, const CliOptions& opts, std::ostream& out, std::ostream& err);

}  // namespace harvest::tools

#endif  // HARVEST_TOOLS_CLI_H_
