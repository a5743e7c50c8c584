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

#include <cstdlib>
#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "cli.h"

int main(int argc, char** argv) {
  using harvest::tools::OutputFormat;

  CLI::App app{"Extract posts and metadata from forum pages."};
  app.require_subcommand(1);
  app.set_version_flag("--version", "harvest 1.0.0");

  harvest::tools::CliOptions opts;
  if (const char* env = std::getenv("HARVEST_CONFIG")) opts.config_path = env;

  const std::map<std::string, OutputFormat> formats{{"json", OutputFormat::kJson},
                                                    {"text", OutputFormat::kText}};
  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--min-post-count", opts.min_post_count,
                    "Minimum number of posts minus one (default 3)")
        ->check(CLI::NonNegativeNumber);
    cmd->add_option("--blacklist", opts.blacklist, "Comma-separated tag blacklist");
    cmd->add_option("--format", opts.format, "Output format")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    cmd->add_option("--now", opts.now, "Reference time (ISO-8601) for the future-date filter");
    cmd->add_option("--out", opts.out, "Write output to this file");
  };

  harvest::tools::ExtractArgs extract_args;
  CLI::App* extract = app.add_subcommand("extract", "Extract the posts of one page");
  extract->add_option("input", extract_args.input, "HTML file or http(s) URL")->required();
  extract->add_option("--url", extract_args.url, "Page URL (required for file input)");
  add_common(extract);

  harvest::tools::EvalArgs eval_args;
  CLI::App* eval = app.add_subcommand("eval", "Score extraction against a gold corpus");
  eval->add_option("gold_dir", eval_args.gold_dir, "Directory of <name>.html/<name>.json pairs")
      ->required();
  eval->add_option("--families", eval_args.families, "Comma list of lev, jaccard, token");
  add_common(eval);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // Usage errors share the generic failure code.
    return app.exit(e) == 0 ? 0 : harvest::tools::kExitFailure;
  }

  if (extract->parsed())
    return harvest::tools::cmd_extract(extract_args, opts, std::cout, std::cerr);
  return harvest::tools::cmd_eval(eval_args, opts, std::cout, std::cerr);
}
