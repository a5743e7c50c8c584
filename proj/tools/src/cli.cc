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

#include "cli.h"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iterator>
#include <ostream>

#include "harvest/errors.h"
#include "harvest/evaluation.h"
#include "harvest/pipeline.h"
#include "harvest/serialize.h"

namespace harvest::tools {

namespace {

bool is_http_url(std::string_view s) {
  return s.starts_with("http://") || s.starts_with("https://");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::optional<Timestamp> parse_now(const CliOptions& opts) {
  if (!opts.now) return std::nullopt;
  auto t = parse_iso8601(*opts.now);
  if (!t) throw ConfigError("--now is not an ISO-8601 timestamp: " + *opts.now);
  return t;
}

std::vector<MetricFamily> parse_families(const std::optional<std::string>& list) {
  if (!list) return EvaluationOptions{}.families;
  std::vector<MetricFamily> families;
  for (const auto& name : parse_tag_list(*list)) {
    auto f = parse_family(name);
    if (!f) throw ConfigError("unknown metric family: " + name);
    families.push_back(*f);
  }
  // Report order does not depend on the order the flags were given in.
  std::sort(families.begin(), families.end());
  families.erase(std::unique(families.begin(), families.end()), families.end());
  if (families.empty()) throw ConfigError("--families is empty");
  return families;
}

int emit(const std::string& text, const CliOptions& opts, std::ostream& out, std::ostream& err) {
  if (!opts.out) {
    out << text;
    return out ? kExitOk : kExitFailure;
  }
  std::ofstream file(*opts.out, std::ios::binary);
  file << text;
  if (!file) {
    err << "harvest: cannot write " << *opts.out << "\n";
    return kExitFailure;
  }
  return kExitOk;
}

}  // namespace

Config resolve_config(const CliOptions& opts) {
  Config cfg;
  if (opts.config_path && !opts.config_path->empty()) cfg = load_config(*opts.config_path);
  auto& loc = cfg.extraction.locator;
  if (opts.min_post_count) loc.min_post_count = *opts.min_post_count;
  if (opts.blacklist) loc.tag_blacklist = parse_tag_list(*opts.blacklist);
  loc.validate();
  return cfg;
}

int cmd_extract(const ExtractArgs& args, const CliOptions& opts, std::ostream& out,
                std::ostream& err, const Fetcher& fetch) {
  try {
    Config cfg = resolve_config(opts);
    Timestamp now = parse_now(opts).value_or(
        std::chrono::floor<std::chrono::seconds>(std::chrono::system_clock::now()));

    std::string html;
    std::string page_url;
    if (is_http_url(args.input)) {
      FetchedPage page = fetch(args.input, cfg.http);
      html = std::move(page.body);
      page_url = args.url.value_or(page.effective_url);
    } else {
      if (!args.url) throw ConfigError("--url is required when extracting from a file");
      html = read_file(args.input);
      page_url = *args.url;
    }

    ExtractionResult result = extract(html, page_url, cfg.extraction, now);
    for (const auto& d : result.diagnostics) err << "harvest: " << d.stage << ": " << d.message << "\n";
    return emit(opts.format == OutputFormat::kJson ? extraction_to_json(result)
                                                   : extraction_to_text(result),
                opts, out, err);
  } catch (const NoPostsFound& e) {
    err << "harvest: no posts found: " << e.what() << "\n";
    return kExitNoPosts;
  } catch (const std::exception& e) {
    err << "harvest: " << e.what() << "\n";
    return kExitFailure;
  }
}

int cmd_eval(const EvalArgs& args, const CliOptions& opts, std::ostream& out, std::ostream& err) {
  try {
    EvaluationOptions eval;
    eval.extraction = resolve_config(opts).extraction;
    eval.families = parse_families(args.families);
    eval.now = parse_now(opts);

    CorpusLoad corpus = load_gold_corpus(args.gold_dir);
    for (const auto& e : corpus.errors) err << "harvest: skipped " << e << "\n";
    EvaluationReport report = evaluate_corpus(corpus, eval);
    return emit(opts.format == OutputFormat::kJson ? report_to_json(report)
                                                   : report_to_text(report),
                opts, out, err);
  } catch (const std::exception& e) {
    err << "harvest: " << e.what() << "\n";
    return kExitFailure;
  }
}

}  // namespace harvest::tools
