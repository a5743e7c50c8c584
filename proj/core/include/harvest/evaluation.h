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

#ifndef HARVEST_EVALUATION_H_
#define HARVEST_EVALUATION_H_

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "harvest/metrics.h"
#include "harvest/pipeline.h"
#include "harvest/timestamp.h"

namespace harvest {

enum class MetricFamily { kLevenshtein, kJaccard, kToken };
enum class MetadataField { kUser, kDate, kUrl };

std::string_view family_name(MetricFamily family);
std::string_view field_name(MetadataField field);
// Accepts "lev", "levenshtein", "jaccard", "token".
std::optional<MetricFamily> parse_family(std::string_view name);

struct GoldPost {
  std::string text;
  std::optional<std::string> user;
  std::optional<Timestamp> datetime;
  std::optional<std::string> post_url;
};

struct GoldDocument {
  std::string name;  // file stem
  std::string url;
  std::filesystem::path html_path;
  std::vector<GoldPost> posts;
};

// Parses one gold annotation:
//   {"url": string, "posts": [{"text": string, "user": string|null,
//    "datetime": ISO-8601 string|null, "post_url": string|null}]}
// Throws GoldFormatError on schema violations and MissingGoldError when
// there are no post texts.
GoldDocument parse_gold_json(std::string_view json, std::string name,
                             std::filesystem::path html_path);

struct CorpusLoad {
  std::vector<GoldDocument> documents;  // sorted by name
  std::vector<std::string> errors;      // one message per rejected file
};

// Pairs every <name>.html with <name>.json in `dir`. Invalid pairs are
// reported in `errors` without aborting; throws CorpusEmptyError if no
// valid pair remains.
CorpusLoad load_gold_corpus(const std::filesystem::path& dir);

struct AlignedPair {
  std::size_t gold = 0;
  std::size_t extracted = 0;
  double similarity = 0.0;  // 1 - levenshtein_norm
};

// Greedy one-to-one matching: repeatedly takes the most similar remaining
// (gold, extracted) pair.
std::vector<AlignedPair> align_posts(const std::vector<std::string>& gold,
                                     const std::vector<std::string>& extracted);

// Post-text score of one document. Token and Jaccard compare the
// concatenated gold and extracted texts; Levenshtein aligns posts and
// divides the summed similarity by the extracted (precision) and gold
// (recall) post counts. For Jaccard, precision, recall and F1 all carry the
// coefficient. Throws MissingGoldError if the gold document has no posts.
PairScore score_document(const GoldDocument& gold, const ExtractionResult& result,
                         MetricFamily family);

// Position-wise comparison of one metadata field. nullopt when neither the
// gold standard nor the extraction has a value for the field.
std::optional<PairScore> score_metadata(const GoldDocument& gold, const ExtractionResult& result,
                                        MetadataField field);

struct Averages {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

struct DocumentScore {
  std::string document;
  PairScore score;
};

struct MetricReport {
  std::string name;
  Averages micro;
  Averages macro;
  std::vector<DocumentScore> per_document;
};

enum class Pooling {
  kCounts,      // sum of intersections over sum of extracted / gold sizes
  kJaccard,     // sum of intersections over sum of unions
  kGoldLength,  // per-document scores weighted by gold text length
};

Pooling pooling_for(MetricFamily family);

// Macro values are plain means of the per-document values; micro values
// pool according to `pooling`, with micro F1 the harmonic mean of micro P
// and R.
MetricReport aggregate(std::string name, Pooling pooling, std::vector<DocumentScore> per_document);

struct DocumentRun {
  std::string document;
  std::size_t gold_posts = 0;
  std::size_t extracted_posts = 0;
  std::string post_xpath;
  std::optional<std::string> error;  // extraction failure, scored as empty
};

struct EvaluationReport {
  Timestamp now;
  std::vector<DocumentRun> runs;
  std::vector<MetricReport> families;
  std::vector<MetricReport> metadata;
  std::vector<std::string> load_errors;
};

struct EvaluationOptions {
  ExtractionConfig extraction;
  std::vector<MetricFamily> families = {MetricFamily::kLevenshtein, MetricFamily::kJaccard,
                                        MetricFamily::kToken};
  std::optional<Timestamp> now;  // derived from the corpus when unset
  unsigned threads = 0;          // 0 = hardware concurrency
};

// One day after the latest gold datetime, or 9999-12-31 if the corpus has
// none.
Timestamp reference_time(const std::vector<GoldDocument>& documents);

// Extracts every document (concurrently) and scores it. Output order
// follows document names, independent of scheduling.
EvaluationReport evaluate_corpus(const CorpusLoad& corpus, const EvaluationOptions& options);

}  // namespace harvest

#endif  // HARVEST_EVALUATION_H_
