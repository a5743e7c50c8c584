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

#include "harvest/evaluation.h"

#include <filesystem>
#include <fstream>
#include <numeric>

#include <gtest/gtest.h>

#include "harvest/errors.h"
#include "support/oracles.h"

namespace harvest {
namespace {

using testing::best_assignment;
using testing::fixture_dir;

// Gold post texts share letters and spaces; boilerplate uses digits only, so
// every gold/boilerplate pair has similarity exactly zero.
std::vector<std::string> gold_texts(std::size_t n) {
  static const char* words[] = {"alpha", "bravo", "charlie", "delta", "echo",
                                "foxtrot", "golf", "hotel", "india", "juliet"};
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) {
    std::string t;
    for (std::size_t k = 0; k < 6; ++k) t += std::string(words[(i * 3 + k) % 10]) + " ";
    t += words[i % 10];
    out.push_back(t);
  }
  return out;
}

GoldDocument gold_doc(const std::vector<std::string>& texts) {
  GoldDocument g{"doc", "http://x.org/t", "doc.html", {}};
  for (const auto& t : texts) g.posts.push_back({t, std::nullopt, std::nullopt, std::nullopt});
  return g;
}

ExtractionResult result_of(const std::vector<std::string>& texts) {
  ExtractionResult r;
  r.url = "http://x.org/t";
  for (std::size_t i = 0; i < texts.size(); ++i) r.posts.push_back({i, texts[i], {}, {}, {}});
  return r;
}

std::vector<std::vector<double>> similarity_matrix(const std::vector<std::string>& gold,
                                                   const std::vector<std::string>& extracted) {
  std::vector<std::vector<double>> sim(gold.size(), std::vector<double>(extracted.size()));
  for (std::size_t i = 0; i < gold.size(); ++i) {
    for (std::size_t j = 0; j < extracted.size(); ++j) {
      sim[i][j] = 1.0 - testing::dp_levenshtein_norm(gold[i], extracted[j]);
    }
  }
  return sim;
}

TEST(Evaluation, PerfectExtractionScoresOne) {
  const auto texts = gold_texts(5);
  for (auto family : {MetricFamily::kLevenshtein, MetricFamily::kJaccard, MetricFamily::kToken}) {
    const PairScore s = score_document(gold_doc(texts), result_of(texts), family);
    EXPECT_EQ(s.precision, 1.0) << family_name(family);
    EXPECT_EQ(s.recall, 1.0) << family_name(family);
    EXPECT_EQ(s.f1, 1.0) << family_name(family);
  }
}

TEST(Evaluation, BoilerplatePostsLowerLevenshteinPrecision) {
  const auto gold = gold_texts(8);
  auto extracted = gold;
  extracted.insert(extracted.begin() + 3, "0123456789 0123");
  extracted.push_back("987654");
  const PairScore s = score_document(gold_doc(gold), result_of(extracted), MetricFamily::kLevenshtein);
  EXPECT_DOUBLE_EQ(s.precision, 0.8);
  EXPECT_DOUBLE_EQ(s.recall, 1.0);
  const double best = best_assignment(similarity_matrix(gold, extracted));
  EXPECT_DOUBLE_EQ(s.precision, best / 10.0);
}

TEST(Evaluation, MergedPostsLoseRecall) {
  const auto gold = gold_texts(4);
  std::vector<std::string> extracted = {gold[0] + " " + gold[1], gold[2], gold[3]};
  const PairScore s = score_document(gold_doc(gold), result_of(extracted), MetricFamily::kLevenshtein);
  EXPECT_LT(s.recall, 1.0);
  const auto pairs = align_posts(gold, extracted);
  EXPECT_EQ(pairs.size(), 3u);
  double total = 0.0;
  for (const auto& p : pairs) total += p.similarity;
  EXPECT_NEAR(total, best_assignment(similarity_matrix(gold, extracted)), 1e-12);
  EXPECT_NEAR(s.recall, total / 4.0, 1e-12);
}

TEST(Evaluation, AlignmentSkipsZeroSimilarity) {
  const auto pairs = align_posts({"abc"}, {"xyz"});
  EXPECT_TRUE(pairs.empty());
}

TEST(Evaluation, DateMetadataCounts) {
  const auto texts = gold_texts(10);
  GoldDocument g = gold_doc(texts);
  ExtractionResult r = result_of(texts);
  for (int i = 0; i < 10; ++i) {
    g.posts[i].datetime = make_timestamp(2020, 1, i + 1, 12);
    if (i < 6) r.posts[i].date = g.posts[i].datetime;
    else if (i < 8) r.posts[i].date = make_timestamp(2019, 1, 1);
  }
  const auto s = score_metadata(g, r, MetadataField::kDate);
  ASSERT_TRUE(s);
  EXPECT_EQ(s->precision, 0.75);
  EXPECT_EQ(s->recall, 0.6);
}

TEST(Evaluation, MetadataMatching) {
  const auto texts = gold_texts(3);
  GoldDocument g = gold_doc(texts);
  ExtractionResult r = result_of(texts);
  g.posts[0].user = "Jane  Doe";
  r.posts[0].user = "jane doe";
  g.posts[1].user = "bob";
  r.posts[1].user = "bobby";
  g.posts[2].datetime = make_timestamp(2020, 1, 1, 10, 5, 0);
  r.posts[2].date = make_timestamp(2020, 1, 1, 10, 5, 42);
  g.posts[0].post_url = "HTTP://x.org:80/t#p1";
  r.posts[0].url = "http://x.org/t#p1";

  const auto users = score_metadata(g, r, MetadataField::kUser);
  EXPECT_EQ(users->precision, 0.5);
  EXPECT_EQ(score_metadata(g, r, MetadataField::kDate)->f1, 1.0);
  EXPECT_EQ(score_metadata(g, r, MetadataField::kUrl)->f1, 1.0);
}

TEST(Evaluation, VacuousUrlFieldIsExcluded) {
  const auto texts = gold_texts(3);
  EXPECT_FALSE(score_metadata(gold_doc(texts), result_of(texts), MetadataField::kUrl));
}

TEST(Aggregate, SingleDocumentMicroEqualsMacro) {
  const MetricReport r = aggregate("token", Pooling::kCounts, {{"a", count_score(3, 4, 6)}});
  EXPECT_EQ(r.micro.precision, r.macro.precision);
  EXPECT_EQ(r.micro.recall, r.macro.recall);
  EXPECT_EQ(r.micro.f1, r.macro.f1);
  EXPECT_EQ(r.macro.precision, 0.75);
}

TEST(Aggregate, PooledCounts) {
  const MetricReport even =
      aggregate("x", Pooling::kCounts, {{"a", count_score(10, 10, 10)}, {"b", count_score(0, 10, 10)}});
  EXPECT_EQ(even.micro.precision, 0.5);
  EXPECT_EQ(even.macro.precision, 0.5);

  const MetricReport skewed =
      aggregate("x", Pooling::kCounts, {{"a", count_score(90, 90, 90)}, {"b", count_score(0, 10, 10)}});
  EXPECT_DOUBLE_EQ(skewed.micro.precision, 0.9);
  EXPECT_EQ(skewed.macro.precision, 0.5);
}

TEST(GoldFormat, ParsesPosts) {
  const GoldDocument d = parse_gold_json(
      R"({"url":"http://x.org/t","posts":[{"text":"hi","user":"a","datetime":"2020-01-01T10:00:00","post_url":null}]})",
      "d", "d.html");
  ASSERT_EQ(d.posts.size(), 1u);
  EXPECT_EQ(d.posts[0].user, "a");
  EXPECT_EQ(d.posts[0].datetime, make_timestamp(2020, 1, 1, 10));
  EXPECT_FALSE(d.posts[0].post_url);
}

TEST(GoldFormat, RejectsBadInput) {
  EXPECT_THROW(parse_gold_json("{", "d", "d.html"), GoldFormatError);
  EXPECT_THROW(parse_gold_json(R"({"url":"/t","posts":[{"text":"x"}]})", "d", "d.html"),
               GoldFormatError);
  EXPECT_THROW(parse_gold_json(R"({"url":"http://x.org","posts":[]})", "d", "d.html"),
               MissingGoldError);
  EXPECT_THROW(parse_gold_json(R"({"url":"http://x.org","posts":[{"user":"a"}]})", "d", "d.html"),
               MissingGoldError);
  EXPECT_THROW(
      parse_gold_json(R"({"url":"http://x.org","posts":[{"text":"a","datetime":"soon"}]})", "d",
                      "d.html"),
      GoldFormatError);
}

TEST(Corpus, LoadsFixtureCorpus) {
  const CorpusLoad load = load_gold_corpus(fixture_dir() / "corpus");
  EXPECT_EQ(load.documents.size(), 6u);
  EXPECT_TRUE(load.errors.empty());
  EXPECT_TRUE(std::is_sorted(load.documents.begin(), load.documents.end(),
                             [](const auto& a, const auto& b) { return a.name < b.name; }));
}

TEST(Corpus, ReportsUnpairedFilesAndEmptyDirs) {
  const auto dir = std::filesystem::temp_directory_path() / "harvest_corpus_test";
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  EXPECT_THROW(load_gold_corpus(dir), CorpusEmptyError);
  std::ofstream(dir / "lonely.html") << "<p>x</p>";
  std::ofstream(dir / "ok.html") << "<p>x</p>";
  std::ofstream(dir / "ok.json") << R"({"url":"http://x.org/","posts":[{"text":"x"}]})";
  const CorpusLoad load = load_gold_corpus(dir);
  EXPECT_EQ(load.documents.size(), 1u);
  EXPECT_EQ(load.errors.size(), 1u);
  std::filesystem::remove_all(dir);
  EXPECT_THROW(load_gold_corpus(dir), CorpusEmptyError);
}

TEST(Corpus, ReferenceTime) {
  GoldDocument d = gold_doc(gold_texts(2));
  EXPECT_EQ(format_iso8601(reference_time({d})), "9999-12-31T00:00:00");
  d.posts[1].datetime = make_timestamp(2020, 5, 1, 8);
  EXPECT_EQ(reference_time({d}), *make_timestamp(2020, 5, 2, 8));
}

TEST(Corpus, EvaluationIsThreadCountIndependent) {
  const CorpusLoad load = load_gold_corpus(fixture_dir() / "corpus");
  EvaluationOptions one;
  one.threads = 1;
  one.now = make_timestamp(2024, 1, 1);
  EvaluationOptions many = one;
  many.threads = 4;
  const auto a = evaluate_corpus(load, one);
  const auto b = evaluate_corpus(load, many);
  ASSERT_EQ(a.families.size(), b.families.size());
  for (std::size_t i = 0; i < a.families.size(); ++i) {
    EXPECT_EQ(a.families[i].micro.f1, b.families[i].micro.f1);
    EXPECT_EQ(a.families[i].macro.f1, b.families[i].macro.f1);
  }
}

}  // namespace
}  // namespace harvest
