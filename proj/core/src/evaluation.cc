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

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <iterator>
#include <map>
#include <sstream>
#include <thread>
#include <tuple>

#include <json.hpp>

#include "harvest/errors.h"
#include "harvest/url.h"
#include "harvest/utf8.h"

namespace harvest {

namespace {

using nlohmann::json;

std::optional<std::string> optional_string(const json& post, const char* key,
                                           const std::string& where) {
  auto it = post.find(key);
  if (it == post.end() || it->is_null()) return std::nullopt;
  if (!it->is_string()) throw GoldFormatError(where + ": \"" + key + "\" must be a string or null");
  return it->get<std::string>();
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path.string());
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::string joined_texts(const std::vector<std::string>& texts) {
  std::string out;
  for (const auto& t : texts) {
    if (!out.empty()) out += '\n';
    out += t;
  }
  return out;
}

std::vector<std::string> gold_texts(const GoldDocument& gold) {
  std::vector<std::string> out;
  out.reserve(gold.posts.size());
  for (const auto& p : gold.posts) out.push_back(p.text);
  return out;
}

std::vector<std::string> extracted_texts(const ExtractionResult& result) {
  std::vector<std::string> out;
  out.reserve(result.posts.size());
  for (const auto& p : result.posts) out.push_back(p.text);
  return out;
}

std::string trimmed_lower(std::string_view s) {
  return utf8::to_lower(utf8::collapse_whitespace(s));
}

Timestamp to_minute(Timestamp t) {
  return std::chrono::floor<std::chrono::minutes>(t);
}

double safe_div(double num, double den, double if_empty) { return den > 0 ? num / den : if_empty; }

}  // namespace

std::string_view family_name(MetricFamily family) {
  switch (family) {
    case MetricFamily::kLevenshtein: return "levenshtein";
    case MetricFamily::kJaccard: return "jaccard";
    case MetricFamily::kToken: return "token";
  }
  return "unknown";
}

std::string_view field_name(MetadataField field) {
  switch (field) {
    case MetadataField::kUser: return "user";
    case MetadataField::kDate: return "date";
    case MetadataField::kUrl: return "url";
  }
  return "unknown";
}

std::optional<MetricFamily> parse_family(std::string_view name) {
  if (name == "lev" || name == "levenshtein") return MetricFamily::kLevenshtein;
  if (name == "jaccard") return MetricFamily::kJaccard;
  if (name == "token") return MetricFamily::kToken;
  return std::nullopt;
}

GoldDocument parse_gold_json(std::string_view text, std::string name,
                             std::filesystem::path html_path) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw GoldFormatError(name + ": invalid JSON: " + e.what());
  }
  if (!root.is_object()) throw GoldFormatError(name + ": top level must be an object");
  auto url = root.find("url");
  if (url == root.end() || !url->is_string())
    throw GoldFormatError(name + ": \"url\" must be a string");

  GoldDocument doc;
  doc.name = std::move(name);
  doc.html_path = std::move(html_path);
  doc.url = url->get<std::string>();
  try {
    (void)Url::parse_absolute(doc.url);
  } catch (const UrlError&) {
    throw GoldFormatError(doc.name + ": \"url\" is not absolute: " + doc.url);
  }

  auto posts = root.find("posts");
  if (posts == root.end() || !posts->is_array())
    throw GoldFormatError(doc.name + ": \"posts\" must be an array");
  if (posts->empty()) throw MissingGoldError(doc.name + ": no gold posts");

  std::size_t i = 0;
  for (const auto& p : *posts) {
    std::string where = doc.name + ": posts[" + std::to_string(i++) + "]";
    if (!p.is_object()) throw GoldFormatError(where + " must be an object");
    auto t = p.find("text");
    if (t == p.end() || !t->is_string()) throw MissingGoldError(where + ": missing post text");
    GoldPost post;
    post.text = t->get<std::string>();
    post.user = optional_string(p, "user", where);
    post.post_url = optional_string(p, "post_url", where);
    if (auto dt = optional_string(p, "datetime", where)) {
      post.datetime = parse_iso8601(*dt);
      if (!post.datetime) throw GoldFormatError(where + ": bad datetime \"" + *dt + "\"");
    }
    doc.posts.push_back(std::move(post));
  }
  return doc;
}

CorpusLoad load_gold_corpus(const std::filesystem::path& dir) {
  namespace fs = std::filesystem;
  CorpusLoad load;
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) throw CorpusEmptyError("not a directory: " + dir.string());

  std::map<std::string, fs::path> html;
  std::map<std::string, fs::path> gold;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (!entry.is_regular_file()) continue;
    const auto& p = entry.path();
    if (p.extension() == ".html") html[p.stem().string()] = p;
    else if (p.extension() == ".json") gold[p.stem().string()] = p;
  }

  for (const auto& [name, html_path] : html) {
    auto g = gold.find(name);
    if (g == gold.end()) {
      load.errors.push_back(name + ": missing " + name + ".json");
      continue;
    }
    try {
      load.documents.push_back(parse_gold_json(read_file(g->second), name, html_path));
    } catch (const Error& e) {
      load.errors.push_back(e.what());
    }
  }
  for (const auto& [name, path] : gold)
    if (!html.contains(name)) load.errors.push_back(name + ": missing " + name + ".html");

  if (load.documents.empty())
    throw CorpusEmptyError("no valid gold document in " + dir.string());
  return load;
}

std::vector<AlignedPair> align_posts(const std::vector<std::string>& gold,
                                     const std::vector<std::string>& extracted) {
  std::vector<AlignedPair> pairs;
  for (std::size_t g = 0; g < gold.size(); ++g)
    for (std::size_t e = 0; e < extracted.size(); ++e) {
      double sim = 1.0 - levenshtein_norm(gold[g], extracted[e]);
      if (sim > 0.0) pairs.push_back({g, e, sim});
    }
  std::stable_sort(pairs.begin(), pairs.end(), [](const AlignedPair& a, const AlignedPair& b) {
    if (a.similarity != b.similarity) return a.similarity > b.similarity;
    return std::tie(a.gold, a.extracted) < std::tie(b.gold, b.extracted);
  });

  std::vector<bool> gold_used(gold.size()), extracted_used(extracted.size());
  std::vector<AlignedPair> matched;
  for (const auto& p : pairs) {
    if (gold_used[p.gold] || extracted_used[p.extracted]) continue;
    gold_used[p.gold] = extracted_used[p.extracted] = true;
    matched.push_back(p);
  }
  std::sort(matched.begin(), matched.end(),
            [](const AlignedPair& a, const AlignedPair& b) { return a.gold < b.gold; });
  return matched;
}

PairScore score_document(const GoldDocument& gold, const ExtractionResult& result,
                         MetricFamily family) {
  if (gold.posts.empty()) throw MissingGoldError(gold.name + ": no gold posts");
  auto g_texts = gold_texts(gold);
  auto e_texts = extracted_texts(result);
  std::string g_joined = joined_texts(g_texts);

  PairScore score;
  switch (family) {
    case MetricFamily::kToken: {
      score = token_prf(TokenSet::from_text(g_joined), TokenSet::from_text(joined_texts(e_texts)));
      break;
    }
    case MetricFamily::kJaccard: {
      auto g = TokenSet::from_text(g_joined);
      auto e = TokenSet::from_text(joined_texts(e_texts));
      double j = jaccard(g, e);
      score.precision = score.recall = score.f1 = j;
      score.intersection_size = intersection_size(g, e);
      score.extracted_size = e.tokens.size();
      score.gold_size = g.tokens.size();
      break;
    }
    case MetricFamily::kLevenshtein: {
      double total = 0.0;
      auto matched = align_posts(g_texts, e_texts);
      for (const auto& p : matched) total += p.similarity;
      score.precision = safe_div(total, static_cast<double>(e_texts.size()), 0.0);
      score.recall = total / static_cast<double>(g_texts.size());
      score.f1 = f1_score(score.precision, score.recall);
      score.intersection_size = matched.size();
      score.extracted_size = e_texts.size();
      score.gold_size = g_texts.size();
      break;
    }
  }
  score.gold_chars = utf8::length(g_joined);
  return score;
}

std::optional<PairScore> score_metadata(const GoldDocument& gold, const ExtractionResult& result,
                                        MetadataField field) {
  auto has_gold = [&](const GoldPost& p) {
    switch (field) {
      case MetadataField::kUser: return p.user.has_value();
      case MetadataField::kDate: return p.datetime.has_value();
      case MetadataField::kUrl: return p.post_url.has_value();
    }
    return false;
  };
  auto has_extracted = [&](const ForumPost& p) {
    switch (field) {
      case MetadataField::kUser: return p.user.has_value();
      case MetadataField::kDate: return p.date.has_value();
      case MetadataField::kUrl: return p.url.has_value();
    }
    return false;
  };
  auto matches = [&](const GoldPost& g, const ForumPost& e) {
    switch (field) {
      case MetadataField::kUser: return trimmed_lower(*g.user) == trimmed_lower(*e.user);
      case MetadataField::kDate: return to_minute(*g.datetime) == to_minute(*e.date);
      case MetadataField::kUrl: return normalize_url(*g.post_url) == normalize_url(*e.url);
    }
    return false;
  };

  std::size_t gold_values = std::count_if(gold.posts.begin(), gold.posts.end(), has_gold);
  std::size_t extracted_values =
      std::count_if(result.posts.begin(), result.posts.end(), has_extracted);
  if (gold_values == 0 && extracted_values == 0) return std::nullopt;

  // Post positions are paired through the text alignment so that one
  // missed or spurious post does not shift every later comparison.
  std::size_t tp = 0;
  for (const auto& p : align_posts(gold_texts(gold), extracted_texts(result))) {
    const auto& g = gold.posts[p.gold];
    const auto& e = result.posts[p.extracted];
    if (has_gold(g) && has_extracted(e) && matches(g, e)) ++tp;
  }
  return count_score(tp, extracted_values, gold_values);
}

Pooling pooling_for(MetricFamily family) {
  switch (family) {
    case MetricFamily::kLevenshtein: return Pooling::kGoldLength;
    case MetricFamily::kJaccard: return Pooling::kJaccard;
    case MetricFamily::kToken: return Pooling::kCounts;
  }
  return Pooling::kCounts;
}

MetricReport aggregate(std::string name, Pooling pooling, std::vector<DocumentScore> per_document) {
  MetricReport report;
  report.name = std::move(name);
  report.per_document = std::move(per_document);
  const auto& docs = report.per_document;
  if (docs.empty()) return report;

  double n = static_cast<double>(docs.size());
  for (const auto& d : docs) {
    report.macro.precision += d.score.precision;
    report.macro.recall += d.score.recall;
    report.macro.f1 += d.score.f1;
  }
  report.macro.precision /= n;
  report.macro.recall /= n;
  report.macro.f1 /= n;

  switch (pooling) {
    case Pooling::kCounts: {
      std::size_t inter = 0, extracted = 0, gold = 0;
      for (const auto& d : docs) {
        inter += d.score.intersection_size;
        extracted += d.score.extracted_size;
        gold += d.score.gold_size;
      }
      PairScore pooled = count_score(inter, extracted, gold);
      report.micro = {pooled.precision, pooled.recall, pooled.f1};
      break;
    }
    case Pooling::kJaccard: {
      std::size_t inter = 0, uni = 0;
      for (const auto& d : docs) {
        inter += d.score.intersection_size;
        uni += d.score.extracted_size + d.score.gold_size - d.score.intersection_size;
      }
      double j = safe_div(static_cast<double>(inter), static_cast<double>(uni), 1.0);
      report.micro = {j, j, j};
      break;
    }
    case Pooling::kGoldLength: {
      double weight = 0.0, p = 0.0, r = 0.0;
      for (const auto& d : docs) {
        double w = static_cast<double>(d.score.gold_chars);
        weight += w;
        p += w * d.score.precision;
        r += w * d.score.recall;
      }
      if (weight > 0) {
        report.micro.precision = p / weight;
        report.micro.recall = r / weight;
      } else {
        report.micro.precision = report.macro.precision;
        report.micro.recall = report.macro.recall;
      }
      report.micro.f1 = f1_score(report.micro.precision, report.micro.recall);
      break;
    }
  }
  return report;
}

Timestamp reference_time(const std::vector<GoldDocument>& documents) {
  std::optional<Timestamp> latest;
  for (const auto& d : documents)
    for (const auto& p : d.posts)
      if (p.datetime && (!latest || *p.datetime > *latest)) latest = p.datetime;
  if (!latest) return *make_timestamp(9999, 12, 31);
  return *latest + std::chrono::days(1);
}

EvaluationReport evaluate_corpus(const CorpusLoad& corpus, const EvaluationOptions& options) {
  const auto& docs = corpus.documents;
  EvaluationReport report;
  report.now = options.now ? *options.now : reference_time(docs);
  report.load_errors = corpus.errors;

  // Documents are sorted by name up front; every worker writes only its own
  // slot, so the output never depends on scheduling.
  std::vector<std::size_t> order(docs.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return docs[a].name < docs[b].name; });

  std::vector<ExtractionResult> results(docs.size());
  std::vector<DocumentRun> runs(docs.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t slot; (slot = next.fetch_add(1)) < order.size();) {
      const GoldDocument& gold = docs[order[slot]];
      DocumentRun& run = runs[slot];
      run.document = gold.name;
      run.gold_posts = gold.posts.size();
      try {
        results[slot] = extract(read_file(gold.html_path), gold.url, options.extraction, report.now);
        run.extracted_posts = results[slot].posts.size();
        run.post_xpath = results[slot].post_xpath.str();
      } catch (const std::exception& e) {
        results[slot] = ExtractionResult{};
        results[slot].url = gold.url;
        run.error = e.what();
      }
    }
  };

  unsigned threads = options.threads ? options.threads : std::thread::hardware_concurrency();
  threads = std::clamp<unsigned>(threads, 1, static_cast<unsigned>(std::max<std::size_t>(docs.size(), 1)));
  if (threads == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(work);
  }

  for (MetricFamily family : options.families) {
    std::vector<DocumentScore> scores;
    for (std::size_t slot = 0; slot < order.size(); ++slot)
      scores.push_back({runs[slot].document, score_document(docs[order[slot]], results[slot], family)});
    report.families.push_back(aggregate(std::string(family_name(family)), pooling_for(family),
                                        std::move(scores)));
  }
  for (MetadataField field : {MetadataField::kUser, MetadataField::kDate, MetadataField::kUrl}) {
    std::vector<DocumentScore> scores;
    for (std::size_t slot = 0; slot < order.size(); ++slot)
      if (auto s = score_metadata(docs[order[slot]], results[slot], field))
        scores.push_back({runs[slot].document, *s});
    report.metadata.push_back(
        aggregate(std::string(field_name(field)), Pooling::kCounts, std::move(scores)));
  }
  report.runs = std::move(runs);
  return report;
}

}  // namespace harvest
