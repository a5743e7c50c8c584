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

#include "support/oracles.h"

#include <algorithm>
#include <fstream>
#include <iterator>
#include <numeric>
#include <stdexcept>

#include "harvest/errors.h"
#include "harvest/utf8.h"

namespace harvest::testing {

std::filesystem::path fixture_dir() { return HARVEST_FIXTURE_DIR; }

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::size_t dp_levenshtein(const std::u32string& a, const std::u32string& b) {
  std::vector<std::vector<std::size_t>> d(a.size() + 1, std::vector<std::size_t>(b.size() + 1));
  for (std::size_t i = 0; i <= a.size(); ++i) d[i][0] = i;
  for (std::size_t j = 0; j <= b.size(); ++j) d[0][j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    for (std::size_t j = 1; j <= b.size(); ++j) {
      std::size_t sub = d[i - 1][j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
      d[i][j] = std::min({d[i - 1][j] + 1, d[i][j - 1] + 1, sub});
    }
  }
  return d[a.size()][b.size()];
}

double dp_levenshtein_norm(const std::string& a, const std::string& b) {
  auto ua = utf8::decode(a);
  auto ub = utf8::decode(b);
  std::size_t longest = std::max(ua.size(), ub.size());
  if (longest == 0) return 0.0;
  return static_cast<double>(dp_levenshtein(ua, ub)) / static_cast<double>(longest);
}

SetCounts enumerate_sets(const std::vector<std::string>& gold,
                         const std::vector<std::string>& extracted) {
  auto dedupe = [](const std::vector<std::string>& v) {
    std::vector<std::string> out;
    for (const auto& s : v)
      if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
    return out;
  };
  auto g = dedupe(gold);
  auto e = dedupe(extracted);
  SetCounts c;
  c.gold = g.size();
  c.extracted = e.size();
  for (const auto& s : g)
    if (std::find(e.begin(), e.end(), s) != e.end()) ++c.common;
  c.united = c.gold + c.extracted - c.common;
  return c;
}

double oracle_jaccard(const SetCounts& c) {
  if (c.united == 0) return 1.0;
  return static_cast<double>(c.common) / static_cast<double>(c.united);
}

double oracle_precision(const SetCounts& c) {
  if (c.extracted == 0) return c.gold == 0 ? 1.0 : 0.0;
  return static_cast<double>(c.common) / static_cast<double>(c.extracted);
}

double oracle_recall(const SetCounts& c) {
  if (c.gold == 0) return c.extracted == 0 ? 1.0 : 0.0;
  return static_cast<double>(c.common) / static_cast<double>(c.gold);
}

double best_assignment(const std::vector<std::vector<double>>& sim) {
  const std::size_t rows = sim.size();
  const std::size_t cols = rows == 0 ? 0 : sim[0].size();
  // Pad to a square matrix with zero-similarity dummies and try every
  // permutation.
  const std::size_t n = std::max(rows, cols);
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  double best = 0.0;
  do {
    double total = 0.0;
    for (std::size_t r = 0; r < rows; ++r)
      if (perm[r] < cols) total += sim[r][perm[r]];
    best = std::max(best, total);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

std::optional<CandidatePath> exhaustive_locator(const Document& doc, const RenderedPage& page,
                                                const LocatorConfig& cfg) {
  std::vector<NodePath> paths;
  doc.for_each_element([&](const Node* n) { paths.push_back(node_path(n).generalized()); });
  std::sort(paths.begin(), paths.end());
  paths.erase(std::unique(paths.begin(), paths.end()), paths.end());

  std::optional<CandidatePath> best;
  for (const auto& p : paths) {
    std::size_t count = count_matching(doc, p);
    if (count <= static_cast<std::size_t>(cfg.min_post_count)) continue;
    double score = score_xpath(page, p, doc, cfg);
    if (score <= 0.0) continue;
    if (!best || score > best->score) best = CandidatePath{p, score, count};
  }
  return best;
}

std::string random_text(std::mt19937_64& rng, std::size_t max_len) {
  static const char32_t kAlphabet[] = {U'a', U'b', U'c', U' ', U'ä', U'ß', U'中', U'\U0001F600'};
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<std::size_t> pick(0, std::size(kAlphabet) - 1);
  std::u32string s(len(rng), U' ');
  for (auto& c : s) c = kAlphabet[pick(rng)];
  return utf8::encode(s);
}

std::vector<std::string> random_words(std::mt19937_64& rng, std::size_t max_len,
                                      std::size_t vocabulary) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<std::size_t> pick(0, vocabulary - 1);
  std::vector<std::string> words(len(rng));
  for (auto& w : words) w = "w" + std::to_string(pick(rng));
  return words;
}

}  // namespace harvest::testing
