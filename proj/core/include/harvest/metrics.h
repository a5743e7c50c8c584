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

#ifndef HARVEST_METRICS_H_
#define HARVEST_METRICS_H_

#include <cstddef>
#include <set>
#include <string>
#include <string_view>

namespace harvest {

// Edit distance over Unicode code points (unit-cost insert, delete,
// substitute). Uses the bit-parallel algorithm of Myers and Hyyrö, which
// runs in O(ceil(m/64) * n).
std::size_t levenshtein_distance(std::u32string_view a, std::u32string_view b);
std::size_t levenshtein_distance(std::string_view a, std::string_view b);

// Edit distance divided by the longer length, in code points; 0 when both
// strings are empty.
double levenshtein_norm(std::string_view gold, std::string_view extracted);

struct TokenSet {
  std::set<std::string> tokens;
  std::size_t token_count = 0;  // tokens before deduplication

  static TokenSet from_text(std::string_view text);
};

// |T_g ∩ T_e| / |T_g ∪ T_e|; 1 when both sets are empty.
double jaccard(const TokenSet& gold, const TokenSet& extracted);

std::size_t intersection_size(const TokenSet& a, const TokenSet& b);

struct PairScore {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  std::size_t intersection_size = 0;
  std::size_t extracted_size = 0;
  std::size_t gold_size = 0;
  // Gold text length in code points; the micro weight for similarity-based
  // scores.
  std::size_t gold_chars = 0;
};

// Harmonic mean; 0 when p + r == 0.
double f1_score(double precision, double recall);

// P = tp / extracted, R = tp / gold. An empty denominator yields 1 if the
// other side is empty too, else 0.
PairScore count_score(std::size_t true_positives, std::size_t extracted, std::size_t gold);

// Token precision, recall and F1 over the two token sets.
PairScore token_prf(const TokenSet& gold, const TokenSet& extracted);

}  // namespace harvest

#endif  // HARVEST_METRICS_H_
