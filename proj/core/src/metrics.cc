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

#include "harvest/metrics.h"

#include <algorithm>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "harvest/tokenizer.h"
#include "harvest/utf8.h"

namespace harvest {

std::size_t levenshtein_distance(std::u32string_view a, std::u32string_view b) {
  // Strip the common affixes; they never contribute to the distance.
  while (!a.empty() && !b.empty() && a.front() == b.front()) {
    a.remove_prefix(1);
    b.remove_prefix(1);
  }
  while (!a.empty() && !b.empty() && a.back() == b.back()) {
    a.remove_suffix(1);
    b.remove_suffix(1);
  }
  if (a.size() < b.size()) std::swap(a, b);
  if (b.empty()) return a.size();

  // Pattern is the shorter string, one bit per position.
  const std::u32string_view pattern = b;
  const std::u32string_view text = a;
  const std::size_t words = (pattern.size() + 63) / 64;
  std::unordered_map<char32_t, std::vector<std::uint64_t>> peq;
  for (std::size_t i = 0; i < pattern.size(); ++i) {
    auto& bits = peq[pattern[i]];
    if (bits.empty()) bits.assign(words, 0);
    bits[i / 64] |= std::uint64_t{1} << (i % 64);
  }
  const std::vector<std::uint64_t> no_match(words, 0);
  const std::uint64_t last = std::uint64_t{1} << ((pattern.size() - 1) % 64);

  std::vector<std::uint64_t> vp(words, ~std::uint64_t{0});
  std::vector<std::uint64_t> vn(words, 0);
  std::size_t distance = pattern.size();

  for (const char32_t c : text) {
    const auto found = peq.find(c);
    const std::vector<std::uint64_t>& eq = found == peq.end() ? no_match : found->second;
    // The top row of the DP matrix increases by one per column.
    std::uint64_t hp_carry = 1;
    std::uint64_t hn_carry = 0;
    for (std::size_t w = 0; w < words; ++w) {
      const std::uint64_t x = eq[w] | hn_carry;
      const std::uint64_t d0 = (((x & vp[w]) + vp[w]) ^ vp[w]) | x | vn[w];
      std::uint64_t hp = vn[w] | ~(d0 | vp[w]);
      std::uint64_t hn = d0 & vp[w];
      const std::uint64_t hp_in = hp_carry;
      const std::uint64_t hn_in = hn_carry;
      if (w + 1 < words) {
        hp_carry = hp >> 63;
        hn_carry = hn >> 63;
      } else {
        hp_carry = (hp & last) != 0;
        hn_carry = (hn & last) != 0;
      }
      hp = (hp << 1) | hp_in;
      hn = (hn << 1) | hn_in;
      vp[w] = hn | ~(d0 | hp);
      vn[w] = hp & d0;
    }
    distance += hp_carry;
    distance -= hn_carry;
  }
  return distance;
}

std::size_t levenshtein_distance(std::string_view a, std::string_view b) {
  return levenshtein_distance(utf8::decode(a), utf8::decode(b));
}

double levenshtein_norm(std::string_view gold, std::string_view extracted) {
  const std::u32string g = utf8::decode(gold);
  const std::u32string e = utf8::decode(extracted);
  const std::size_t longest = std::max(g.size(), e.size());
  if (longest == 0) return 0.0;
  return static_cast<double>(levenshtein_distance(g, e)) / static_cast<double>(longest);
}

TokenSet TokenSet::from_text(std::string_view text) {
  TokenSet set;
  auto tokens = tokenize(text);
  set.token_count = tokens.size();
  set.tokens.insert(std::make_move_iterator(tokens.begin()),
                    std::make_move_iterator(tokens.end()));
  return set;
}

std::size_t intersection_size(const TokenSet& a, const TokenSet& b) {
  std::size_t n = 0;
  auto i = a.tokens.begin();
  auto j = b.tokens.begin();
  while (i != a.tokens.end() && j != b.tokens.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++n, ++i, ++j;
    }
  }
  return n;
}

double jaccard(const TokenSet& gold, const TokenSet& extracted) {
  const std::size_t common = intersection_size(gold, extracted);
  const std::size_t united = gold.tokens.size() + extracted.tokens.size() - common;
  if (united == 0) return 1.0;
  return static_cast<double>(common) / static_cast<double>(united);
}

double f1_score(double precision, double recall) {
  if (precision + recall <= 0.0) return 0.0;
  return 2.0 * precision * recall / (precision + recall);
}

PairScore count_score(std::size_t true_positives, std::size_t extracted, std::size_t gold) {
  PairScore s;
  s.intersection_size = true_positives;
  s.extracted_size = extracted;
  s.gold_size = gold;
  s.precision = extracted == 0 ? (gold == 0 ? 1.0 : 0.0)
                               : static_cast<double>(true_positives) / static_cast<double>(extracted);
  s.recall = gold == 0 ? (extracted == 0 ? 1.0 : 0.0)
                       : static_cast<double>(true_positives) / static_cast<double>(gold);
  s.f1 = f1_score(s.precision, s.recall);
  return s;
}

PairScore token_prf(const TokenSet& gold, const TokenSet& extracted) {
  return count_score(intersection_size(gold, extracted), extracted.tokens.size(),
                     gold.tokens.size());
}

}  // namespace harvest
