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

// Independent reference implementations used to check the library.

#ifndef HARVEST_TESTS_ORACLES_H_
#define HARVEST_TESTS_ORACLES_H_

#include <filesystem>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "harvest/dom.h"
#include "harvest/post_locator.h"
#include "harvest/render.h"

namespace harvest::testing {

std::filesystem::path fixture_dir();
std::string read_file(const std::filesystem::path& path);

// Full-matrix Wagner-Fischer edit distance.
std::size_t dp_levenshtein(const std::u32string& a, const std::u32string& b);
double dp_levenshtein_norm(const std::string& a, const std::string& b);

// Set metrics by explicit enumeration over deduplicated token lists.
struct SetCounts {
  std::size_t gold = 0;
  std::size_t extracted = 0;
  std::size_t common = 0;
  std::size_t united = 0;
};
SetCounts enumerate_sets(const std::vector<std::string>& gold,
                         const std::vector<std::string>& extracted);
double oracle_jaccard(const SetCounts& c);
double oracle_precision(const SetCounts& c);
double oracle_recall(const SetCounts& c);

// Best total similarity over all one-to-one pairings (exponential; keep the
// inputs small).
double best_assignment(const std::vector<std::vector<double>>& sim);

// Scores the generalized path of every element in the document and returns
// the best admitted one, or nullopt when none is admitted.
std::optional<CandidatePath> exhaustive_locator(const Document& doc, const RenderedPage& page,
                                                const LocatorConfig& cfg);

// Random UTF-8 string of up to `max_len` code points over a small mixed
// alphabet (ASCII, Latin-1, CJK, an astral emoji), so collisions are common.
std::string random_text(std::mt19937_64& rng, std::size_t max_len);

// Random list of words from a pool of `vocabulary` words.
std::vector<std::string> random_words(std::mt19937_64& rng, std::size_t max_len,
                                      std::size_t vocabulary);

}  // namespace harvest::testing

#endif  // HARVEST_TESTS_ORACLES_H_
