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

// Generated-case property checks shared by the unit and acceptance tests.

#ifndef HARVEST_TESTS_PROPERTIES_H_
#define HARVEST_TESTS_PROPERTIES_H_

#include <cstdint>
#include <random>
#include <string>

namespace harvest::testing {

struct PropertyResult {
  std::string name;
  int cases = 0;
  int failures = 0;
  std::string first_failure;

  bool ok() const { return failures == 0 && cases > 0; }
};

struct PageOptions {
  int min_posts = 1;
  int max_posts = 8;
  double blacklisted_descendant = 0.0;  // chance a post holds a <button>
  double blacklisted_wrapper = 0.0;     // chance the thread sits in <aside>
  bool dates = false;
  bool long_names = false;
};

// A small forum-like page with random words, structure and metadata.
std::string random_forum_page(std::mt19937_64& rng, const PageOptions& opt);

PropertyResult check_score_bounds(std::uint64_t seed, int cases);
PropertyResult check_blacklist_veto(std::uint64_t seed, int cases);
PropertyResult check_ancestor_discount(std::uint64_t seed, int cases);
PropertyResult check_date_invariants(std::uint64_t seed, int cases);
PropertyResult check_name_caps(std::uint64_t seed, int cases);
PropertyResult check_micro_equals_macro(std::uint64_t seed, int cases);
PropertyResult check_macro_is_mean(std::uint64_t seed, int cases);

}  // namespace harvest::testing

#endif  // HARVEST_TESTS_PROPERTIES_H_
