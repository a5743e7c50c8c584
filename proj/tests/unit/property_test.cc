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

#include <gtest/gtest.h>

#include "support/properties.h"

namespace harvest::testing {
namespace {

constexpr int kCases = 500;

void expect_holds(const PropertyResult& r) {
  EXPECT_EQ(r.cases, kCases) << r.name;
  EXPECT_TRUE(r.ok()) << r.name << ": " << r.failures << " failures, first: " << r.first_failure;
}

TEST(Property, ScoreBounds) { expect_holds(check_score_bounds(1, kCases)); }
TEST(Property, BlacklistVeto) { expect_holds(check_blacklist_veto(2, kCases)); }
TEST(Property, AncestorDiscount) { expect_holds(check_ancestor_discount(3, kCases)); }
TEST(Property, DateInvariants) { expect_holds(check_date_invariants(4, kCases)); }
TEST(Property, NameCaps) { expect_holds(check_name_caps(5, kCases)); }
TEST(Property, MicroEqualsMacro) { expect_holds(check_micro_equals_macro(6, kCases)); }
TEST(Property, MacroIsMean) { expect_holds(check_macro_is_mean(7, kCases)); }

}  // namespace
}  // namespace harvest::testing
