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

#include "harvest/timestamp.h"

#include <gtest/gtest.h>

namespace harvest {
namespace {

TEST(Timestamp, MakeValidatesCalendar) {
  EXPECT_TRUE(make_timestamp(2020, 2, 29));
  EXPECT_FALSE(make_timestamp(2019, 2, 29));
  EXPECT_FALSE(make_timestamp(2020, 13, 1));
  EXPECT_FALSE(make_timestamp(2020, 1, 1, 24));
  EXPECT_FALSE(make_timestamp(2020, 1, 1, 0, 60));
}

TEST(Timestamp, EpochFloorIsFirstWebRelease) {
  EXPECT_EQ(format_iso8601(epoch_floor()), "1993-04-30T00:00:00");
}

TEST(Timestamp, IsoRoundTrip) {
  const auto t = make_timestamp(2021, 3, 3, 9, 15, 7);
  ASSERT_TRUE(t);
  EXPECT_EQ(format_iso8601(*t), "2021-03-03T09:15:07");
  EXPECT_EQ(parse_iso8601("2021-03-03T09:15:07"), t);
}

TEST(Timestamp, ParsesIsoVariants) {
  EXPECT_EQ(parse_iso8601("2020-03-05"), make_timestamp(2020, 3, 5));
  EXPECT_EQ(parse_iso8601("2020-03-05T10:00"), make_timestamp(2020, 3, 5, 10));
  EXPECT_EQ(parse_iso8601("2020-03-05T10:00:00+02:00"), make_timestamp(2020, 3, 5, 8));
  EXPECT_EQ(parse_iso8601("2020-03-05 10:00:00.250Z"), make_timestamp(2020, 3, 5, 10));
  EXPECT_FALSE(parse_iso8601("yesterday"));
  EXPECT_FALSE(parse_iso8601("2020-02-30"));
}

}  // namespace
}  // namespace harvest
