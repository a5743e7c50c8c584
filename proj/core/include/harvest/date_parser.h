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

#ifndef HARVEST_DATE_PARSER_H_
#define HARVEST_DATE_PARSER_H_

#include <optional>
#include <string>
#include <string_view>

#include "harvest/timestamp.h"

namespace harvest {

struct DateMatch {
  Timestamp value;
  std::string matched;  // the recognized fragment, lowercased
};

// Finds the first date in free text. Recognized forms, each optionally
// followed by a time ("14:30", "2:30 pm", "um 14:30 Uhr", "at 10:05"):
//
//   2020-03-05, 2020-03-05T14:30:00+01:00    ISO 8601
//   05.03.2020, 5.3.20                       day.month.year
//   03/05/2020                               month/day/year; day/month/year
//                                            when the first field exceeds 12
//   5 March 2020, 5th Mar 2020, 5. März 2020 day month-name year
//   March 5, 2020, Mar 5th 2020              month-name day year
//   Today, Yesterday, Heute, Gestern         relative to `now`
//
// Month names are English or German, full or abbreviated. Two-digit years
// map to the latest century not after `now`. Dates without a year are not
// recognized.
std::optional<DateMatch> find_date(std::string_view text, Timestamp now);

}  // namespace harvest

#endif  // HARVEST_DATE_PARSER_H_
