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

#ifndef HARVEST_TIMESTAMP_H_
#define HARVEST_TIMESTAMP_H_

#include <chrono>
#include <optional>
#include <string>
#include <string_view>

namespace harvest {

// Second-resolution point in time. Forum dates usually carry no zone; they
// are kept as naive wall-clock values unless an explicit offset converts
// them to UTC.
using Timestamp = std::chrono::sys_seconds;

// nullopt for an invalid calendar date or time of day.
std::optional<Timestamp> make_timestamp(int year, int month, int day, int hour = 0,
                                        int minute = 0, int second = 0);

// 1993-04-30T00:00:00, the earliest plausible forum post date.
Timestamp epoch_floor();

// "YYYY-MM-DDTHH:MM:SS".
std::string format_iso8601(Timestamp t);

// Accepts YYYY-MM-DD with an optional 'T' or ' ' time part (HH:MM,
// HH:MM:SS, fractional seconds) and optional 'Z' or +HH:MM / +HHMM offset.
std::optional<Timestamp> parse_iso8601(std::string_view text);

}  // namespace harvest

#endif  // HARVEST_TIMESTAMP_H_
