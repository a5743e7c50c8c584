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

#include "harvest/date_parser.h"

#include <array>
#include <cctype>
#include <regex>
#include <utility>

#include "harvest/utf8.h"

namespace harvest {
namespace {

// Longest names first so alternation never stops at a prefix.
constexpr std::array<std::pair<std::string_view, int>, 39> kMonths = {{
    {"september", 9}, {"dezember", 12}, {"february", 2}, {"november", 11},
    {"december", 12}, {"oktober", 10},  {"january", 1},  {"october", 10},
    {"februar", 2},   {"jänner", 1},    {"januar", 1},   {"august", 8},
    {"april", 4},     {"march", 3},     {"maerz", 3},    {"märz", 3},
    {"june", 6},      {"july", 7},      {"juni", 6},     {"juli", 7},
    {"sept", 9},      {"jan", 1},       {"feb", 2},      {"mar", 3},
    {"mär", 3},       {"mrz", 3},       {"apr", 4},      {"may", 5},
    {"mai", 5},       {"jun", 6},       {"jul", 7},      {"aug", 8},
    {"sep", 9},       {"oct", 10},      {"okt", 10},     {"nov", 11},
    {"dec", 12},      {"dez", 12},      {"jän", 1},
}};

std::string month_alternation() {
  std::string alt;
  for (const auto& [name, _] : kMonths) {
    if (!alt.empty()) alt.push_back('|');
    alt += name;
  }
  return alt;
}

int month_number(std::string_view name) {
  for (const auto& [n, m] : kMonths) {
    if (n == name) return m;
  }
  return 0;
}

enum class Form { kIso, kDotted, kSlashed, kDayMonthName, kMonthNameDay, kRelative };

struct Pattern {
  Form form;
  std::regex re;
};

const std::vector<Pattern>& patterns() {
  static const std::vector<Pattern> kPatterns = [] {
    const std::string months = "(" + month_alternation() + ")";
    const auto flags = std::regex::ECMAScript | std::regex::optimize;
    std::vector<Pattern> p;
    p.push_back({Form::kIso,
                 std::regex(R"((\d{4})-(\d{2})-(\d{2})(?:[t ](\d{2}):(\d{2})(?::(\d{2}))?)"
                            R"((?:[.,]\d+)?(z|[+-]\d{2}:?\d{2})?)?)",
                            flags)});
    p.push_back({Form::kDotted, std::regex(R"((\d{1,2})\. ?(\d{1,2})\. ?(\d{4}|\d{2})(?!\d))", flags)});
    p.push_back({Form::kSlashed, std::regex(R"((\d{1,2})/(\d{1,2})/(\d{4}|\d{2})(?!\d))", flags)});
    p.push_back({Form::kDayMonthName,
                 std::regex(R"((\d{1,2})(?:st|nd|rd|th|\.)? (?:of )?)" + months +
                                R"(\.?,? (\d{4})(?!\d))",
                            flags)});
    p.push_back({Form::kMonthNameDay,
                 std::regex(months + R"(\.? (\d{1,2})(?:st|nd|rd|th)?,? (\d{4})(?!\d))", flags)});
    p.push_back({Form::kRelative, std::regex(R"((today|yesterday|heute|gestern)(?![a-z]))", flags)});
    return p;
  }();
  return kPatterns;
}

const std::regex& time_pattern() {
  static const std::regex kTime(
      R"(^ ?(?:,|at|um|-|@|\|)? ?(\d{1,2}):(\d{2})(?::(\d{2}))?(?: ?(am|pm|a\.m\.|p\.m\.))?(?: ?uhr)?)",
      std::regex::ECMAScript | std::regex::optimize);
  return kTime;
}

int expand_year(int year, std::size_t digits, Timestamp now) {
  if (digits != 2) return year;
  const std::chrono::year_month_day today{std::chrono::floor<std::chrono::days>(now)};
  const int current = static_cast<int>(today.year());
  const int candidate = 2000 + year;
  return candidate <= current ? candidate : 1900 + year;
}

int to_int(const std::ssub_match& m) { return m.matched ? std::stoi(m.str()) : 0; }

struct TimeOfDay {
  int hour = 0;
  int minute = 0;
  int second = 0;
  std::size_t length = 0;
};

TimeOfDay read_time(const std::string& text, std::size_t from) {
  std::smatch m;
  const std::string rest = text.substr(from, 40);
  if (!std::regex_search(rest, m, time_pattern())) return {};
  TimeOfDay t{to_int(m[1]), to_int(m[2]), to_int(m[3]),
              static_cast<std::size_t>(m.length(0))};
  if (m[4].matched) {
    const bool pm = m[4].str().front() == 'p';
    if (t.hour < 1 || t.hour > 12) return {};
    if (pm && t.hour != 12) t.hour += 12;
    if (!pm && t.hour == 12) t.hour = 0;
  }
  if (t.hour > 23 || t.minute > 59 || t.second > 59) return {};
  return t;
}

std::optional<Timestamp> interpret(Form form, const std::smatch& m, Timestamp now,
                                   int& offset_minutes) {
  int y = 0, mo = 0, d = 0;
  switch (form) {
    case Form::kIso: {
      const auto t = make_timestamp(to_int(m[1]), to_int(m[2]), to_int(m[3]), to_int(m[4]),
                                    to_int(m[5]), to_int(m[6]));
      if (!t) return std::nullopt;
      if (m[7].matched && m[7].str() != "z") {
        const std::string z = m[7].str();
        const int sign = z[0] == '-' ? -1 : 1;
        const std::string digits = z.substr(1);
        const int hh = std::stoi(digits.substr(0, 2));
        const int mm = std::stoi(digits.substr(digits.size() - 2));
        offset_minutes = sign * (hh * 60 + mm);
      }
      return t;
    }
    case Form::kDotted:
      d = to_int(m[1]), mo = to_int(m[2]);
      y = expand_year(to_int(m[3]), m[3].length(), now);
      break;
    case Form::kSlashed:
      mo = to_int(m[1]), d = to_int(m[2]);
      if (mo > 12) std::swap(mo, d);
      y = expand_year(to_int(m[3]), m[3].length(), now);
      break;
    case Form::kDayMonthName:
      d = to_int(m[1]), mo = month_number(m[2].str()), y = to_int(m[3]);
      break;
    case Form::kMonthNameDay:
      mo = month_number(m[1].str()), d = to_int(m[2]), y = to_int(m[3]);
      break;
    case Form::kRelative: {
      auto day = std::chrono::floor<std::chrono::days>(now);
      const std::string word = m[1].str();
      if (word == "yesterday" || word == "gestern") day -= std::chrono::days{1};
      return Timestamp{day};
    }
  }
  return make_timestamp(y, mo, d);
}

}  // namespace

std::optional<DateMatch> find_date(std::string_view raw, Timestamp now) {
  const std::string text = utf8::to_lower(utf8::collapse_whitespace(raw));
  std::optional<DateMatch> best;
  std::size_t best_pos = 0;
  for (const auto& pattern : patterns()) {
    for (auto it = std::sregex_iterator(text.begin(), text.end(), pattern.re);
         it != std::sregex_iterator(); ++it) {
      const std::smatch& m = *it;
      const auto pos = static_cast<std::size_t>(m.position(0));
      if (best && pos > best_pos) break;
      if (pos > 0) {
        const auto prev = static_cast<unsigned char>(text[pos - 1]);
        if (std::isalnum(prev)) continue;
      }
      int offset_minutes = 0;
      auto value = interpret(pattern.form, m, now, offset_minutes);
      if (!value) continue;
      std::size_t end = pos + static_cast<std::size_t>(m.length(0));
      const bool has_time = pattern.form == Form::kIso && m[4].matched;
      if (!has_time) {
        const TimeOfDay t = read_time(text, end);
        if (t.length > 0) {
          *value += std::chrono::hours{t.hour} + std::chrono::minutes{t.minute} +
                    std::chrono::seconds{t.second};
          end += t.length;
        }
      }
      *value -= std::chrono::minutes{offset_minutes};
      const std::size_t length = end - pos;
      if (!best || pos < best_pos || length > best->matched.size()) {
        best = DateMatch{*value, text.substr(pos, length)};
        best_pos = pos;
      }
      break;
    }
  }
  return best;
}

}  // namespace harvest
