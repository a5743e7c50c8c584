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

#ifndef HARVEST_UTF8_H_
#define HARVEST_UTF8_H_

#include <cstddef>
#include <string>
#include <string_view>

namespace harvest::utf8 {

inline constexpr char32_t kReplacement = 0xFFFD;

// Decodes one code point starting at `pos` and advances `pos`. Invalid or
// truncated sequences yield U+FFFD and consume a single byte.
char32_t next(std::string_view s, std::size_t& pos);

void append(std::string& out, char32_t cp);

std::u32string decode(std::string_view s);
std::string encode(std::u32string_view s);

// Replaces every invalid byte sequence with U+FFFD.
std::string sanitize(std::string_view s);

std::size_t length(std::string_view s);

// Simple (one-to-one) lowercase mapping for Latin, Greek and Cyrillic.
char32_t to_lower(char32_t cp);
std::string to_lower(std::string_view s);

bool is_space(char32_t cp);

// True for code points that separate tokens: whitespace, punctuation and
// symbols. Letters, digits and marks of any script are word characters.
bool is_separator(char32_t cp);

// Collapses whitespace runs to one ASCII space and trims both ends.
std::string collapse_whitespace(std::string_view s);

bool is_blank(std::string_view s);

}  // namespace harvest::utf8

#endif  // HARVEST_UTF8_H_
