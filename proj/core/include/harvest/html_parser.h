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

#ifndef HARVEST_HTML_PARSER_H_
#define HARVEST_HTML_PARSER_H_

#include <string>
#include <string_view>

#include "harvest/dom.h"

namespace harvest {

// Converts raw page bytes to UTF-8. The charset is sniffed from a byte
// order mark, then from a <meta> charset declaration in the first 1024
// bytes, and defaults to UTF-8. Undecodable sequences become U+FFFD.
std::string decode_html_bytes(std::string_view bytes,
                              std::string* detected_charset = nullptr);

// Parses HTML into a repaired DOM tree. Missing html, head and body
// elements are synthesized, unclosed elements are closed following the
// HTML5 tree-construction rules for the common cases (paragraphs, list
// items, table sections and cells, headings). Never fails on malformed
// markup; throws UrlError if `base_url` is not absolute.
Document parse_html(std::string_view bytes, std::string_view base_url);

std::string decode_entities(std::string_view text);

}  // namespace harvest

#endif  // HARVEST_HTML_PARSER_H_
