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

#ifndef HARVEST_URL_H_
#define HARVEST_URL_H_

#include <optional>
#include <string>
#include <string_view>

namespace harvest {

// A parsed RFC 3986 URI reference. Scheme and host are stored lowercase.
struct Url {
  std::string scheme;
  bool has_authority = false;
  std::string userinfo;
  std::string host;
  std::string port;
  std::string path;
  std::optional<std::string> query;
  std::optional<std::string> fragment;

  static std::optional<Url> parse(std::string_view text);

  // Parses and requires scheme and host; throws UrlError otherwise.
  static Url parse_absolute(std::string_view text);

  bool is_absolute() const { return !scheme.empty() && !host.empty(); }

  // RFC 3986 section 5.2 reference resolution against this base.
  Url resolve(const Url& reference) const;

  Url without_fragment() const;

  std::string str() const;
};

// Resolves `href` against `base`; nullopt for unparseable references and
// for schemes other than http(s).
std::optional<std::string> resolve_url(const Url& base, std::string_view href);

// Canonical form used for equality: lowercase scheme and host, default port
// dropped, empty path as "/", percent-decoded fragment, empty fragment
// removed.
std::string normalize_url(std::string_view url);

std::string percent_decode(std::string_view s);

}  // namespace harvest

#endif  // HARVEST_URL_H_
