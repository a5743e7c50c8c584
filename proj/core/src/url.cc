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

#include "harvest/url.h"

#include <algorithm>
#include <cctype>
#include <vector>

#include "harvest/errors.h"

namespace harvest {
namespace {

std::string lower_ascii(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return out;
}

bool valid_scheme(std::string_view s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
  return std::all_of(s.begin(), s.end(), [](unsigned char c) {
    return std::isalnum(c) || c == '+' || c == '-' || c == '.';
  });
}

std::string remove_dot_segments(std::string_view input) {
  std::vector<std::string_view> out;
  const bool absolute = !input.empty() && input.front() == '/';
  std::size_t pos = absolute ? 1 : 0;
  bool trailing_slash = false;
  while (pos <= input.size()) {
    const std::size_t end = std::min(input.find('/', pos), input.size());
    const std::string_view segment = input.substr(pos, end - pos);
    trailing_slash = false;
    if (segment == ".") {
      trailing_slash = true;
    } else if (segment == "..") {
      if (!out.empty()) out.pop_back();
      trailing_slash = true;
    } else {
      out.push_back(segment);
    }
    pos = end + 1;
  }
  std::string result = absolute ? "/" : "";
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (i > 0) result.push_back('/');
    result.append(out[i]);
  }
  if (trailing_slash && !result.empty() && result.back() != '/') {
    result.push_back('/');
  }
  return result;
}

std::string merge_paths(const Url& base, std::string_view ref_path) {
  if (base.has_authority && base.path.empty()) {
    return "/" + std::string(ref_path);
  }
  const std::size_t slash = base.path.rfind('/');
  if (slash == std::string::npos) return std::string(ref_path);
  return base.path.substr(0, slash + 1) + std::string(ref_path);
}

}  // namespace

std::optional<Url> Url::parse(std::string_view text) {
  // Surrounding whitespace is common in scraped attributes.
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) {
    text.remove_prefix(1);
  }
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) {
    text.remove_suffix(1);
  }
  Url url;
  const std::size_t hash = text.find('#');
  if (hash != std::string_view::npos) {
    url.fragment = std::string(text.substr(hash + 1));
    text = text.substr(0, hash);
  }
  const std::size_t qmark = text.find('?');
  if (qmark != std::string_view::npos) {
    url.query = std::string(text.substr(qmark + 1));
    text = text.substr(0, qmark);
  }
  const std::size_t colon = text.find(':');
  if (colon != std::string_view::npos &&
      text.find('/') > colon && valid_scheme(text.substr(0, colon))) {
    url.scheme = lower_ascii(text.substr(0, colon));
    text = text.substr(colon + 1);
  }
  if (text.substr(0, 2) == "//") {
    url.has_authority = true;
    text.remove_prefix(2);
    const std::size_t end = std::min(text.find('/'), text.size());
    std::string_view authority = text.substr(0, end);
    text = text.substr(end);
    const std::size_t at = authority.rfind('@');
    if (at != std::string_view::npos) {
      url.userinfo = std::string(authority.substr(0, at));
      authority = authority.substr(at + 1);
    }
    const std::size_t port_colon = authority.rfind(':');
    if (port_colon != std::string_view::npos &&
        authority.find(']', port_colon) == std::string_view::npos) {
      const std::string_view port = authority.substr(port_colon + 1);
      if (!std::all_of(port.begin(), port.end(),
                       [](unsigned char c) { return std::isdigit(c); })) {
        return std::nullopt;
      }
      url.port = std::string(port);
      authority = authority.substr(0, port_colon);
    }
    url.host = lower_ascii(authority);
  }
  url.path = std::string(text);
  return url;
}

Url Url::parse_absolute(std::string_view text) {
  auto url = parse(text);
  if (!url || !url->is_absolute()) {
    throw UrlError("not an absolute URL: '" + std::string(text) + "'");
  }
  return *url;
}

Url Url::resolve(const Url& ref) const {
  Url target;
  if (!ref.scheme.empty()) {
    target = ref;
    target.path = remove_dot_segments(ref.path);
  } else {
    if (ref.has_authority) {
      target = ref;
      target.path = remove_dot_segments(ref.path);
    } else {
      target.has_authority = has_authority;
      target.userinfo = userinfo;
      target.host = host;
      target.port = port;
      if (ref.path.empty()) {
        target.path = path;
        target.query = ref.query ? ref.query : query;
      } else {
        target.path = ref.path.front() == '/'
                          ? remove_dot_segments(ref.path)
                          : remove_dot_segments(merge_paths(*this, ref.path));
        target.query = ref.query;
      }
    }
    target.scheme = scheme;
  }
  target.fragment = ref.fragment;
  return target;
}

Url Url::without_fragment() const {
  Url copy = *this;
  copy.fragment.reset();
  return copy;
}

std::string Url::str() const {
  std::string out;
  if (!scheme.empty()) out += scheme + ":";
  if (has_authority) {
    out += "//";
    if (!userinfo.empty()) out += userinfo + "@";
    out += host;
    if (!port.empty()) out += ":" + port;
  }
  out += path;
  if (query) out += "?" + *query;
  if (fragment) out += "#" + *fragment;
  return out;
}

std::optional<std::string> resolve_url(const Url& base, std::string_view href) {
  auto ref = Url::parse(href);
  if (!ref) return std::nullopt;
  Url target = base.resolve(*ref);
  if (target.scheme != "http" && target.scheme != "https") return std::nullopt;
  if (target.host.empty()) return std::nullopt;
  return target.str();
}

std::string percent_decode(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '%' && i + 2 < s.size() &&
        std::isxdigit(static_cast<unsigned char>(s[i + 1])) &&
        std::isxdigit(static_cast<unsigned char>(s[i + 2]))) {
      out.push_back(static_cast<char>(std::stoi(std::string(s.substr(i + 1, 2)), nullptr, 16)));
      i += 2;
    } else {
      out.push_back(s[i]);
    }
  }
  return out;
}

std::string normalize_url(std::string_view text) {
  auto url = Url::parse(text);
  if (!url) return std::string(text);
  if ((url->scheme == "http" && url->port == "80") ||
      (url->scheme == "https" && url->port == "443")) {
    url->port.clear();
  }
  if (url->has_authority && url->path.empty()) url->path = "/";
  if (url->fragment) {
    if (url->fragment->empty()) {
      url->fragment.reset();
    } else {
      url->fragment = percent_decode(*url->fragment);
    }
  }
  return url->str();
}

}  // namespace harvest
