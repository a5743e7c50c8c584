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

#include "fetch.h"

#include <memory>

#include <curl/curl.h>

namespace harvest::tools {

namespace {

std::size_t write_body(char* data, std::size_t size, std::size_t count, void* user) {
  static_cast<std::string*>(user)->append(data, size * count);
  return size * count;
}

struct Attempt {
  bool retryable = false;
  std::string error;
  FetchedPage page;
};

Attempt get_once(const std::string& url, const HttpConfig& http) {
  Attempt a;
  std::unique_ptr<CURL, decltype(&curl_easy_cleanup)> curl(curl_easy_init(), curl_easy_cleanup);
  if (!curl) {
    a.error = "curl initialisation failed";
    return a;
  }
  CURL* h = curl.get();
  curl_easy_setopt(h, CURLOPT_URL, url.c_str());
  curl_easy_setopt(h, CURLOPT_USERAGENT, http.user_agent.c_str());
  curl_easy_setopt(h, CURLOPT_FOLLOWLOCATION, 1L);
  curl_easy_setopt(h, CURLOPT_MAXREDIRS, 10L);
  curl_easy_setopt(h, CURLOPT_PROTOCOLS, static_cast<long>(CURLPROTO_HTTP | CURLPROTO_HTTPS));
  curl_easy_setopt(h, CURLOPT_REDIR_PROTOCOLS, static_cast<long>(CURLPROTO_HTTP | CURLPROTO_HTTPS));
  curl_easy_setopt(h, CURLOPT_TIMEOUT, http.timeout_seconds);
  curl_easy_setopt(h, CURLOPT_ACCEPT_ENCODING, "");
  curl_easy_setopt(h, CURLOPT_WRITEFUNCTION, write_body);
  curl_easy_setopt(h, CURLOPT_WRITEDATA, &a.page.body);

  CURLcode rc = curl_easy_perform(h);
  if (rc != CURLE_OK) {
    a.retryable = true;
    a.error = curl_easy_strerror(rc);
    return a;
  }
  long status = 0;
  curl_easy_getinfo(h, CURLINFO_RESPONSE_CODE, &status);
  if (status >= 400) {
    a.retryable = status >= 500;
    a.error = "HTTP status " + std::to_string(status);
    return a;
  }
  char* effective = nullptr;
  curl_easy_getinfo(h, CURLINFO_EFFECTIVE_URL, &effective);
  a.page.effective_url = effective ? effective : url;
  return a;
}

}  // namespace

FetchedPage fetch_url(const std::string& url, const HttpConfig& http) {
  static const bool initialised = curl_global_init(CURL_GLOBAL_DEFAULT) == CURLE_OK;
  if (!initialised) throw FetchError("curl global initialisation failed");

  Attempt a = get_once(url, http);
  if (a.error.empty()) return std::move(a.page);
  if (a.retryable) {
    a = get_once(url, http);
    if (a.error.empty()) return std::move(a.page);
  }
  throw FetchError("fetching " + url + ": " + a.error);
}

}  // namespace harvest::tools
