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

#ifndef HARVEST_TOOLS_FETCH_H_
#define HARVEST_TOOLS_FETCH_H_

#include <string>

#include "harvest/config.h"
#include "harvest/errors.h"

namespace harvest::tools {

class FetchError : public Error {
 public:
  using Error::Error;
};

struct FetchedPage {
  std::string effective_url;  // after redirects
  std::string body;
};

// HTTP(S) GET following redirects. A transport failure or 5xx status is
// retried once; throws FetchError when the second attempt fails too.
FetchedPage fetch_url(const std::string& url, const HttpConfig& http);

}  // namespace harvest::tools

#endif  // HARVEST_TOOLS_FETCH_H_
