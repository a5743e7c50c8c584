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

#ifndef HARVEST_ERRORS_H_
#define HARVEST_ERRORS_H_

#include <stdexcept>
#include <string>

namespace harvest {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class EncodingError : public Error {
 public:
  using Error::Error;
};

class UrlError : public Error {
 public:
  using Error::Error;
};

class PathSyntaxError : public Error {
 public:
  using Error::Error;
};

class PathResolutionError : public Error {
 public:
  using Error::Error;
};

// The page has no repeating structure that qualifies as a post list.
class NoPostsFound : public Error {
 public:
  using Error::Error;
};

class MissingGoldError : public Error {
 public:
  using Error::Error;
};

class GoldFormatError : public Error {
 public:
  using Error::Error;
};

class CorpusEmptyError : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace harvest

#endif  // HARVEST_ERRORS_H_
