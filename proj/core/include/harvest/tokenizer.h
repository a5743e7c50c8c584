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

#ifndef HARVEST_TOKENIZER_H_
#define HARVEST_TOKENIZER_H_

#include <string>
#include <string_view>
#include <vector>

namespace harvest {

// Splits on Unicode whitespace, punctuation and symbols and lowercases each
// token. No stop-word removal, no stemming. Shared by the locator's vector
// space model and the evaluation metrics.
std::vector<std::string> tokenize(std::string_view text);

}  // namespace harvest

#endif  // HARVEST_TOKENIZER_H_
