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

#ifndef HARVEST_VSM_H_
#define HARVEST_VSM_H_

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace harvest {

// Bag-of-words term-frequency vector. Terms are kept sorted so dot products
// are a linear merge and iteration order is deterministic.
class VsmVector {
 public:
  VsmVector() = default;

  static VsmVector from_tokens(std::vector<std::string> tokens);

  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  // 0 for absent terms.
  double weight(std::string_view term) const;

  double norm() const;
  double squared_norm() const;
  double dot(const VsmVector& other) const;

  const std::vector<std::pair<std::string, double>>& terms() const { return terms_; }

 private:
  std::vector<std::pair<std::string, double>> terms_;
};

VsmVector build_vsm(std::string_view text);

// Cosine of the angle between two term vectors, in [0, 1]. Returns 0 if
// either vector is empty.
double cosine_similarity(const VsmVector& a, const VsmVector& b);

}  // namespace harvest

#endif  // HARVEST_VSM_H_
