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

#include "harvest/vsm.h"

#include <algorithm>
#include <cmath>

#include "harvest/tokenizer.h"

namespace harvest {

VsmVector VsmVector::from_tokens(std::vector<std::string> tokens) {
  std::sort(tokens.begin(), tokens.end());
  VsmVector v;
  for (auto& t : tokens) {
    if (!v.terms_.empty() && v.terms_.back().first == t) {
      v.terms_.back().second += 1.0;
    } else {
      v.terms_.emplace_back(std::move(t), 1.0);
    }
  }
  return v;
}

double VsmVector::weight(std::string_view term) const {
  const auto it = std::lower_bound(
      terms_.begin(), terms_.end(), term,
      [](const auto& entry, std::string_view t) { return entry.first < t; });
  return (it != terms_.end() && it->first == term) ? it->second : 0.0;
}

double VsmVector::squared_norm() const {
  double sum = 0.0;
  for (const auto& [_, w] : terms_) sum += w * w;
  return sum;
}

double VsmVector::norm() const { return std::sqrt(squared_norm()); }

double VsmVector::dot(const VsmVector& other) const {
  double sum = 0.0;
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() && b != other.terms_.end()) {
    if (a->first < b->first) {
      ++a;
    } else if (b->first < a->first) {
      ++b;
    } else {
      sum += a->second * b->second;
      ++a;
      ++b;
    }
  }
  return sum;
}

VsmVector build_vsm(std::string_view text) { return VsmVector::from_tokens(tokenize(text)); }

double cosine_similarity(const VsmVector& a, const VsmVector& b) {
  if (a.empty() || b.empty()) return 0.0;
  // Integral weights keep the product of squared norms exact, so identical
  // vectors give exactly 1.
  const double sim = a.dot(b) / std::sqrt(a.squared_norm() * b.squared_norm());
  return std::clamp(sim, 0.0, 1.0);
}

}  // namespace harvest
