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

#ifndef HARVEST_SERIALIZE_H_
#define HARVEST_SERIALIZE_H_

#include <string>

#include "harvest/evaluation.h"
#include "harvest/pipeline.h"

namespace harvest {

// {"url", "post_xpath", "posts": [{"index", "text", "user", "date", "url"}]}
// with absent metadata written as null. Pretty-printed, trailing newline.
std::string extraction_to_json(const ExtractionResult& result);

// Human-readable listing of the posts, one block per post.
std::string extraction_to_text(const ExtractionResult& result);

std::string report_to_json(const EvaluationReport& report);

// Aligned table with columns mP mR mF1 MP MR MF1, one row per metric family
// and metadata field, followed by per-document F1 values.
std::string report_to_text(const EvaluationReport& report);

}  // namespace harvest

#endif  // HARVEST_SERIALIZE_H_
