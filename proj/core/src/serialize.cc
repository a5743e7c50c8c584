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

#include "harvest/serialize.h"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace harvest {

namespace {

using nlohmann::ordered_json;

template <typename T, typename F>
ordered_json or_null(const std::optional<T>& v, F&& f) {
  return v ? ordered_json(f(*v)) : ordered_json(nullptr);
}

ordered_json averages_json(const Averages& a) {
  return {{"precision", a.precision}, {"recall", a.recall}, {"f1", a.f1}};
}

ordered_json metric_json(const MetricReport& m) {
  ordered_json docs = ordered_json::array();
  for (const auto& d : m.per_document) {
    docs.push_back({{"document", d.document},
                    {"precision", d.score.precision},
                    {"recall", d.score.recall},
                    {"f1", d.score.f1},
                    {"intersection_size", d.score.intersection_size},
                    {"extracted_size", d.score.extracted_size},
                    {"gold_size", d.score.gold_size}});
  }
  return {{"name", m.name},
          {"micro", averages_json(m.micro)},
          {"macro", averages_json(m.macro)},
          {"per_document", std::move(docs)}};
}

std::string fixed(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

std::string pad(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

std::string lpad(std::string s, std::size_t width) {
  if (s.size() < width) s.insert(0, width - s.size(), ' ');
  return s;
}

}  // namespace

std::string extraction_to_json(const ExtractionResult& result) {
  auto str = [](const std::string& s) { return s; };
  ordered_json posts = ordered_json::array();
  for (const auto& p : result.posts) {
    posts.push_back({{"index", p.index},
                     {"text", p.text},
                     {"user", or_null(p.user, str)},
                     {"date", or_null(p.date, format_iso8601)},
                     {"url", or_null(p.url, str)}});
  }
  ordered_json root = {
      {"url", result.url}, {"post_xpath", result.post_xpath.str()}, {"posts", std::move(posts)}};
  return root.dump(2, ' ', false, ordered_json::error_handler_t::replace) + "\n";
}

std::string extraction_to_text(const ExtractionResult& result) {
  std::ostringstream out;
  out << "url:        " << result.url << "\n"
      << "post xpath: " << result.post_xpath.str() << "\n"
      << "posts:      " << result.posts.size() << "\n";
  for (const auto& p : result.posts) {
    out << "\n[" << p.index << "]";
    if (p.user) out << " " << *p.user;
    if (p.date) out << " " << format_iso8601(*p.date);
    out << "\n";
    if (p.url) out << *p.url << "\n";
    out << p.text << "\n";
  }
  return out.str();
}

std::string report_to_json(const EvaluationReport& report) {
  ordered_json runs = ordered_json::array();
  for (const auto& r : report.runs) {
    runs.push_back({{"document", r.document},
                    {"gold_posts", r.gold_posts},
                    {"extracted_posts", r.extracted_posts},
                    {"post_xpath", r.post_xpath},
                    {"error", r.error ? ordered_json(*r.error) : ordered_json(nullptr)}});
  }
  ordered_json families = ordered_json::array();
  for (const auto& m : report.families) families.push_back(metric_json(m));
  ordered_json metadata = ordered_json::array();
  for (const auto& m : report.metadata) metadata.push_back(metric_json(m));

  ordered_json root = {{"now", format_iso8601(report.now)},
                       {"documents", std::move(runs)},
                       {"families", std::move(families)},
                       {"metadata", std::move(metadata)},
                       {"load_errors", report.load_errors}};
  return root.dump(2, ' ', false, ordered_json::error_handler_t::replace) + "\n";
}

std::string report_to_text(const EvaluationReport& report) {
  std::ostringstream out;
  std::size_t name_width = 12;
  for (const auto& r : report.runs) name_width = std::max(name_width, r.document.size() + 2);

  out << "reference time: " << format_iso8601(report.now) << "\n\n";
  auto header = [&](const char* title) {
    out << pad(title, name_width);
    for (const char* col : {"mP", "mR", "mF1", "MP", "MR", "MF1"}) out << lpad(col, 8);
    out << "\n";
  };
  auto row = [&](const MetricReport& m) {
    out << pad(m.name, name_width);
    for (double v : {m.micro.precision, m.micro.recall, m.micro.f1, m.macro.precision,
                     m.macro.recall, m.macro.f1})
      out << lpad(fixed(v), 8);
    out << "\n";
  };

  if (!report.families.empty()) {
    header("text");
    for (const auto& m : report.families) row(m);
    out << "\n";
  }
  header("metadata");
  for (const auto& m : report.metadata) row(m);

  out << "\n" << pad("document", name_width) << lpad("gold", 6) << lpad("found", 6);
  for (const auto& m : report.families) out << lpad(m.name.substr(0, 3) + " F1", 9);
  out << "\n";
  for (std::size_t i = 0; i < report.runs.size(); ++i) {
    const auto& r = report.runs[i];
    out << pad(r.document, name_width) << lpad(std::to_string(r.gold_posts), 6)
        << lpad(std::to_string(r.extracted_posts), 6);
    for (const auto& m : report.families) out << lpad(fixed(m.per_document[i].score.f1), 9);
    if (r.error) out << "  error: " << *r.error;
    out << "\n";
  }
  for (const auto& e : report.load_errors) out << "skipped: " << e << "\n";
  return out.str();
}

}  // namespace harvest
