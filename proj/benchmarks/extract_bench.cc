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

#include <fstream>
#include <sstream>
#include <string>

#include <benchmark/benchmark.h>

#include "harvest/html_parser.h"
#include "harvest/pipeline.h"
#include "harvest/post_locator.h"
#include "harvest/render.h"

namespace {

std::string load(const char* name) {
  std::ifstream in(std::string(HARVEST_BENCH_CORPUS) + "/" + name + ".html", std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

const harvest::Timestamp kNow = *harvest::make_timestamp(2024, 1, 1);

void BM_Parse(benchmark::State& state) {
  const std::string html = load("linux_div");
  for (auto _ : state) {
    benchmark::DoNotOptimize(harvest::parse_html(html, "http://bench.example/"));
  }
  state.SetBytesProcessed(static_cast<int64_t>(state.iterations() * html.size()));
}
BENCHMARK(BM_Parse);

void BM_Locate(benchmark::State& state) {
  const std::string html = load("cars_table");
  const harvest::Document doc = harvest::parse_html(html, "http://bench.example/");
  const harvest::RenderedPage page = harvest::render_text(doc);
  const harvest::LocatorConfig cfg;
  for (auto _ : state) {
    benchmark::DoNotOptimize(harvest::locate_post_path(page, doc, cfg));
  }
}
BENCHMARK(BM_Locate);

void BM_Extract(benchmark::State& state, const char* name) {
  const std::string html = load(name);
  for (auto _ : state) {
    benchmark::DoNotOptimize(harvest::extract(html, "http://bench.example/t", {}, kNow));
  }
  state.SetBytesProcessed(static_cast<int64_t>(state.iterations() * html.size()));
}
BENCHMARK_CAPTURE(BM_Extract, div, "linux_div");
BENCHMARK_CAPTURE(BM_Extract, table, "astro_table");
BENCHMARK_CAPTURE(BM_Extract, list, "birds_list");

}  // namespace
