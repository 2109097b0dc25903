// Copyright 2026 The lgcompile Authors.
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

#include <benchmark/benchmark.h>

#include <filesystem>

#include "lgc/extractor.hpp"
#include "lgc/label.hpp"
#include "lgc/normalizer.hpp"
#include "lgc/text.hpp"

namespace {

namespace fs = std::filesystem;

const fs::path kData = LGC_DATA_DIR;
const fs::path kTestData = LGC_TEST_DATA_DIR;

void BM_ParseLabel(benchmark::State& state) {
  std::vector<std::string> labels;
  for (const auto& rec : lgc::text::read_records(kData / "labels.txt")) labels.push_back(rec.fields.at(0));
  for (auto _ : state) {
    for (const auto& l : labels) benchmark::DoNotOptimize(lgc::parse_label(l));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(labels.size()));
}
BENCHMARK(BM_ParseLabel);

void BM_NormalizeSeed(benchmark::State& state) {
  const auto rules = lgc::RuleSet::from_file(kData / "rules.tsv");
  const auto defining = lgc::DefiningConfig::from_file(kTestData / "config/seed_defining.tsv");
  lgc::LoaderConfig cfg;
  cfg.allow_duplicate_headings = true;
  const auto table = lgc::load_table(kTestData / "seed/SEED.tsv", cfg);
  for (auto _ : state) benchmark::DoNotOptimize(lgc::normalize_table(table, rules, defining));
}
BENCHMARK(BM_NormalizeSeed);

// A 38GL-shaped table with n copies of the fixture row.
lgc::Table wide_38gl(std::size_t n) {
  const auto data = lgc::text::read_file(kTestData / "38GL/38GL.tsv");
  const auto lines = lgc::text::split(data, '\n');
  std::string body = lines.at(0) + '\n';
  const auto cells = lgc::text::split(lines.at(1), '\t');
  for (std::size_t i = 0; i < n; ++i) {
    body += std::to_string(i + 1);
    for (std::size_t c = 1; c < cells.size(); ++c) body += '\t' + cells[c];
    body += '\n';
  }
  return lgc::parse_table(body, "38GL", lgc::LoaderConfig::from_file(kTestData / "38GL/loader.conf"));
}

void BM_Extract(benchmark::State& state) {
  const auto script = lgc::ExtractionScript::from_file(kData / "script.tsv");
  const auto defining = lgc::DefiningConfig::from_file(kData / "defining.tsv");
  const auto lex = lgc::Lexicons::load_dir(kData / "lexicons");
  const std::vector<lgc::Table> tables = {wide_38gl(static_cast<std::size_t>(state.range(0)))};
  for (auto _ : state) benchmark::DoNotOptimize(lgc::extract_lexicon(tables, script, defining, lex));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Extract)->Arg(1)->Arg(100)->Arg(1000);

void BM_WriteReadText(benchmark::State& state) {
  const auto script = lgc::ExtractionScript::from_file(kData / "script.tsv");
  const auto defining = lgc::DefiningConfig::from_file(kData / "defining.tsv");
  const auto lex = lgc::Lexicons::load_dir(kData / "lexicons");
  const auto lexicon = lgc::extract_lexicon({wide_38gl(1000)}, script, defining, lex).lexicon;
  for (auto _ : state) benchmark::DoNotOptimize(lgc::read_text(lgc::write_text(lexicon)));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(lexicon.entries.size()));
}
BENCHMARK(BM_WriteReadText);

}  // namespace

BENCHMARK_MAIN();
