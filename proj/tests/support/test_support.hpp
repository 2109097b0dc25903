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

#ifndef LGC_TESTS_TEST_SUPPORT_HPP_
#define LGC_TESTS_TEST_SUPPORT_HPP_

#include <cstdint>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "lgc/lglex.hpp"
#include "lgc/table.hpp"

namespace lgc::testing {

inline std::filesystem::path test_data(const std::string& rel = {}) {
  return std::filesystem::path(LGC_TEST_DATA_DIR) / rel;
}
inline std::filesystem::path shipped_data(const std::string& rel = {}) {
  return std::filesystem::path(LGC_DATA_DIR) / rel;
}

// A fresh directory under the system temp dir, removed on destruction.
class TempDir {
 public:
  TempDir();
  ~TempDir();
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;
  const std::filesystem::path& path() const { return path_; }
  std::filesystem::path operator/(const std::string& rel) const { return path_ / rel; }

 private:
  std::filesystem::path path_;
};

// Random lexicon that satisfies the writer's preconditions.
LGLexLexicon random_lexicon(std::mt19937& rng);

// Labels from the conformance corpus: label and expected kind ("2+3").
struct CorpusLabel {
  std::string label;
  std::string kinds;
};
std::vector<CorpusLabel> label_corpus();

// Notation variants of a canonical label, each undone by the shipped rules.
std::vector<std::string> notation_variants(const std::string& canonical);

// Random table whose headings mix canonical labels and their variants.
Table random_raw_table(std::mt19937& rng, const std::string& name);

}  // namespace lgc::testing

#endif  // LGC_TESTS_TEST_SUPPORT_HPP_
