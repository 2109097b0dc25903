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

#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include "../../tools/cli.hpp"
#include "lgc/text.hpp"
#include "test_support.hpp"

namespace lgc {
namespace {

namespace fs = std::filesystem;
using testing::shipped_data;
using testing::test_data;

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> extract_args(const fs::path& tables, const fs::path& out) {
  return {"extract",   "--tables",  tables.string(),
          "--defining", shipped_data("defining.tsv").string(),
          "--lexicons", shipped_data("lexicons").string(),
          "--script",   shipped_data("script.tsv").string(),
          "--rules",    shipped_data("rules.tsv").string(),
          "--out",      out.string()};
}

std::vector<std::string> without(std::vector<std::string> v, const std::string& flag) {
  for (auto it = v.begin(); it != v.end(); ++it) {
    if (*it == flag) {
      v.erase(it, it + 2);
      break;
    }
  }
  return v;
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"bogus"}).code, 2);
  EXPECT_EQ(run({"validate"}).code, 2);
  EXPECT_EQ(run({"validate", "--tables", "/nonexistent"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, ValidateCleanAndDirty) {
  auto r = run({"validate", "--tables", test_data("38GL").string(), "--lexicons", shipped_data("lexicons").string()});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "38GL: 0 errors, 0 warnings\n");
  testing::TempDir dir;
  r = run({"validate", "--tables", test_data("seed").string(), "--out", dir.path().string()});
  EXPECT_EQ(r.code, 1);
  EXPECT_TRUE(fs::exists(dir / "validation.tsv"));
}

TEST(Cli, ExtractGolden) {
  testing::TempDir dir;
  auto args = extract_args(test_data("38GL"), dir.path());
  args.push_back("--no-expand-prefixes");
  const auto r = run(args);
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "rows=1 entries=1\n");
  EXPECT_EQ(text::read_file(dir / "lglex.txt"), text::read_file(test_data("golden/V_38GL_33.txt")));
  EXPECT_FALSE(fs::exists(dir / "lglex.xml"));
}

TEST(Cli, ExtractFormats) {
  testing::TempDir dir;
  auto args = extract_args(test_data("38GL"), dir.path());
  args.insert(args.end(), {"--format", "both"});
  const auto r = run(args);
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "rows=1 entries=3\n");
  EXPECT_TRUE(fs::exists(dir / "lglex.xml"));
  for (const auto& e : fs::directory_iterator(dir.path())) {
    EXPECT_EQ(e.path().filename().string().find(".tmp"), std::string::npos) << e.path();
  }
}

TEST(Cli, ExtractMissingConfigIsConfigError) {
  testing::TempDir dir;
  EXPECT_EQ(run(without(extract_args(test_data("38GL"), dir.path()), "--defining")).code, 2);
  EXPECT_EQ(run(without(extract_args(test_data("38GL"), dir.path()), "--script")).code, 2);
}

TEST(Cli, NormalizeThenExtractEqualsExtract) {
  testing::TempDir norm, a, b;
  auto r = run({"normalize", "--tables", test_data("38GL").string(), "--rules", shipped_data("rules.tsv").string(),
                "--defining", shipped_data("defining.tsv").string(), "--out", norm.path().string()});
  ASSERT_EQ(r.code, 0) << r.err;
  fs::copy_file(test_data("38GL/loader.conf"), norm / "loader.conf");
  ASSERT_EQ(run(extract_args(test_data("38GL"), a.path())).code, 0);
  r = run(extract_args(norm.path(), b.path()));
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(text::read_file(a / "lglex.txt"), text::read_file(b / "lglex.txt"));
}

TEST(Cli, NormalizeSeedReport) {
  testing::TempDir dir;
  const auto r = run({"normalize", "--tables", test_data("seed").string(), "--rules",
                      shipped_data("rules.tsv").string(), "--defining",
                      test_data("config/seed_defining.tsv").string(), "--out", dir.path().string()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("tables=1 changes=20\n"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("typographic\t11\t55.0\n"), std::string::npos) << r.out;
  EXPECT_TRUE(fs::exists(dir / "SEED.tsv"));
  EXPECT_TRUE(fs::exists(dir / "reports" / "changes.tsv"));
  EXPECT_TRUE(fs::exists(dir / "reports" / "linguistic_suspects.tsv"));
}

TEST(Cli, ClassTableSeventeen) {
  testing::TempDir dir;
  const auto r = run({"class-table", "--tables", test_data("defining17").string(), "--defining",
                      shipped_data("defining.tsv").string(), "--out", dir.path().string()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "tables=17 properties=18 suspects=3\n");
  const auto header = text::split(text::read_file(dir / "class_table.tsv"), '\n').at(0);
  EXPECT_EQ(text::split(header, '\t').size(), 18u);
  EXPECT_EQ(run({"class-table", "--tables", test_data("defining17").string()}).code, 2);
}

TEST(Cli, Stats) {
  const auto r = run({"stats", "--tables", test_data("prefix").string(), "--defining",
                      test_data("config/prefix_defining.tsv").string(), "--script",
                      shipped_data("script.tsv").string(), "--lexicons", shipped_data("lexicons").string()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "tables=1 rows=3 entries=5 properties=6\n");
}

TEST(Cli, OutputIndependentOfArgumentOrder) {
  testing::TempDir a, b;
  const std::vector<std::string> tables = {test_data("defining17/38GL.tsv").string(),
                                           test_data("defining17/4G.tsv").string()};
  const auto defining = shipped_data("defining.tsv").string();
  ASSERT_EQ(run({"class-table", "--tables", tables[0], tables[1], "--defining", defining, "--out", a.path().string()})
                .code,
            0);
  ASSERT_EQ(run({"class-table", "--tables", tables[1], tables[0], "--defining", defining, "--out", b.path().string()})
                .code,
            0);
  EXPECT_EQ(text::read_file(a / "class_table.tsv"), text::read_file(b / "class_table.tsv"));
}

TEST(Cli, ExtraConstructionColumnIsOptional) {
  testing::TempDir dir;
  fs::create_directories(dir / "t");
  text::write_file_atomic(dir / "t" / "A.tsv", "ENT\tN0 V N1\nα\t+\n");
  text::write_file_atomic(dir / "d.tsv", "A\tN0 V N1 σε N2\n");
  const auto r = run({"extract", "--tables", (dir / "t").string(), "--defining", (dir / "d.tsv").string(),
                      "--script", shipped_data("script.tsv").string(), "--out", (dir / "o").string()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(text::read_file(dir / "o" / "lglex.txt")
                .find("absolute=(construction=\"true::N0 V N1 σε N2\",construction=\"o::N0 V N1\")"),
            std::string::npos);
}

}  // namespace
}  // namespace lgc
