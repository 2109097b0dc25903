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

#include "lgc/error.hpp"
#include "lgc/text.hpp"
#include "test_support.hpp"

namespace lgc::text {
namespace {

TEST(Text, SplitKeepsEmptyFields) {
  EXPECT_EQ(split("a\t\tb\t", '\t'), (std::vector<std::string>{"a", "", "b", ""}));
  EXPECT_EQ(split("", ','), (std::vector<std::string>{""}));
  EXPECT_EQ(split("a=:b=:c", "=:"), (std::vector<std::string>{"a", "b", "c"}));
}

TEST(Text, TrimAndJoin) {
  EXPECT_EQ(trim("  N0 V \t"), "N0 V");
  EXPECT_EQ(trim(""), "");
  EXPECT_EQ(join({"a", "b", "c"}, "+"), "a+b+c");
  EXPECT_EQ(join({}, "+"), "");
}

TEST(Text, LinesDropsFinalTerminatorAndCarriageReturns) {
  EXPECT_EQ(lines("a\r\nb\n"), (std::vector<std::string>{"a", "b"}));
  EXPECT_EQ(lines("a\n\n"), (std::vector<std::string>{"a", ""}));
  EXPECT_TRUE(lines("").empty());
}

TEST(Text, RecordsSkipCommentsAndBlanks) {
  const auto recs = parse_records("# head\n\nx\ty\n  \nz\n");
  ASSERT_EQ(recs.size(), 2u);
  EXPECT_EQ(recs[0].line, 3u);
  EXPECT_EQ(recs[0].fields, (std::vector<std::string>{"x", "y"}));
  EXPECT_EQ(recs[1].line, 5u);
}

TEST(Text, AtomicWriteLeavesOnlyTarget) {
  testing::TempDir dir;
  const auto target = dir / "sub/out.txt";
  write_file_atomic(target, "one");
  write_file_atomic(target, "two");
  EXPECT_EQ(read_file(target), "two");
  std::size_t n = 0;
  for ([[maybe_unused]] const auto& e : std::filesystem::directory_iterator(target.parent_path())) ++n;
  EXPECT_EQ(n, 1u);
}

TEST(Text, MissingFileIsIoError) { EXPECT_THROW(read_file("/nonexistent/lgc/file"), IoError); }

}  // namespace
}  // namespace lgc::text
