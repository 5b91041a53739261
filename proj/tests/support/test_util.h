// Copyright 2026 The hccov Authors
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

#ifndef HCCOV_TESTS_SUPPORT_TEST_UTIL_H_
#define HCCOV_TESTS_SUPPORT_TEST_UTIL_H_

#include <filesystem>
#include <string>
#include <vector>

#include "hccov/ast.h"

namespace hccov::testing {

std::filesystem::path CorpusDir();
std::filesystem::path CorpusFile(const std::string& stem);
Program LoadCorpusProgram(const std::string& stem);
std::vector<std::string> CorpusStems();

// Parses or fails the calling test with the diagnostics.
Program MustParse(const std::string& source);

// Statements of a program, assertions included.
int StatementCount(const Program& program);

// A fresh directory removed again on destruction.
class TempDir {
 public:
  TempDir();
  ~TempDir();
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

}  // namespace hccov::testing

#endif  // HCCOV_TESTS_SUPPORT_TEST_UTIL_H_
