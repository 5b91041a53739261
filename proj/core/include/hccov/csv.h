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

#ifndef HCCOV_CSV_H_
#define HCCOV_CSV_H_

#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

namespace hccov {

// Comma separated, LF line endings, fields quoted only when they contain a
// comma, quote or newline.
class CsvWriter {
 public:
  explicit CsvWriter(const std::filesystem::path& path);

  void Row(const std::vector<std::string>& fields);

 private:
  std::ofstream out_;
};

std::vector<std::vector<std::string>> ReadCsv(const std::filesystem::path& path);

}  // namespace hccov

#endif  // HCCOV_CSV_H_
