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

#ifndef HCCOV_PARSER_H_
#define HCCOV_PARSER_H_

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hccov/ast.h"

namespace hccov {

struct Diagnostic {
  enum class Kind { kSyntax, kStatic };

  Kind kind = Kind::kSyntax;
  SourceLoc loc;
  std::string message;

  // "3:7: syntax error: expected ';'"
  std::string ToString() const;
};

struct ParseResult {
  std::optional<Program> program;
  std::vector<Diagnostic> diagnostics;

  bool ok() const { return program.has_value() && diagnostics.empty(); }
  std::string DiagnosticText() const;
};

// Parses Slang source and runs the static checks. On success the program has
// statement and assertion ids assigned in source preorder.
ParseResult Parse(std::string_view source);

// Syntax only; no static checks.
ParseResult ParseSyntax(std::string_view source);

// Throws hccov::Error carrying the diagnostics when parsing fails. `origin`
// names the source in the message.
Program ParseOrThrow(std::string_view source, std::string_view origin = "<input>");

Program LoadProgramFile(const std::filesystem::path& path);

std::string ReadTextFile(const std::filesystem::path& path);

}  // namespace hccov

#endif  // HCCOV_PARSER_H_
