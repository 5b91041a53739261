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

#ifndef HCCOV_PRINTER_H_
#define HCCOV_PRINTER_H_

#include <string>

#include "hccov/ast.h"

namespace hccov {

// Canonical source rendering. Parsing the output yields a structurally equal
// program (statement ids are reassigned in preorder, which matches for any
// program that came out of the parser).
std::string Print(const Program& program);
std::string Print(const Expr& expr);

// One-line rendering of a statement without its nested blocks, e.g.
// "d = a - b;" or "if (d < 0)".
std::string PrintHeader(const Statement& s);

}  // namespace hccov

#endif  // HCCOV_PRINTER_H_
