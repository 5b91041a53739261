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

#ifndef HCCOV_CHECKER_H_
#define HCCOV_CHECKER_H_

#include <vector>

#include "hccov/ast.h"
#include "hccov/parser.h"

namespace hccov {

// Static well-formedness:
//  - unique global, function and test names;
//  - every read refers to a parameter, a local assigned earlier in the same
//    or an enclosing block, or a global;
//  - indexing only on global arrays, scalars never indexed;
//  - calls name a function with matching arity;
//  - return only in functions, assert only in tests, no calls inside asserts.
std::vector<Diagnostic> CheckProgram(const Program& program);

}  // namespace hccov

#endif  // HCCOV_CHECKER_H_
