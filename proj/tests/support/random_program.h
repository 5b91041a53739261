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

#ifndef HCCOV_TESTS_SUPPORT_RANDOM_PROGRAM_H_
#define HCCOV_TESTS_SUPPORT_RANDOM_PROGRAM_H_

#include <cstdint>
#include <string>

namespace hccov::testing {

// Source text of a well-formed random program: up to three non-recursive
// functions over scalar globals and one global array, counter-bounded while
// loops, and one or two tests that call the functions and assert on results.
// At most `max_statements` statements in total (assertions included).
std::string RandomProgramSource(std::uint64_t seed, int max_statements = 40);

}  // namespace hccov::testing

#endif  // HCCOV_TESTS_SUPPORT_RANDOM_PROGRAM_H_
