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

#ifndef HCCOV_MUTATION_H_
#define HCCOV_MUTATION_H_

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "hccov/ast.h"
#include "hccov/coverage.h"
#include "hccov/interpreter.h"

namespace hccov {

enum class MutationOperator {
  kAor,  // arithmetic operator replacement: + <-> -, * <-> /, % -> *
  kRor,  // relational operator replacement: each of the other five
  kUoi,  // negate an if/while condition
  kCrp,  // constant replacement: 0 -> 1, 1 -> 0, c -> c + 1
  kSdl,  // statement deletion
};

const char* Spelling(MutationOperator op);  // "AOR", "ROR", ...
std::optional<MutationOperator> ParseOperator(std::string_view name);
std::set<MutationOperator> AllOperators();

struct Mutant {
  int id = 0;  // 1-based, in generation order
  MutationOperator op = MutationOperator::kAor;
  StatementId stmt;
  std::string description;
  // Statement ids of the original are kept, so coverage structures line up.
  Program program;
};

// First-order mutants over the statements of the program under test, in
// statement-id order, then operator order, then site order. SDL skips sole
// returns and deletions that would leave the program ill-formed. When
// `max_mutants` is nonzero and smaller than the candidate count, a seeded
// sample of that size is kept (ids are assigned after sampling).
std::vector<Mutant> GenerateMutants(const Program& program,
                                    const std::set<MutationOperator>& ops,
                                    std::uint64_t seed = 0,
                                    std::size_t max_mutants = 0);

enum class MutantStatus {
  kKilledByAssertion,
  kKilledByTrap,
  kSurvived,
  kTimeout,
};

const char* Spelling(MutantStatus status);

struct MutationConfig {
  ExecConfig exec;  // used for the green-suite run
  bool timeout_kills = true;
  int jobs = 1;
};

struct MutationResult {
  int mutant_id = 0;
  MutantStatus status = MutantStatus::kSurvived;
  std::string test;    // killing (or timing-out) test
  AssertionId site;    // kKilledByAssertion
  bool killed = false;
};

struct MutationRun {
  std::vector<MutationResult> results;  // in mutant order
  int killed = 0;
  int timeouts = 0;
  std::int64_t step_limit = 0;  // per-test limit applied to mutants

  int total() const { return static_cast<int>(results.size()); }
  Ratio Score() const { return {killed, total()}; }
  // "62.50", or "n/a" without mutants.
  std::string ScoreText() const;
};

// Runs every mutant's functions against the tests of `program`, so mutants
// generated once can be replayed against ablated or enriched suites. The
// unmutated program must pass first; otherwise hccov::Error names the failing
// test. Each mutant test may take at most 10x the original suite's steps.
MutationRun RunMutation(const Program& program,
                        const std::vector<Mutant>& mutants,
                        const MutationConfig& config = {});

}  // namespace hccov

#endif  // HCCOV_MUTATION_H_
