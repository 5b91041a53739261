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

#ifndef HCCOV_RECOMMENDER_H_
#define HCCOV_RECOMMENDER_H_

#include <string>
#include <vector>

#include "hccov/ast.h"
#include "hccov/interpreter.h"

namespace hccov {

struct ObservableTarget {
  enum class Kind { kGlobal, kCallResult };

  Kind kind = Kind::kGlobal;
  std::string name;  // the global, or the test local holding a call result
};

// Assert on `target` right after top-level statement `after` of `test`.
struct Recommendation {
  int rank = 0;
  ObservableTarget target;
  std::string test;
  StatementId after;
  std::vector<StatementId> would_check;  // gap statements, ascending
  int score = 0;                         // would_check.size()
};

struct RecommendationSet {
  std::vector<Recommendation> recommendations;
  std::vector<StatementId> unobservable;  // gaps no candidate reaches
};

// Candidates: every scalar global, asserted after the last top-level test
// statement that calls into the program, in every test that has one; and
// every test local bound from a call at the top level of a test. A
// candidate's would-check set is the gap statements in the static backward
// closure of the target that lie in functions the test reaches by then.
// Candidates that an enabled assertion already reads at that point still
// count towards observability but are not emitted. Emits the top `k`
// remaining candidates with score >= 1, ordered by score (descending),
// lowest would-check id, target name, then test order.
RecommendationSet Recommend(const Program& program,
                            const std::vector<StatementId>& gaps, int k);

// Inserts `assert <target> == <observed>;` after the recommendation's
// insertion point, with the value observed by running the test on
// `program`. The new assertion gets the next free assertion id. Throws
// hccov::Error if the test does not pass or the target cannot be evaluated.
Program ApplyRecommendation(const Program& program, const Recommendation& rec,
                            const ExecConfig& config = {});

}  // namespace hccov

#endif  // HCCOV_RECOMMENDER_H_
