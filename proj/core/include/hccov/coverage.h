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

#ifndef HCCOV_COVERAGE_H_
#define HCCOV_COVERAGE_H_

#include <cstdint>
#include <string>
#include <vector>

#include "hccov/interpreter.h"
#include "hccov/slicer.h"
#include "hccov/structures.h"

namespace hccov {

// A percentage kept as an exact ratio. Empty denominators read as 100%.
struct Ratio {
  std::int64_t count = 0;
  std::int64_t total = 0;

  // Hundredths of a percent, rounded half up: 4/5 -> 8000.
  std::int64_t Hundredths() const;
  double Percent() const { return static_cast<double>(Hundredths()) / 100.0; }
};

// "80.00", "-3.25"
std::string FormatHundredths(std::int64_t hundredths);

struct StatementStatus {
  StatementId id;
  bool covered = false;
  bool checked = false;
};

struct ArmStatus {
  BranchArm arm;
  bool covered = false;
  bool checked = false;
  bool structurally_uncheckable = false;
};

struct CoverageReport {
  std::vector<StatementStatus> statements;  // every PUT statement, by id
  std::vector<ArmStatus> arms;              // every PUT arm, by id

  int CoveredStatements() const;
  int CheckedStatements() const;
  int CoveredArms() const;
  int CheckedArms() const;
  int UncheckableArms() const;

  Ratio StatementCoverage() const;
  Ratio Scc() const;
  Ratio BranchCoverage() const;
  Ratio Obcc() const;
};

// All values in hundredths of a percent (point). The gaps are differences of
// the rounded percentages, so each gap column equals coverage minus checked
// coverage exactly as printed.
struct GapReport {
  std::int64_t stmt_coverage = 0;
  std::int64_t scc = 0;
  std::int64_t stmt_gap = 0;
  std::int64_t branch_coverage = 0;
  std::int64_t obcc = 0;
  std::int64_t branch_gap = 0;

  double StmtGapPp() const { return static_cast<double>(stmt_gap) / 100.0; }
};

// Covered flags: a statement is covered when any test executed it, an arm
// when any predicate instance took that outcome.
CoverageReport RegularCoverage(const Structures& structures, const SuiteRun& suite);

// Copy of `regular` with checked flags taken from the slice union.
CoverageReport CheckedCoverage(const CoverageReport& regular,
                               const CheckedSet& checked);

GapReport Gap(const CoverageReport& report);

// Covered but unchecked statements, ordered by id.
std::vector<StatementId> GapStatements(const CoverageReport& report);

}  // namespace hccov

#endif  // HCCOV_COVERAGE_H_
