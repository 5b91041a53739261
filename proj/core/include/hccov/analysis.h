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

#ifndef HCCOV_ANALYSIS_H_
#define HCCOV_ANALYSIS_H_

#include <string>
#include <vector>

#include "hccov/ast.h"
#include "hccov/coverage.h"
#include "hccov/interpreter.h"
#include "hccov/slicer.h"
#include "hccov/structures.h"

namespace hccov {

// Everything the checked-coverage pipeline derives from one program:
// run the suite, slice from every executed assertion, union, measure.
struct Analysis {
  Structures structures;
  SuiteRun suite;
  std::vector<SlicingCriterion> criteria;
  std::vector<Slice> slices;  // parallel to `criteria`
  CheckedSet checked;
  CoverageReport report;
  GapReport gap;

  bool Green() const;
  std::vector<std::string> FailingTests() const;
};

Analysis Analyze(const Program& program, const ExecConfig& config = {});

// Analyze, but throws hccov::Error naming the first failing test unless the
// suite is green.
Analysis AnalyzeGreen(const Program& program, const ExecConfig& config = {});

}  // namespace hccov

#endif  // HCCOV_ANALYSIS_H_
