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

#include "hccov/analysis.h"

#include "hccov/ddg.h"
#include "hccov/error.h"

namespace hccov {

bool Analysis::Green() const { return FailingTests().empty(); }

std::vector<std::string> Analysis::FailingTests() const {
  std::vector<std::string> out;
  for (const auto& [name, run] : suite) {
    if (!run.outcome.passed()) out.push_back(name);
  }
  return out;
}

Analysis Analyze(const Program& program, const ExecConfig& config) {
  Analysis a;
  a.structures = EnumerateStructures(program);
  ExecConfig traced = config;
  traced.record_trace = true;
  a.suite = RunSuite(program, traced);
  a.criteria = GenerateCriteria(a.suite);
  std::string current_test;
  DynamicDependenceGraph ddg;
  for (const SlicingCriterion& c : a.criteria) {
    if (c.test != current_test) {
      ddg = BuildDdg(a.suite.at(c.test).trace);
      current_test = c.test;
    }
    a.slices.push_back(BackwardSlice(ddg, c, a.structures));
  }
  a.checked = UnionSlices(a.slices);
  a.report = CheckedCoverage(RegularCoverage(a.structures, a.suite), a.checked);
  a.gap = Gap(a.report);
  return a;
}

Analysis AnalyzeGreen(const Program& program, const ExecConfig& config) {
  Analysis a = Analyze(program, config);
  if (!a.Green()) {
    const std::string test = a.FailingTests().front();
    throw Error("test " + test + " does not pass: " +
                a.suite.at(test).outcome.ToString());
  }
  return a;
}

}  // namespace hccov
