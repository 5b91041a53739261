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

#include "hccov/coverage.h"

#include <cstdio>
#include <cstdlib>
#include <set>

namespace hccov {

std::int64_t Ratio::Hundredths() const {
  if (total == 0) return 10000;
  return (20000 * count + total) / (2 * total);
}

std::string FormatHundredths(std::int64_t hundredths) {
  std::int64_t magnitude = std::llabs(hundredths);
  char buf[32];
  std::snprintf(buf, sizeof buf, "%s%lld.%02lld", hundredths < 0 ? "-" : "",
                static_cast<long long>(magnitude / 100),
                static_cast<long long>(magnitude % 100));
  return buf;
}

int CoverageReport::CoveredStatements() const {
  int n = 0;
  for (const auto& s : statements) n += s.covered;
  return n;
}

int CoverageReport::CheckedStatements() const {
  int n = 0;
  for (const auto& s : statements) n += s.checked;
  return n;
}

int CoverageReport::CoveredArms() const {
  int n = 0;
  for (const auto& a : arms) n += a.covered;
  return n;
}

int CoverageReport::CheckedArms() const {
  int n = 0;
  for (const auto& a : arms) n += a.checked;
  return n;
}

int CoverageReport::UncheckableArms() const {
  int n = 0;
  for (const auto& a : arms) n += a.structurally_uncheckable;
  return n;
}

Ratio CoverageReport::StatementCoverage() const {
  return {CoveredStatements(), static_cast<std::int64_t>(statements.size())};
}

Ratio CoverageReport::Scc() const {
  return {CheckedStatements(), static_cast<std::int64_t>(statements.size())};
}

Ratio CoverageReport::BranchCoverage() const {
  return {CoveredArms(), static_cast<std::int64_t>(arms.size())};
}

Ratio CoverageReport::Obcc() const {
  return {CheckedArms(), static_cast<std::int64_t>(arms.size())};
}

CoverageReport RegularCoverage(const Structures& structures,
                               const SuiteRun& suite) {
  std::set<StatementId> executed;
  std::set<BranchArm> taken;
  for (const auto& [name, run] : suite) {
    for (const TraceEvent& e : run.trace.events) {
      if (e.IsAssertion()) continue;
      executed.insert(e.stmt);
      if (e.kind == EventKind::kPredicate) taken.insert({e.stmt, *e.outcome});
    }
  }
  CoverageReport report;
  for (StatementId id : structures.statements()) {
    report.statements.push_back({id, executed.count(id) > 0, false});
  }
  for (const BranchArm& arm : structures.arms()) {
    report.arms.push_back({arm, taken.count(arm) > 0, false,
                           structures.IsStructurallyUncheckable(arm)});
  }
  return report;
}

CoverageReport CheckedCoverage(const CoverageReport& regular,
                               const CheckedSet& checked) {
  CoverageReport report = regular;
  for (auto& s : report.statements) {
    s.checked = checked.statements.count(s.id) > 0;
  }
  for (auto& a : report.arms) a.checked = checked.arms.count(a.arm) > 0;
  return report;
}

GapReport Gap(const CoverageReport& report) {
  GapReport g;
  g.stmt_coverage = report.StatementCoverage().Hundredths();
  g.scc = report.Scc().Hundredths();
  g.branch_coverage = report.BranchCoverage().Hundredths();
  g.obcc = report.Obcc().Hundredths();
  g.stmt_gap = g.stmt_coverage - g.scc;
  g.branch_gap = g.branch_coverage - g.obcc;
  return g;
}

std::vector<StatementId> GapStatements(const CoverageReport& report) {
  std::vector<StatementId> out;
  for (const auto& s : report.statements) {
    if (s.covered && !s.checked) out.push_back(s.id);
  }
  return out;
}

}  // namespace hccov
