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

#ifndef HCCOV_EXPERIMENTS_H_
#define HCCOV_EXPERIMENTS_H_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <vector>

#include "hccov/analysis.h"
#include "hccov/interpreter.h"
#include "hccov/mutation.h"
#include "hccov/recommender.h"
#include "hccov/suitegen.h"

namespace hccov {

struct ExperimentConfig {
  std::filesystem::path out_dir = "results";
  ExecConfig exec;
  std::vector<double> keep_rates = kDefaultKeepRates;
  std::vector<std::uint64_t> seeds = kDefaultSeeds;
  int top_k = 5;
  std::set<MutationOperator> ops = AllOperators();
  bool timeout_kills = true;
  int jobs = 1;
  std::uint64_t seed = 0;  // mutant sampling, only with max_mutants
  std::size_t max_mutants = 0;

  MutationConfig Mutation() const { return {exec, timeout_kills, jobs}; }
};

struct CorpusProgram {
  std::string name;  // file stem
  std::filesystem::path path;
};

// A single .sl file, or every .sl file of a directory sorted by name.
std::vector<CorpusProgram> ListCorpus(const std::filesystem::path& path);

// <out_dir>/<program>
std::filesystem::path ProgramDir(const ExperimentConfig& config,
                                 const std::string& program);

// ---- single-program outputs (the CLI stage subcommands) -------------------

// trace.jsonl: every test's events, tests in name order.
std::filesystem::path WriteTraceFile(const Analysis& analysis,
                                     const std::filesystem::path& dir);
// slices.jsonl: one object per criterion.
std::filesystem::path WriteSliceFile(const Analysis& analysis,
                                     const std::filesystem::path& dir);
// scc.csv and obcc.csv with one program row.
void WriteCoverageFiles(const std::string& program, const Analysis& analysis,
                        const std::filesystem::path& dir);
// mutation.csv: mutant_id,operator,stmt,status,killing_test, then a final
// "score,,,<score_pct>,<killed>/<total>" row.
std::filesystem::path WriteMutationFile(const std::vector<Mutant>& mutants,
                                        const MutationRun& run,
                                        const std::filesystem::path& dir);
// variants.csv: program,keep_rate,seed,n_enabled,disabled_ids
std::filesystem::path WriteVariantsFile(const std::string& program,
                                        const std::vector<SuiteVariant>& variants,
                                        const std::filesystem::path& dir);
// summary.csv (rank,target,insertion_test,score,would_check_ids) and
// unobservable.csv (stmt).
void WriteRecommendationFiles(const RecommendationSet& set,
                              const std::filesystem::path& dir);

std::vector<std::string> SccHeader();
std::vector<std::string> SccRow(const std::string& program,
                                const CoverageReport& report);
std::vector<std::string> ObccHeader();
std::vector<std::string> ObccRow(const std::string& program,
                                 const CoverageReport& report);

std::string FormatKeepRate(double rate);  // "0.25"
std::string JoinIds(const std::vector<StatementId>& ids);  // "s1;s4"

// ---- research-question drivers --------------------------------------------

struct Rq1Row {
  std::string program;
  std::string error;  // empty on success
  CoverageReport report;
  GapReport gap;
};

// Writes scc.csv and obcc.csv (one row per program plus an ALL row pooled
// over the successful programs) to out_dir, and per-program copies under
// out_dir/<program>/.
std::vector<Rq1Row> RunRq1(const std::filesystem::path& corpus,
                           const ExperimentConfig& config);

struct Rq2VariantRow {
  std::string program;
  double keep_rate = 0;
  std::uint64_t seed = 0;
  int enabled = 0;
  std::set<AssertionId> disabled;
  GapReport gap;
  int mutants = 0;
  int killed = 0;
  std::string score_text;
  double score_pct = 0;
};

struct Rq2Correlation {
  std::string program;  // "ALL" for the pooled row
  int points = 0;
  int distinct_gaps = 0;
  std::optional<double> spearman;
  std::optional<double> pearson;
};

struct Rq2Result {
  std::vector<Rq2VariantRow> variants;
  std::vector<Rq2Correlation> correlations;  // per program, then ALL
  std::vector<std::string> errors;
};

// Ablates every program's assertions over the keep-rate x seed grid and runs
// the program's mutants against each variant. Writes gapkills.csv,
// correlation.csv and variants.csv to out_dir, and each program's baseline
// mutation.csv under out_dir/<program>/.
Rq2Result RunRq2(const std::filesystem::path& corpus,
                 const ExperimentConfig& config);

struct Rq3Row {
  std::string program;
  RecommendationSet set;
};

// Writes out_dir/summary.csv (program column first) and per-program
// summary.csv and unobservable.csv. Programs that cannot be analysed are
// skipped, with "<program>: <message>" appended to `errors`.
std::vector<Rq3Row> RunRq3(const std::filesystem::path& corpus,
                           const ExperimentConfig& config,
                           std::vector<std::string>* errors = nullptr);

struct Rq4Row {
  std::string program;
  GapReport before;
  GapReport after;
  std::optional<Recommendation> applied;
  std::string applied_text;  // "t1 after s6: g == 7"
  std::vector<Mutant> mutants;
  MutationRun mutation_before;
  MutationRun mutation_after;
};

// Applies each program's rank-1 recommendation and measures SCC and
// mutation score before and after. Writes enrichment.csv, and per program
// mutation.csv (baseline) and enriched.sl. Errors as for RunRq3.
std::vector<Rq4Row> RunRq4(const std::filesystem::path& corpus,
                           const ExperimentConfig& config,
                           std::vector<std::string>* errors = nullptr);

// End-to-end check on one small program: trace, slices, SCC, OBCC,
// recommendations. Prints one OK/FAIL line per stage to `out` and returns
// true when every stage succeeded. Uses p1_add_abs.sl when the corpus has it.
bool RunSmoke(const std::filesystem::path& corpus, const ExperimentConfig& config,
              std::ostream& out);

}  // namespace hccov

#endif  // HCCOV_EXPERIMENTS_H_
