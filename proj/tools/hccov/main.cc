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

// hccov: checked coverage, mutation and oracle recommendation for SL programs.

#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hccov/analysis.h"
#include "hccov/error.h"
#include "hccov/experiments.h"
#include "hccov/mutation.h"
#include "hccov/parser.h"
#include "hccov/recommender.h"
#include "hccov/stats.h"
#include "hccov/suitegen.h"

namespace {

namespace fs = std::filesystem;
using hccov::ExperimentConfig;

constexpr int kUsageError = 2;
constexpr int kAnalysisError = 1;

struct Flags {
  std::string out = "results";
  std::uint64_t seed = 0;
  std::int64_t step_limit = hccov::kDefaultStepLimit;
  std::vector<double> keep_rates = hccov::kDefaultKeepRates;
  std::vector<std::uint64_t> seeds = hccov::kDefaultSeeds;
  int top_k = 5;
  std::vector<std::string> ops;
  bool timeout_kills = true;
  int jobs = 1;
  std::size_t max_mutants = 0;
};

ExperimentConfig MakeConfig(const Flags& flags) {
  ExperimentConfig c;
  c.out_dir = flags.out;
  if (const char* env = std::getenv("HCCOV_RESULTS"); env && *env) c.out_dir = env;
  c.exec.step_limit = flags.step_limit;
  c.keep_rates = flags.keep_rates;
  c.seeds = flags.seeds;
  c.top_k = flags.top_k;
  if (!flags.ops.empty()) {
    c.ops.clear();
    for (const auto& name : flags.ops) c.ops.insert(*hccov::ParseOperator(name));
  }
  c.timeout_kills = flags.timeout_kills;
  c.jobs = flags.jobs;
  c.seed = flags.seed;
  c.max_mutants = flags.max_mutants;
  return c;
}

std::string DefaultCorpus() {
  if (fs::is_directory("corpus")) return "corpus";
  return HCCOV_CORPUS_DIR;
}

std::string Stem(const std::string& file) { return fs::path(file).stem().string(); }

void PrintErrors(const std::vector<std::string>& errors) {
  for (const auto& e : errors) std::cerr << "hccov: " << e << "\n";
}

int CmdParse(const std::string& file) {
  hccov::Program p = hccov::LoadProgramFile(file);
  int statements = p.MaxStatementId();
  std::cout << file << ": " << p.globals.size() << " globals, "
            << p.functions.size() << " functions, " << p.tests.size()
            << " tests, " << statements << " statements, "
            << p.AssertionCount() << " assertions\n";
  return 0;
}

int CmdRun(const std::string& file, const ExperimentConfig& c) {
  hccov::Program p = hccov::LoadProgramFile(file);
  hccov::SuiteRun run = hccov::RunSuite(p, c.exec);
  bool green = true;
  for (const auto& [name, r] : run) {
    std::cout << name << ": " << r.outcome.ToString() << "\n";
    green = green && r.outcome.status == hccov::TestOutcome::Status::kPass;
  }
  return green ? 0 : kAnalysisError;
}

hccov::Analysis AnalyzeFile(const std::string& file, const ExperimentConfig& c,
                            hccov::Program* program = nullptr) {
  hccov::Program p = hccov::LoadProgramFile(file);
  hccov::Analysis a = hccov::AnalyzeGreen(p, c.exec);
  if (program) *program = std::move(p);
  return a;
}

int CmdTrace(const std::string& file, const ExperimentConfig& c) {
  hccov::Analysis a = AnalyzeFile(file, c);
  std::cout << hccov::WriteTraceFile(a, hccov::ProgramDir(c, Stem(file))).string()
            << "\n";
  return 0;
}

int CmdSlice(const std::string& file, const ExperimentConfig& c) {
  hccov::Analysis a = AnalyzeFile(file, c);
  std::cout << hccov::WriteSliceFile(a, hccov::ProgramDir(c, Stem(file))).string()
            << "\n";
  return 0;
}

int CmdCoverage(const std::string& file, const ExperimentConfig& c) {
  hccov::Analysis a = AnalyzeFile(file, c);
  hccov::WriteCoverageFiles(Stem(file), a, hccov::ProgramDir(c, Stem(file)));
  const hccov::GapReport& g = a.gap;
  std::cout << "statement coverage " << hccov::FormatHundredths(g.stmt_coverage)
            << ", SCC " << hccov::FormatHundredths(g.scc) << ", gap "
            << hccov::FormatHundredths(g.stmt_gap) << " pp\n"
            << "branch coverage " << hccov::FormatHundredths(g.branch_coverage)
            << ", OBCC " << hccov::FormatHundredths(g.obcc) << ", gap "
            << hccov::FormatHundredths(g.branch_gap) << " pp\n";
  return 0;
}

int CmdGap(const std::string& file, const ExperimentConfig& c) {
  hccov::Analysis a = AnalyzeFile(file, c);
  std::cout << "stmt_gap_pp " << hccov::FormatHundredths(a.gap.stmt_gap) << "\n"
            << "branch_gap_pp " << hccov::FormatHundredths(a.gap.branch_gap)
            << "\n"
            << "unchecked " << hccov::JoinIds(hccov::GapStatements(a.report))
            << "\n";
  return 0;
}

int CmdMutate(const std::string& file, const ExperimentConfig& c) {
  hccov::Program p = hccov::LoadProgramFile(file);
  auto mutants = hccov::GenerateMutants(p, c.ops, c.seed, c.max_mutants);
  hccov::MutationRun run = hccov::RunMutation(p, mutants, c.Mutation());
  hccov::WriteMutationFile(mutants, run, hccov::ProgramDir(c, Stem(file)));
  std::cout << "mutation score " << run.ScoreText() << " (" << run.killed << "/"
            << run.total() << " killed)\n";
  return 0;
}

int CmdVariants(const std::string& file, const ExperimentConfig& c) {
  hccov::Program p = hccov::LoadProgramFile(file);
  auto variants = hccov::GenerateVariants(p, c.keep_rates, c.seeds);
  std::cout << hccov::WriteVariantsFile(Stem(file), variants,
                                        hccov::ProgramDir(c, Stem(file)))
                   .string()
            << "\n";
  return 0;
}

int CmdRecommend(const std::string& file, const ExperimentConfig& c) {
  hccov::Program p;
  hccov::Analysis a = AnalyzeFile(file, c, &p);
  hccov::RecommendationSet set =
      hccov::Recommend(p, hccov::GapStatements(a.report), c.top_k);
  hccov::WriteRecommendationFiles(set, hccov::ProgramDir(c, Stem(file)));
  for (const auto& r : set.recommendations) {
    std::cout << r.rank << ". assert on " << r.target.name << " in " << r.test
              << " after " << hccov::ToString(r.after) << " checks "
              << hccov::JoinIds(r.would_check) << "\n";
  }
  if (!set.unobservable.empty()) {
    std::cout << "unobservable " << hccov::JoinIds(set.unobservable) << "\n";
  }
  return 0;
}

int CmdEnrich(const std::string& file, const ExperimentConfig& c) {
  std::vector<std::string> errors;
  auto rows = hccov::RunRq4(file, c, &errors);
  if (!errors.empty()) throw hccov::Error(errors.front());
  const hccov::Rq4Row& r = rows.front();
  if (!r.applied) {
    std::cout << "no recommendation to apply\n";
  } else {
    std::cout << "added assert " << r.applied_text << "\n";
  }
  std::cout << "SCC " << hccov::FormatHundredths(r.before.scc) << " -> "
            << hccov::FormatHundredths(r.after.scc) << ", mutation score "
            << r.mutation_before.ScoreText() << " -> "
            << r.mutation_after.ScoreText() << "\n";
  return 0;
}

int CmdRq1(const std::string& corpus, const ExperimentConfig& c) {
  auto rows = hccov::RunRq1(corpus, c);
  for (const auto& r : rows) {
    if (!r.error.empty()) std::cerr << "hccov: " << r.program << ": " << r.error << "\n";
  }
  std::cout << (c.out_dir / "scc.csv").string() << "\n"
            << (c.out_dir / "obcc.csv").string() << "\n";
  return 0;
}

int CmdRq2(const std::string& corpus, const ExperimentConfig& c) {
  hccov::Rq2Result result = hccov::RunRq2(corpus, c);
  PrintErrors(result.errors);
  for (const auto& corr : result.correlations) {
    std::cout << corr.program << ": spearman " << hccov::FormatCoefficient(corr.spearman)
              << ", pearson " << hccov::FormatCoefficient(corr.pearson) << " over "
              << corr.points << " variants\n";
  }
  return 0;
}

int CmdRq3(const std::string& corpus, const ExperimentConfig& c) {
  std::vector<std::string> errors;
  hccov::RunRq3(corpus, c, &errors);
  PrintErrors(errors);
  std::cout << (c.out_dir / "summary.csv").string() << "\n";
  return 0;
}

int CmdRq4(const std::string& corpus, const ExperimentConfig& c) {
  std::vector<std::string> errors;
  hccov::RunRq4(corpus, c, &errors);
  PrintErrors(errors);
  std::cout << (c.out_dir / "enrichment.csv").string() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Checked coverage, mutation testing and oracle recommendation "
               "for SL programs.",
               "hccov"};
  app.require_subcommand(1);
  app.fallthrough();

  Flags flags;
  app.add_option("--out", flags.out, "Results directory (HCCOV_RESULTS overrides)");
  app.add_option("--seed", flags.seed, "Mutant sampling seed");
  app.add_option("--step-limit", flags.step_limit, "Events per test before timeout")
      ->check(CLI::PositiveNumber);
  app.add_option("--keep-rates", flags.keep_rates, "Assertion keep rates")
      ->delimiter(',')
      ->check(CLI::Range(0.0, 1.0));
  app.add_option("--seeds", flags.seeds, "Ablation seeds")->delimiter(',');
  app.add_option("--top-k", flags.top_k, "Recommendations per program")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--ops", flags.ops, "Mutation operators (AOR,ROR,UOI,CRP,SDL)")
      ->delimiter(',')
      ->check(CLI::IsMember({"AOR", "ROR", "UOI", "CRP", "SDL"}));
  app.add_option("--timeout-kills", flags.timeout_kills,
                 "Count mutant timeouts as kills");
  app.add_option("--jobs", flags.jobs, "Worker threads")->check(CLI::PositiveNumber);
  app.add_option("--max-mutants", flags.max_mutants,
                 "Sample at most N mutants (0 keeps all)");

  std::string target;
  std::function<int(const std::string&, const ExperimentConfig&)> action;
  auto file_command = [&](const char* name, const char* help, auto fn) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("file", target, "SL program")->required();
    sub->callback([&action, fn] { action = fn; });
  };
  auto corpus_command = [&](const char* name, const char* help, auto fn) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("corpus", target, "Program or directory of .sl programs");
    sub->callback([&action, fn] { action = fn; });
  };

  CLI::App* parse = app.add_subcommand("parse", "Parse and check a program");
  parse->add_option("file", target, "SL program")->required();
  parse->callback([&] { action = [](const std::string& f, const ExperimentConfig&) {
                          return CmdParse(f);
                        }; });
  file_command("run", "Run the test suite", CmdRun);
  file_command("trace", "Write trace.jsonl", CmdTrace);
  file_command("slice", "Write slices.jsonl", CmdSlice);
  file_command("coverage", "Write scc.csv and obcc.csv", CmdCoverage);
  file_command("gap", "Print coverage gaps", CmdGap);
  file_command("mutate", "Write mutation.csv", CmdMutate);
  file_command("variants", "Write variants.csv", CmdVariants);
  file_command("recommend", "Write summary.csv and unobservable.csv", CmdRecommend);
  file_command("enrich", "Apply the top recommendation", CmdEnrich);
  corpus_command("rq1", "Coverage and checked coverage over a corpus", CmdRq1);
  corpus_command("rq2", "Gap versus mutation score over ablated suites", CmdRq2);
  corpus_command("rq3", "Top-k recommendations over a corpus", CmdRq3);
  corpus_command("rq4", "SCC and mutation score after enrichment", CmdRq4);
  corpus_command("smoke", "End-to-end checklist on one program",
                 [](const std::string& corpus, const ExperimentConfig& c) {
                   return hccov::RunSmoke(corpus, c, std::cout) ? 0
                                                                : kAnalysisError;
                 });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kUsageError;
  }

  ExperimentConfig config = MakeConfig(flags);
  if (target.empty()) target = DefaultCorpus();
  try {
    return action(target, config);
  } catch (const std::exception& e) {
    std::cerr << "hccov: " << e.what() << "\n";
    return kAnalysisError;
  }
}
