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

#include "hccov/experiments.h"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "hccov/csv.h"
#include "hccov/error.h"
#include "hccov/parser.h"
#include "hccov/printer.h"
#include "hccov/stats.h"
#include "hccov/trace_io.h"

namespace hccov {
namespace {

namespace fs = std::filesystem;

std::ofstream OpenOutput(const fs::path& path) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write " + path.string());
  return out;
}

std::string Pct(const Ratio& r) { return FormatHundredths(r.Hundredths()); }

std::string GapText(const Ratio& coverage, const Ratio& checked) {
  return FormatHundredths(coverage.Hundredths() - checked.Hundredths());
}

struct Loaded {
  CorpusProgram entry;
  std::optional<Program> program;
  std::string error;
};

std::vector<Loaded> LoadCorpus(const fs::path& corpus) {
  std::vector<Loaded> out;
  for (auto& entry : ListCorpus(corpus)) {
    Loaded l{entry, std::nullopt, ""};
    try {
      l.program = LoadProgramFile(entry.path);
    } catch (const Error& e) {
      l.error = e.what();
    }
    out.push_back(std::move(l));
  }
  return out;
}

std::vector<std::string> MutationHeader() {
  return {"mutant_id", "operator", "stmt", "status", "killing_test"};
}

std::string Describe(const Program& enriched, const Recommendation& rec) {
  const TestCase* test = enriched.FindTest(rec.test);
  AssertionId id{enriched.MaxAssertionId()};
  std::string text = rec.test + " after " + ToString(rec.after) + ": ";
  if (test) {
    for (const Statement* s : test->Assertions()) {
      if (s->assertion == id) text += Print(s->value);
    }
  }
  return text;
}

}  // namespace

std::vector<CorpusProgram> ListCorpus(const fs::path& path) {
  std::error_code ec;
  if (fs::is_regular_file(path, ec)) return {{path.stem().string(), path}};
  if (!fs::is_directory(path, ec)) {
    throw Error(path.string() + ": no such file or directory");
  }
  std::vector<CorpusProgram> out;
  for (const auto& entry : fs::directory_iterator(path)) {
    if (entry.is_regular_file() && entry.path().extension() == ".sl") {
      out.push_back({entry.path().stem().string(), entry.path()});
    }
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.name < b.name; });
  return out;
}

fs::path ProgramDir(const ExperimentConfig& config, const std::string& program) {
  return config.out_dir / program;
}

std::string FormatKeepRate(double rate) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", rate);
  return buf;
}

std::string JoinIds(const std::vector<StatementId>& ids) {
  std::string out;
  for (const auto& id : ids) {
    if (!out.empty()) out += ';';
    out += ToString(id);
  }
  return out;
}

std::vector<std::string> SccHeader() {
  return {"program", "statements", "covered", "checked", "coverage_pct",
          "scc_pct", "gap_pp", "errors"};
}

std::vector<std::string> SccRow(const std::string& program,
                                const CoverageReport& report) {
  Ratio cov = report.StatementCoverage();
  Ratio scc = report.Scc();
  return {program,
          std::to_string(report.statements.size()),
          std::to_string(report.CoveredStatements()),
          std::to_string(report.CheckedStatements()),
          Pct(cov),
          Pct(scc),
          GapText(cov, scc),
          ""};
}

std::vector<std::string> ObccHeader() {
  return {"program", "arms", "covered", "checked", "uncheckable",
          "coverage_pct", "obcc_pct", "gap_pp", "errors"};
}

std::vector<std::string> ObccRow(const std::string& program,
                                 const CoverageReport& report) {
  Ratio cov = report.BranchCoverage();
  Ratio obcc = report.Obcc();
  bool none = report.arms.empty();
  return {program,
          std::to_string(report.arms.size()),
          std::to_string(report.CoveredArms()),
          std::to_string(report.CheckedArms()),
          std::to_string(report.UncheckableArms()),
          none ? "n/a" : Pct(cov),
          none ? "n/a" : Pct(obcc),
          none ? "n/a" : GapText(cov, obcc),
          ""};
}

fs::path WriteTraceFile(const Analysis& analysis, const fs::path& dir) {
  fs::path path = dir / "trace.jsonl";
  std::ofstream out = OpenOutput(path);
  for (const auto& [name, run] : analysis.suite) WriteTraceJsonl(run.trace, out);
  return path;
}

fs::path WriteSliceFile(const Analysis& analysis, const fs::path& dir) {
  fs::path path = dir / "slices.jsonl";
  std::ofstream out = OpenOutput(path);
  WriteSlicesJsonl(analysis.slices, out);
  return path;
}

void WriteCoverageFiles(const std::string& program, const Analysis& analysis,
                        const fs::path& dir) {
  CsvWriter scc(dir / "scc.csv");
  scc.Row(SccHeader());
  scc.Row(SccRow(program, analysis.report));
  CsvWriter obcc(dir / "obcc.csv");
  obcc.Row(ObccHeader());
  obcc.Row(ObccRow(program, analysis.report));
}

fs::path WriteMutationFile(const std::vector<Mutant>& mutants,
                           const MutationRun& run, const fs::path& dir) {
  fs::path path = dir / "mutation.csv";
  CsvWriter csv(path);
  csv.Row(MutationHeader());
  for (std::size_t i = 0; i < run.results.size(); ++i) {
    const MutationResult& r = run.results[i];
    const Mutant& m = mutants[i];
    csv.Row({std::to_string(m.id), Spelling(m.op), ToString(m.stmt),
             Spelling(r.status), r.test});
  }
  csv.Row({"score", "", "", run.ScoreText(),
           std::to_string(run.killed) + "/" + std::to_string(run.total())});
  return path;
}

fs::path WriteVariantsFile(const std::string& program,
                           const std::vector<SuiteVariant>& variants,
                           const fs::path& dir) {
  fs::path path = dir / "variants.csv";
  CsvWriter csv(path);
  csv.Row({"program", "keep_rate", "seed", "n_enabled", "disabled_ids"});
  for (const auto& v : variants) {
    std::string ids;
    for (const auto& a : v.disabled) {
      if (!ids.empty()) ids += ';';
      ids += ToString(a);
    }
    csv.Row({program, FormatKeepRate(v.keep_rate), std::to_string(v.seed),
             std::to_string(v.enabled_count()), ids});
  }
  return path;
}

void WriteRecommendationFiles(const RecommendationSet& set, const fs::path& dir) {
  CsvWriter summary(dir / "summary.csv");
  summary.Row({"rank", "target", "insertion_test", "score", "would_check_ids"});
  for (const auto& r : set.recommendations) {
    summary.Row({std::to_string(r.rank), r.target.name, r.test,
                 std::to_string(r.score), JoinIds(r.would_check)});
  }
  CsvWriter unobservable(dir / "unobservable.csv");
  unobservable.Row({"stmt"});
  for (const auto& id : set.unobservable) unobservable.Row({ToString(id)});
}

std::vector<Rq1Row> RunRq1(const fs::path& corpus, const ExperimentConfig& config) {
  std::vector<Rq1Row> rows;
  for (auto& l : LoadCorpus(corpus)) {
    Rq1Row row;
    row.program = l.entry.name;
    row.error = l.error;
    if (l.program) {
      try {
        Analysis a = AnalyzeGreen(*l.program, config.exec);
        row.report = a.report;
        row.gap = a.gap;
        WriteCoverageFiles(row.program, a, ProgramDir(config, row.program));
      } catch (const Error& e) {
        row.error = e.what();
      }
    }
    rows.push_back(std::move(row));
  }

  CsvWriter scc(config.out_dir / "scc.csv");
  CsvWriter obcc(config.out_dir / "obcc.csv");
  scc.Row(SccHeader());
  obcc.Row(ObccHeader());
  CoverageReport pooled;
  for (const auto& row : rows) {
    if (!row.error.empty()) {
      scc.Row({row.program, "", "", "", "", "", "", row.error});
      obcc.Row({row.program, "", "", "", "", "", "", "", row.error});
      continue;
    }
    scc.Row(SccRow(row.program, row.report));
    obcc.Row(ObccRow(row.program, row.report));
    pooled.statements.insert(pooled.statements.end(), row.report.statements.begin(),
                             row.report.statements.end());
    pooled.arms.insert(pooled.arms.end(), row.report.arms.begin(),
                       row.report.arms.end());
  }
  if (!rows.empty()) {
    scc.Row(SccRow("ALL", pooled));
    obcc.Row(ObccRow("ALL", pooled));
  }
  return rows;
}

Rq2Result RunRq2(const fs::path& corpus, const ExperimentConfig& config) {
  Rq2Result result;
  PairedSeries all;
  for (auto& l : LoadCorpus(corpus)) {
    const std::string& name = l.entry.name;
    if (!l.program) {
      result.errors.push_back(name + ": " + l.error);
      continue;
    }
    std::vector<SuiteVariant> variants;
    std::vector<Mutant> mutants;
    try {
      AnalyzeGreen(*l.program, config.exec);
      variants = GenerateVariants(*l.program, config.keep_rates, config.seeds);
      mutants = GenerateMutants(*l.program, config.ops, config.seed,
                                config.max_mutants);
      MutationRun baseline = RunMutation(*l.program, mutants, config.Mutation());
      WriteMutationFile(mutants, baseline, ProgramDir(config, name));
      WriteVariantsFile(name, variants, ProgramDir(config, name));
    } catch (const Error& e) {
      result.errors.push_back(name + ": " + e.what());
      continue;
    }

    PairedSeries points;
    std::set<std::int64_t> gaps;
    for (const auto& v : variants) {
      Rq2VariantRow row;
      row.program = name;
      row.keep_rate = v.keep_rate;
      row.seed = v.seed;
      row.enabled = v.enabled_count();
      row.disabled = v.disabled;
      try {
        row.gap = AnalyzeGreen(v.program, config.exec).gap;
        MutationRun run = RunMutation(v.program, mutants, config.Mutation());
        row.mutants = run.total();
        row.killed = run.killed;
        row.score_text = run.ScoreText();
        row.score_pct = run.Score().Percent();
      } catch (const Error& e) {
        result.errors.push_back(name + " rate " + FormatKeepRate(v.keep_rate) +
                                " seed " + std::to_string(v.seed) + ": " +
                                e.what());
        continue;
      }
      if (row.mutants > 0) {
        points.emplace_back(row.gap.StmtGapPp(), row.score_pct);
        gaps.insert(row.gap.stmt_gap);
      }
      result.variants.push_back(std::move(row));
    }
    result.correlations.push_back({name, static_cast<int>(points.size()),
                                   static_cast<int>(gaps.size()),
                                   Spearman(points), Pearson(points)});
    all.insert(all.end(), points.begin(), points.end());
  }
  std::set<double> all_gaps;
  for (const auto& p : all) all_gaps.insert(p.first);
  result.correlations.push_back({"ALL", static_cast<int>(all.size()),
                                 static_cast<int>(all_gaps.size()), Spearman(all),
                                 Pearson(all)});

  CsvWriter gapkills(config.out_dir / "gapkills.csv");
  gapkills.Row({"program", "keep_rate", "seed", "n_enabled", "stmt_gap_pp",
                "scc_pct", "mutants", "killed", "score_pct"});
  for (const auto& r : result.variants) {
    gapkills.Row({r.program, FormatKeepRate(r.keep_rate), std::to_string(r.seed),
                  std::to_string(r.enabled), FormatHundredths(r.gap.stmt_gap),
                  FormatHundredths(r.gap.scc), std::to_string(r.mutants),
                  std::to_string(r.killed), r.score_text});
  }
  CsvWriter correlation(config.out_dir / "correlation.csv");
  correlation.Row({"program", "points", "distinct_gaps", "spearman", "pearson"});
  for (const auto& c : result.correlations) {
    correlation.Row({c.program, std::to_string(c.points),
                     std::to_string(c.distinct_gaps), FormatCoefficient(c.spearman),
                     FormatCoefficient(c.pearson)});
  }
  CsvWriter variants(config.out_dir / "variants.csv");
  variants.Row({"program", "keep_rate", "seed", "n_enabled", "disabled_ids"});
  for (const auto& r : result.variants) {
    std::string ids;
    for (const auto& a : r.disabled) {
      if (!ids.empty()) ids += ';';
      ids += ToString(a);
    }
    variants.Row({r.program, FormatKeepRate(r.keep_rate), std::to_string(r.seed),
                  std::to_string(r.enabled), ids});
  }
  return result;
}

std::vector<Rq3Row> RunRq3(const fs::path& corpus, const ExperimentConfig& config,
                           std::vector<std::string>* errors) {
  std::vector<Rq3Row> rows;
  for (auto& l : LoadCorpus(corpus)) {
    try {
      if (!l.program) throw Error(l.error);
      Analysis a = AnalyzeGreen(*l.program, config.exec);
      Rq3Row row{l.entry.name,
                 Recommend(*l.program, GapStatements(a.report), config.top_k)};
      WriteRecommendationFiles(row.set, ProgramDir(config, row.program));
      rows.push_back(std::move(row));
    } catch (const Error& e) {
      if (errors) errors->push_back(l.entry.name + ": " + e.what());
    }
  }
  CsvWriter summary(config.out_dir / "summary.csv");
  summary.Row({"program", "rank", "target", "insertion_test", "score",
               "would_check_ids"});
  for (const auto& row : rows) {
    for (const auto& r : row.set.recommendations) {
      summary.Row({row.program, std::to_string(r.rank), r.target.name, r.test,
                   std::to_string(r.score), JoinIds(r.would_check)});
    }
  }
  return rows;
}

std::vector<Rq4Row> RunRq4(const fs::path& corpus, const ExperimentConfig& config,
                           std::vector<std::string>* errors) {
  std::vector<Rq4Row> rows;
  for (auto& l : LoadCorpus(corpus)) {
    try {
      if (!l.program) throw Error(l.error);
      const Program& program = *l.program;
      Rq4Row row;
      row.program = l.entry.name;
      Analysis before = AnalyzeGreen(program, config.exec);
      row.before = before.gap;
      row.after = before.gap;
      row.mutants = GenerateMutants(program, config.ops, config.seed,
                                    config.max_mutants);
      row.mutation_before = RunMutation(program, row.mutants, config.Mutation());
      row.mutation_after = row.mutation_before;
      Program enriched = program;
      RecommendationSet set = Recommend(program, GapStatements(before.report), 1);
      if (!set.recommendations.empty()) {
        row.applied = set.recommendations.front();
        enriched = ApplyRecommendation(program, *row.applied, config.exec);
        row.applied_text = Describe(enriched, *row.applied);
        row.after = AnalyzeGreen(enriched, config.exec).gap;
        row.mutation_after = RunMutation(enriched, row.mutants, config.Mutation());
      }
      fs::path dir = ProgramDir(config, row.program);
      WriteMutationFile(row.mutants, row.mutation_before, dir);
      std::ofstream out = OpenOutput(dir / "enriched.sl");
      out << Print(enriched);
      rows.push_back(std::move(row));
    } catch (const Error& e) {
      if (errors) errors->push_back(l.entry.name + ": " + e.what());
    }
  }
  CsvWriter csv(config.out_dir / "enrichment.csv");
  csv.Row({"program", "scc_before", "scc_after", "stmt_gap_before",
           "stmt_gap_after", "mutation_score_before", "mutation_score_after",
           "applied"});
  for (const auto& r : rows) {
    csv.Row({r.program, FormatHundredths(r.before.scc), FormatHundredths(r.after.scc),
             FormatHundredths(r.before.stmt_gap), FormatHundredths(r.after.stmt_gap),
             r.mutation_before.ScoreText(), r.mutation_after.ScoreText(),
             r.applied_text});
  }
  return rows;
}

bool RunSmoke(const fs::path& corpus, const ExperimentConfig& config,
              std::ostream& out) {
  static const char* const kStages[] = {
      "Trace file generated", "Slice file(s) generated", "SCC computed",
      "OBCC computed", "Recommender ran successfully"};
  constexpr int kStageCount = 5;

  std::optional<CorpusProgram> chosen;
  std::string setup_error;
  try {
    std::vector<CorpusProgram> programs = ListCorpus(corpus);
    for (const auto& p : programs) {
      if (p.name == "p1_add_abs") chosen = p;
    }
    if (!chosen && !programs.empty()) chosen = programs.front();
    if (!chosen) setup_error = "no .sl programs in " + corpus.string();
  } catch (const Error& e) {
    setup_error = e.what();
  }

  fs::path dir = chosen ? ProgramDir(config, chosen->name) : config.out_dir;
  fs::path log_path = dir / "smoke.log";
  std::ostringstream log;
  int passed = 0;
  try {
    if (!chosen) throw Error(setup_error);
    log << "program: " << chosen->path.string() << "\n";
    Program program = LoadProgramFile(chosen->path);
    Analysis a = AnalyzeGreen(program, config.exec);
    log << "trace: " << WriteTraceFile(a, dir).string() << "\n";
    ++passed;
    log << "slices: " << WriteSliceFile(a, dir).string() << " ("
        << a.slices.size() << " criteria)\n";
    ++passed;
    {
      CsvWriter scc(dir / "scc.csv");
      scc.Row(SccHeader());
      scc.Row(SccRow(chosen->name, a.report));
    }
    log << "scc: " << Pct(a.report.Scc()) << "\n";
    ++passed;
    {
      CsvWriter obcc(dir / "obcc.csv");
      obcc.Row(ObccHeader());
      obcc.Row(ObccRow(chosen->name, a.report));
    }
    log << "obcc: " << (a.report.arms.empty() ? "n/a" : Pct(a.report.Obcc()))
        << "\n";
    ++passed;
    RecommendationSet set =
        Recommend(program, GapStatements(a.report), config.top_k);
    WriteRecommendationFiles(set, dir);
    log << "recommendations: " << set.recommendations.size() << "\n";
    ++passed;
  } catch (const std::exception& e) {
    log << "error: " << e.what() << "\n";
  }

  try {
    std::ofstream f = OpenOutput(log_path);
    f << log.str();
  } catch (const Error&) {
    // The checklist still reports the failure.
  }
  for (int i = 0; i < kStageCount; ++i) {
    out << kStages[i] << ": ";
    if (i < passed) {
      out << "OK\n";
    } else {
      out << "FAIL (see " << log_path.string() << ")\n";
    }
  }
  return passed == kStageCount;
}

}  // namespace hccov
