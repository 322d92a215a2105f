// Copyright 2026 The e2estyle Authors.
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

// e2estyle: command-line front end.
//
// Exit status: 0 on success, 1 on usage and validation errors, 2 on I/O
// errors. Diagnostics go to stderr; results only go to the files named on
// the command line.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "e2estyle/annotation.h"
#include "e2estyle/config.h"
#include "e2estyle/corpus.h"
#include "e2estyle/csv.h"
#include "e2estyle/error.h"
#include "e2estyle/evaluation.h"
#include "e2estyle/reports.h"
#include "e2estyle/selection.h"
#include "e2estyle/stats.h"

namespace e2estyle {
namespace {

struct InputOptions {
  std::string path;
  std::string split = "train";
  bool permissive = false;
  bool allow_missing_ref = false;

  void Attach(CLI::App *cmd, bool required = true) {
    auto *in = cmd->add_option("--in", path, "Input corpus (CSV or TSV)");
    if (required) in->required();
    cmd->add_option("--split", split, "Split tag: train, dev or test")
        ->capture_default_str();
    cmd->add_flag("--permissive", permissive,
                  "Report and skip rows whose MR fails to parse");
    cmd->add_flag("--allow-missing-ref", allow_missing_ref,
                  "Accept a file without a 'ref' column");
  }

  Corpus Load() const { return LoadPath(path); }

  Corpus LoadPath(const std::string &p) const {
    const auto s = SplitFromName(split);
    if (!s) throw ValidationError("unknown split '" + split + "'");
    LoadOptions options;
    options.permissive = permissive;
    options.allow_missing_ref = allow_missing_ref;
    LoadResult result = LoadCorpusWithReport(p, *s, options);
    for (const BadRow &bad : result.bad_rows) {
      std::cerr << p << ": row " << bad.row << ": " << bad.message << "\n";
    }
    return std::move(result.corpus);
  }
};

std::string VersionText() {
  return "e2estyle " + std::string(ToolkitVersion()) +
         "\nschema-fingerprint " + DefaultSchemaFingerprint() +
         "\nlexicon-fingerprint " + DefaultLexiconFingerprint();
}

Toolkit MakeToolkit(const std::string &config_path) {
  if (config_path.empty()) return Toolkit::Default();
  return LoadToolkit(config_path);
}

void WriteJson(const std::string &path, const std::string &json) {
  WriteFile(path, json + "\n");
}

int Run(int argc, char **argv) {
  CLI::App app{
      "Corpus statistics, stylistic selection, annotation and evaluation "
      "for E2E-style MR-to-text data."};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", VersionText());

  std::string config_path;
  std::size_t jobs = 1;
  app.add_option("--config", config_path,
                 "JSON config with schema and lexicon overrides")
      ->envname(std::string(kConfigEnvVar));
  app.add_option("-j,--jobs", jobs, "Worker threads, 0 for all cores")
      ->capture_default_str();

  // stats
  auto *stats = app.add_subcommand("stats", "Corpus statistics as JSON");
  InputOptions stats_in;
  std::string stats_out;
  stats_in.Attach(stats);
  stats->add_option("--out", stats_out, "Output JSON")->required();

  // analyze
  auto *analyze =
      app.add_subcommand("analyze", "Per-sample style profiles as JSON");
  InputOptions analyze_in;
  std::string analyze_out;
  analyze_in.Attach(analyze);
  analyze->add_option("--out", analyze_out, "Output JSON")->required();

  // select
  auto *select = app.add_subcommand("select", "Stylistic subset selection");
  InputOptions select_in;
  std::string select_out, select_schema, select_report;
  std::optional<int> select_threshold;
  select_in.Attach(select);
  select->add_option("--out", select_out, "Output corpus")->required();
  select->add_option("--schema", select_schema, "Weighting schema JSON")
      ->check(CLI::ExistingFile);
  select->add_option("--threshold", select_threshold, "Score threshold")
      ->check(CLI::NonNegativeNumber);
  select->add_option("--report", select_report, "Selection report JSON");

  // subset
  auto *subset =
      app.add_subcommand("subset", "Samples showing one style category");
  InputOptions subset_in;
  std::string subset_out, subset_category, subset_marker;
  subset_in.Attach(subset);
  subset->add_option("--out", subset_out, "Output corpus")->required();
  auto *cat_opt = subset->add_option("--category", subset_category,
                                     "aggregation, contrast, fronting, "
                                     "subordination, existential, "
                                     "imperative_modal");
  auto *marker_opt =
      subset->add_option("--marker", subset_marker, "Marker subset id");
  cat_opt->excludes(marker_opt);

  // annotate
  auto *annotate = app.add_subcommand("annotate", "Add MR annotations");
  InputOptions annotate_in;
  std::string annotate_out, annotate_report;
  bool do_contrast = false, do_emph = false;
  annotate_in.Attach(annotate);
  annotate->add_option("--out", annotate_out, "Output corpus")->required();
  annotate->add_flag("--contrast", do_contrast,
                     "Contrast/concession relation slot");
  annotate->add_flag("--emph", do_emph, "Emphasis tokens");
  annotate->add_option("--report", annotate_report, "Annotation report JSON");

  // align
  auto *align = app.add_subcommand("align", "Slot alignment diagnostics");
  InputOptions align_in;
  std::string align_report, align_delex;
  align_in.Attach(align);
  align->add_option("--report", align_report, "Alignment report JSON")
      ->required();
  align->add_option("--delex-out", align_delex, "Delexicalized corpus");

  // evaluate
  auto *evaluate = app.add_subcommand("evaluate", "Output-quality metrics");
  InputOptions eval_in;
  std::string eval_refs, eval_outputs, eval_report;
  std::string eval_metrics = "ser,emph,contrast,conformance";
  bool eval_strict = false, eval_no_samples = false;
  evaluate->add_option("--refs", eval_refs, "Reference corpus (mr, ref)");
  evaluate->add_option("--outputs", eval_outputs,
                       "System outputs (mr, output)");
  evaluate->add_option("--metrics", eval_metrics, "Comma-separated metrics")
      ->capture_default_str();
  evaluate->add_option("--report", eval_report, "Report JSON")->required();
  evaluate->add_flag("--strict", eval_strict,
                     "Count contradicted familyFriendly slots as errors");
  evaluate->add_flag("--no-samples", eval_no_samples,
                     "Omit per-sample diagnostics");
  evaluate->add_option("--split", eval_in.split, "Split tag of --refs");
  evaluate->add_flag("--permissive", eval_in.permissive,
                     "Report and skip unparsable rows of --refs");

  // aggregation-report
  auto *aggregation = app.add_subcommand(
      "aggregation-report", "Scalar value pairs open to aggregation");
  InputOptions agg_in;
  std::string agg_out;
  agg_in.Attach(aggregation);
  aggregation->add_option("--out", agg_out, "Output JSON")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    if (code == 0) return 0;
    std::cerr << app.help();
    return 1;
  }

  const Toolkit toolkit = MakeToolkit(config_path);

  if (*stats) {
    const Corpus corpus = stats_in.Load();
    const CorpusStats s = ComputeStats(corpus, toolkit.analyzer, jobs);
    WriteJson(stats_out, s.ToJson());
    std::cerr << "samples: " << s.total_samples
              << ", unique MRs: " << s.unique_mrs << "\n";
  } else if (*analyze) {
    const Corpus corpus = analyze_in.Load();
    const auto scored = ScoreCorpus(corpus, toolkit.analyzer,
                                    toolkit.detector, toolkit.schema, jobs);
    WriteJson(analyze_out, ProfilesJson(corpus, scored));
  } else if (*select) {
    WeightingSchema schema = toolkit.schema;
    if (!select_schema.empty()) {
      schema = WeightingSchema::FromJson(ReadFile(select_schema));
    }
    if (select_threshold) schema.threshold = *select_threshold;
    const Corpus corpus = select_in.Load();
    const SelectionResult result = SelectStylisticSubset(
        corpus, toolkit.analyzer, toolkit.detector, schema, jobs);
    WriteCorpus(result.corpus, select_out, FormatForPath(select_out));
    if (!select_report.empty()) {
      WriteJson(select_report, SelectionJson(result, schema, corpus.size()));
    }
    std::cerr << "selected " << result.corpus.size() << " of "
              << corpus.size() << " samples\n";
  } else if (*subset) {
    const Corpus corpus = subset_in.Load();
    Corpus out;
    if (!subset_category.empty()) {
      const auto category = CategoryFromName(subset_category);
      if (!category) {
        throw ValidationError("unknown category '" + subset_category + "'");
      }
      out = ExtractCategorySubset(corpus, *category, toolkit.analyzer,
                                  toolkit.detector, jobs);
    } else if (!subset_marker.empty()) {
      const auto marker = MarkerSubsetFromId(subset_marker);
      if (!marker) {
        throw ValidationError("unknown marker subset '" + subset_marker + "'");
      }
      out = ExtractMarkerSubset(corpus, *marker, toolkit.analyzer,
                                toolkit.detector, jobs);
    } else {
      throw ValidationError("subset needs --category or --marker");
    }
    WriteCorpus(out, subset_out, FormatForPath(subset_out));
    std::cerr << "kept " << out.size() << " of " << corpus.size()
              << " samples\n";
  } else if (*annotate) {
    if (!do_contrast && !do_emph) {
      throw ValidationError("annotate needs --contrast and/or --emph");
    }
    Corpus corpus = annotate_in.Load();
    std::string report = "{";
    if (do_contrast) {
      ContrastAnnotation a = AnnotateContrast(corpus, toolkit, jobs);
      std::cerr << "contrast: " << a.counts.labeled << " labeled ("
                << a.counts.contrast << " contrast, " << a.counts.concession
                << " concession), " << a.counts.discarded << " discarded, "
                << a.counts.passed << " passed\n";
      report += "\"contrast\": " + ContrastJson(a);
      corpus = std::move(a.corpus);
    }
    if (do_emph) {
      EmphasisAnnotation a = AnnotateEmphasis(corpus, toolkit, jobs);
      std::cerr << "emphasis: " << a.emphasized_slots << " slots in "
                << a.emphasized_samples << " samples, " << a.name_unaligned
                << " samples without an aligned name\n";
      if (do_contrast) report += ", ";
      report += "\"emphasis\": " + EmphasisJson(corpus, a);
      corpus = std::move(a.corpus);
    }
    report += "}";
    WriteCorpus(corpus, annotate_out, FormatForPath(annotate_out));
    if (!annotate_report.empty()) WriteJson(annotate_report, report);
  } else if (*align) {
    const Corpus corpus = align_in.Load();
    const AlignmentRun run = AlignCorpus(corpus, toolkit, jobs);
    WriteJson(align_report, AlignmentJson(corpus, run));
    if (!align_delex.empty()) {
      Corpus delex;
      for (std::size_t i = 0; i < corpus.size(); ++i) {
        const CorpusSample &s = corpus.samples[i];
        DelexResult d =
            Delexicalize(s.mr, toolkit.analyzer.Analyze(s.ref),
                         run.alignments[i]);
        for (const auto &msg : d.diagnostics) {
          std::cerr << "row " << i + 1 << ": " << msg << "\n";
        }
        delex.samples.push_back({std::move(d.mr), std::move(d.utterance),
                                 s.split});
      }
      WriteCorpus(delex, align_delex, FormatForPath(align_delex));
    }
    std::cerr << "aligned " << run.summary.aligned << " of "
              << run.summary.slots << " slots\n";
  } else if (*evaluate) {
    std::vector<EvalPair> pairs;
    if (!eval_outputs.empty()) {
      pairs = LoadEvalPairs(eval_outputs);
    } else if (!eval_refs.empty()) {
      pairs = PairsFromCorpus(eval_in.LoadPath(eval_refs));
    } else {
      throw ValidationError("evaluate needs --outputs or --refs");
    }
    EvalOptions options;
    options.metrics = ParseMetrics(eval_metrics);
    options.strict_ser = eval_strict;
    options.jobs = jobs;
    options.per_sample = !eval_no_samples;
    const EvalReport report = Evaluate(pairs, toolkit, options);
    WriteJson(eval_report, report.ToJson());
    if (report.ser) {
      std::cerr << "slot error rate: " << report.ser->overall.numerator << "/"
                << report.ser->overall.denominator << "\n";
    }
  } else if (*aggregation) {
    const AggregationReport r = AggregationPotential(agg_in.Load());
    WriteJson(agg_out, r.ToJson());
    std::cerr << "feasible samples: " << r.total << " of " << r.corpus_size
              << "\n";
  }
  return 0;
}

}  // namespace
}  // namespace e2estyle

int main(int argc, char **argv) {
  try {
    return e2estyle::Run(argc, argv);
  } catch (const e2estyle::IoError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const e2estyle::Error &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
