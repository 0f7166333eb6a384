// Copyright 2026 The xamr Authors.
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

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "xamr/consistency.hpp"
#include "xamr/error.hpp"
#include "xamr/metric.hpp"
#include "xamr/mt_quality.hpp"
#include "xamr/penman.hpp"
#include "xamr/pipeline.hpp"
#include "xamr/report.hpp"
#include "xamr/s2match.hpp"
#include "xamr/smatch.hpp"
#include "xamr/subscores.hpp"
#include "xamr/triples.hpp"

namespace {

using namespace xamr;

std::vector<CorpusEntry> load_corpus(const std::string &path, bool lenient_refs) {
  CorpusReadOptions opts;
  opts.strict = true;  // scoring must not silently skip blocks
  opts.penman.lenient_refs = lenient_refs;
  return read_corpus(path, opts);
}

std::vector<TripleSet> to_triple_sets(const std::vector<CorpusEntry> &entries) {
  std::vector<TripleSet> sets;
  sets.reserve(entries.size());
  for (const CorpusEntry &e : entries) sets.push_back(to_triples(e.graph));
  return sets;
}

std::vector<AmrGraph> to_graphs(const std::vector<CorpusEntry> &entries) {
  std::vector<AmrGraph> graphs;
  graphs.reserve(entries.size());
  for (const CorpusEntry &e : entries) graphs.push_back(e.graph);
  return graphs;
}

std::vector<std::string> read_lines(const std::string &path, bool keep_empty) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open file: " + path);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!keep_empty && line.find_first_not_of(" \t") == std::string::npos) continue;
    lines.push_back(line);
  }
  return lines;
}

struct CommonScoreFlags {
  int restarts = 4;
  std::uint64_t seed = 0;
  int exact_threshold = 6;
  int jobs = 1;
  std::string format = "text";
  bool lenient_refs = false;

  SearchConfig search() const {
    SearchConfig cfg;
    cfg.restarts = restarts;
    cfg.seed = seed;
    cfg.exact_threshold = exact_threshold;
    return cfg;
  }
};

void add_common_flags(CLI::App *cmd, CommonScoreFlags *flags) {
  cmd->add_option("--restarts", flags->restarts, "Hill-climbing restarts")
      ->check(CLI::Range(1, 1000000));
  cmd->add_option("--seed", flags->seed, "Random seed");
  cmd->add_option("--exact-threshold", flags->exact_threshold,
                  "Variable count below which exact search is used (0 = never)")
      ->check(CLI::Range(0, 64));
  cmd->add_option("--jobs", flags->jobs, "Worker threads for corpus scoring")
      ->check(CLI::Range(1, 256));
  cmd->add_option("--format", flags->format, "Report format: text|json|csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  cmd->add_flag("--lenient-refs", flags->lenient_refs,
                "Treat undefined bare variable references as constants");
}

std::vector<LanguageOutputs> parse_language_inputs(const std::vector<std::string> &raw,
                                                   bool lenient_refs) {
  std::vector<LanguageOutputs> outputs;
  for (const std::string &chunk : raw) {
    std::istringstream in(chunk);
    std::string item;
    while (std::getline(in, item, ',')) {
      if (item.empty()) continue;
      size_t eq = item.find('=');
      if (eq == std::string::npos || eq == 0 || eq + 1 == item.size())
        throw DataError("--inputs expects LANG=FILE, got '" + item + "'");
      LanguageOutputs lang;
      lang.language = item.substr(0, eq);
      lang.entries = load_corpus(item.substr(eq + 1), lenient_refs);
      outputs.push_back(std::move(lang));
    }
  }
  return outputs;
}

int run(int argc, char **argv) {
  CLI::App app{"xamr - cross-lingual AMR evaluation toolkit"};
  app.require_subcommand(1);
  std::function<void()> action;

  // score
  auto *score_cmd = app.add_subcommand("score", "Smatch P/R/F1 between two corpora");
  struct {
    std::string gold, pred;
    CommonScoreFlags flags;
  } score_args;
  score_cmd->add_option("--gold", score_args.gold, "Gold AMR corpus")->required();
  score_cmd->add_option("--pred", score_args.pred, "Predicted AMR corpus")->required();
  add_common_flags(score_cmd, &score_args.flags);
  score_cmd->callback([&] {
    action = [&] {
      auto gold = to_triple_sets(load_corpus(score_args.gold, score_args.flags.lenient_refs));
      auto pred = to_triple_sets(load_corpus(score_args.pred, score_args.flags.lenient_refs));
      MatchResult result =
          corpus_smatch(gold, pred, score_args.flags.search(), score_args.flags.jobs);
      std::cout << render_match(result, "smatch",
                                parse_report_format(score_args.flags.format));
    };
  });

  // s2score
  auto *s2_cmd = app.add_subcommand("s2score", "S2MATCH with graded concept similarity");
  struct {
    std::string gold, pred, embeddings;
    double tau = 0.5;
    bool no_grade_top = false;
    CommonScoreFlags flags;
  } s2_args;
  s2_cmd->add_option("--gold", s2_args.gold, "Gold AMR corpus")->required();
  s2_cmd->add_option("--pred", s2_args.pred, "Predicted AMR corpus")->required();
  s2_cmd->add_option("--embeddings", s2_args.embeddings, "Word embedding file")
      ->required();
  s2_cmd->add_option("--tau", s2_args.tau, "Similarity threshold in [0,1]")
      ->check(CLI::Range(0.0, 1.0));
  s2_cmd->add_flag("--no-grade-top", s2_args.no_grade_top,
                   "Match the virtual top triple by exact equality");
  add_common_flags(s2_cmd, &s2_args.flags);
  s2_cmd->callback([&] {
    action = [&] {
      auto gold = to_triple_sets(load_corpus(s2_args.gold, s2_args.flags.lenient_refs));
      auto pred = to_triple_sets(load_corpus(s2_args.pred, s2_args.flags.lenient_refs));
      EmbeddingTable table = load_embeddings(s2_args.embeddings);
      S2Config cfg;
      cfg.tau = s2_args.tau;
      cfg.search = s2_args.flags.search();
      cfg.grade_top = !s2_args.no_grade_top;
      MatchResult result = corpus_s2match(gold, pred, table, cfg, s2_args.flags.jobs);
      std::cout << render_match(result, "s2match",
                                parse_report_format(s2_args.flags.format));
    };
  });

  // breakdown
  auto *breakdown_cmd =
      app.add_subcommand("breakdown", "Fine-grained per-aspect evaluation");
  struct {
    std::string gold, pred, embeddings;
    double tau = 0.5;
    CommonScoreFlags flags;
  } bd_args;
  breakdown_cmd->add_option("--gold", bd_args.gold, "Gold AMR corpus")->required();
  breakdown_cmd->add_option("--pred", bd_args.pred, "Predicted AMR corpus")->required();
  breakdown_cmd->add_option("--embeddings", bd_args.embeddings,
                            "Word embeddings (switches scoring to S2MATCH)");
  breakdown_cmd->add_option("--tau", bd_args.tau, "Similarity threshold in [0,1]")
      ->check(CLI::Range(0.0, 1.0));
  add_common_flags(breakdown_cmd, &bd_args.flags);
  breakdown_cmd->callback([&] {
    action = [&] {
      auto gold = to_graphs(load_corpus(bd_args.gold, bd_args.flags.lenient_refs));
      auto pred = to_graphs(load_corpus(bd_args.pred, bd_args.flags.lenient_refs));
      EmbeddingTable table;
      Metric metric = Metric::smatch(bd_args.flags.search());
      if (!bd_args.embeddings.empty()) {
        table = load_embeddings(bd_args.embeddings);
        S2Config cfg;
        cfg.tau = bd_args.tau;
        cfg.search = bd_args.flags.search();
        metric = Metric::s2match(table, cfg);
      }
      BreakdownReport report = corpus_breakdown(gold, pred, metric, bd_args.flags.jobs);
      std::cout << render_breakdown(report, metric.name(),
                                    parse_report_format(bd_args.flags.format));
    };
  });

  // consistency
  auto *cons_cmd = app.add_subcommand(
      "consistency", "Cross-lingual consistency matrix over parallel outputs");
  struct {
    std::vector<std::string> inputs;
    std::string metric = "smatch";
    std::string embeddings;
    double tau = 0.0;
    bool with_breakdown = false;
    CommonScoreFlags flags;
  } cons_args;
  cons_cmd->add_option("--inputs", cons_args.inputs, "LANG=FILE[,LANG=FILE...]")
      ->required();
  cons_cmd->add_option("--metric", cons_args.metric, "smatch|s2match")
      ->check(CLI::IsMember({"smatch", "s2match"}));
  cons_cmd->add_option("--embeddings", cons_args.embeddings,
                       "Word embeddings (required for s2match)");
  cons_cmd->add_option("--tau", cons_args.tau, "Similarity threshold in [0,1]")
      ->check(CLI::Range(0.0, 1.0));
  cons_cmd->add_flag("--breakdown", cons_args.with_breakdown,
                     "Also report per-aspect matrices");
  add_common_flags(cons_cmd, &cons_args.flags);
  cons_cmd->callback([&] {
    action = [&] {
      std::vector<LanguageOutputs> outputs =
          parse_language_inputs(cons_args.inputs, cons_args.flags.lenient_refs);
      EmbeddingTable table;
      Metric metric = Metric::smatch(cons_args.flags.search());
      if (cons_args.metric == "s2match") {
        if (cons_args.embeddings.empty())
          throw DataError("--metric s2match requires --embeddings");
        table = load_embeddings(cons_args.embeddings);
        S2Config cfg;
        cfg.tau = cons_args.tau;
        cfg.search = cons_args.flags.search();
        metric = Metric::s2match(table, cfg);
      }
      ReportFormat format = parse_report_format(cons_args.flags.format);
      if (cons_args.with_breakdown) {
        ConsistencyBreakdown report =
            breakdown_consistency(outputs, metric, cons_args.flags.jobs);
        std::cout << render_consistency_breakdown(report, metric.name(), format);
      } else {
        ConsistencyMatrix matrix =
            consistency_matrix(outputs, metric, cons_args.flags.jobs);
        std::cout << render_consistency(matrix, metric.name(), format);
      }
    };
  });

  // bleu
  auto *bleu_cmd = app.add_subcommand("bleu", "Corpus BLEU over two line-aligned files");
  struct {
    std::string hyp, ref;
    int max_n = 4;
    std::string format = "text";
  } bleu_args;
  bleu_cmd->add_option("--hyp", bleu_args.hyp, "Hypothesis sentences, one per line")
      ->required();
  bleu_cmd->add_option("--ref", bleu_args.ref, "Reference sentences, one per line")
      ->required();
  bleu_cmd->add_option("--max-n", bleu_args.max_n, "Maximum n-gram order")
      ->check(CLI::Range(1, 9));
  bleu_cmd->add_option("--format", bleu_args.format, "Report format: text|json|csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  bleu_cmd->callback([&] {
    action = [&] {
      std::vector<std::string> hyp = read_lines(bleu_args.hyp, true);
      std::vector<std::string> ref = read_lines(bleu_args.ref, true);
      if (hyp.size() != ref.size())
        throw DataError("line count mismatch: " + std::to_string(hyp.size()) +
                        " hypotheses vs " + std::to_string(ref.size()) + " references");
      std::vector<SentencePair> pairs(hyp.size());
      for (size_t i = 0; i < hyp.size(); ++i) {
        pairs[i].hypothesis = tokenize(hyp[i]);
        pairs[i].reference = tokenize(ref[i]);
      }
      double bleu = corpus_bleu(pairs, bleu_args.max_n);
      std::cout << render_bleu(bleu, parse_report_format(bleu_args.format));
    };
  });

  // embsim
  auto *emb_cmd = app.add_subcommand(
      "embsim", "Mean pairwise cosine over precomputed sentence embeddings");
  struct {
    std::string hyp, ref;
    std::string format = "text";
  } emb_args;
  emb_cmd->add_option("--hyp-emb", emb_args.hyp, "Hypothesis embedding file")
      ->required();
  emb_cmd->add_option("--ref-emb", emb_args.ref, "Reference embedding file")
      ->required();
  emb_cmd->add_option("--format", emb_args.format, "Report format: text|json|csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  emb_cmd->callback([&] {
    action = [&] {
      CosineReport report = embedding_cosine_report(
          load_sentence_embeddings(emb_args.hyp), load_sentence_embeddings(emb_args.ref));
      std::cout << render_cosine(report, parse_report_format(emb_args.format));
    };
  });

  // pipeline
  auto *pipe_cmd =
      app.add_subcommand("pipeline", "Run translate+parse over external adapters");
  struct {
    std::string input, out, provenance;
    std::string translate_cmd, parse_cmd, translate_url, parse_url;
    std::string cache_dir, source_lang = "unknown";
    int batch_size = 32;
    double timeout = 300.0;
  } pipe_args;
  pipe_cmd->add_option("--input", pipe_args.input, "Sentences, one per line")
      ->required();
  pipe_cmd->add_option("--out", pipe_args.out, "Output AMR corpus file")->required();
  pipe_cmd->add_option("--translate-cmd", pipe_args.translate_cmd,
                       "Translator command (line protocol via sh -c)");
  pipe_cmd->add_option("--parse-cmd", pipe_args.parse_cmd,
                       "Parser command (Penman blocks out)");
  pipe_cmd->add_option("--translate-url", pipe_args.translate_url,
                       "Translator HTTP endpoint (POST JSON)");
  pipe_cmd->add_option("--parse-url", pipe_args.parse_url, "Parser HTTP endpoint");
  pipe_cmd->add_option("--cache", pipe_args.cache_dir,
                       "Cache directory (default $XAMR_CACHE)");
  pipe_cmd->add_option("--source-lang", pipe_args.source_lang, "Source language tag");
  pipe_cmd->add_option("--batch-size", pipe_args.batch_size, "Sentences per adapter call")
      ->check(CLI::Range(1, 100000));
  pipe_cmd->add_option("--timeout", pipe_args.timeout, "Adapter timeout in seconds");
  pipe_cmd->add_option("--provenance", pipe_args.provenance,
                       "Provenance sidecar path (default <out>.provenance.json)");
  pipe_cmd->callback([&] {
    action = [&] {
      auto make_adapter = [&](const std::string &cmd, const std::string &url,
                              const char *role) {
        AdapterSpec spec;
        if (!cmd.empty() && !url.empty())
          throw DataError(std::string(role) + ": give either a command or a URL");
        if (cmd.empty() && url.empty())
          throw DataError(std::string(role) + " adapter missing: use --" +
                          std::string(role) + "-cmd or --" + std::string(role) + "-url");
        if (!url.empty()) {
          spec.kind = AdapterSpec::Kind::Http;
          spec.url = url;
        } else {
          spec.kind = AdapterSpec::Kind::Subprocess;
          spec.command = cmd;
        }
        spec.batch_size = pipe_args.batch_size;
        spec.timeout_seconds = pipe_args.timeout;
        return spec;
      };
      AdapterSpec translator =
          make_adapter(pipe_args.translate_cmd, pipe_args.translate_url, "translate");
      AdapterSpec parser = make_adapter(pipe_args.parse_cmd, pipe_args.parse_url, "parse");

      std::string cache_dir = pipe_args.cache_dir;
      if (cache_dir.empty()) {
        const char *env = std::getenv("XAMR_CACHE");
        if (env) cache_dir = env;
      }

      std::vector<std::string> sentences = read_lines(pipe_args.input, false);
      std::vector<PipelineInput> inputs;
      inputs.reserve(sentences.size());
      for (size_t i = 0; i < sentences.size(); ++i)
        inputs.push_back({std::to_string(i + 1), sentences[i]});

      PipelineRunStats stats;
      std::vector<PipelineRecord> records = run_pipeline(
          inputs, translator, parser, cache_dir, pipe_args.source_lang, &stats);
      std::string provenance = pipe_args.provenance.empty()
                                   ? pipe_args.out + ".provenance.json"
                                   : pipe_args.provenance;
      write_predictions(records, pipe_args.out, provenance);
      std::cout << records.size() << " records -> " << pipe_args.out << '\n'
                << "translator invocations " << stats.translator.invocations
                << ", cache hits " << stats.translation_cache_hits << '\n'
                << "parser invocations " << stats.parser.invocations << ", cache hits "
                << stats.parse_cache_hits << '\n';
    };
  });

  // validate
  auto *validate_cmd = app.add_subcommand("validate", "Check every entry of a corpus");
  struct {
    std::string file;
    bool lenient_refs = false;
  } val_args;
  validate_cmd->add_option("--file", val_args.file, "AMR corpus file")->required();
  validate_cmd->add_flag("--lenient-refs", val_args.lenient_refs,
                         "Treat undefined bare variable references as constants");
  validate_cmd->callback([&] {
    action = [&] {
      CorpusReadOptions opts;
      opts.penman.lenient_refs = val_args.lenient_refs;
      std::vector<CorpusDiagnostic> diagnostics;
      std::vector<CorpusEntry> entries = read_corpus(val_args.file, opts, &diagnostics);
      size_t invalid = diagnostics.size();
      for (const CorpusEntry &entry : entries) {
        std::vector<std::string> problems = check_graph(entry.graph);
        if (problems.empty()) {
          std::cout << "ok " << entry.id << '\n';
        } else {
          ++invalid;
          for (const std::string &p : problems)
            std::cerr << "error " << entry.id << ": " << p << '\n';
        }
      }
      for (const CorpusDiagnostic &d : diagnostics)
        std::cerr << "error " << d.id << " (line " << d.line << "): " << d.message
                  << '\n';
      std::cout << entries.size() + diagnostics.size() << " entries, " << invalid
                << " invalid\n";
      if (invalid > 0) throw DataError("corpus has invalid entries");
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }
  action();
  return 0;
}

}  // namespace

int main(int argc, char **argv) {
  try {
    return run(argc, argv);
  } catch (const xamr::Error &e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
