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

#ifndef XAMR_PIPELINE_HPP_
#define XAMR_PIPELINE_HPP_

#include <string>
#include <vector>

#include "xamr/penman.hpp"

namespace xamr {

// External translator / parser backend. Subprocess adapters speak the line
// protocol: UTF-8, LF-terminated lines in; for translation one line out per
// line in, for parsing blank-line separated Penman blocks out, one per line
// in; nonzero exit status is a failure. HTTP adapters receive POST JSON
// {"<request_field>": [...]} and answer {"<response_field>": [...]}.
struct AdapterSpec {
  enum class Kind { Subprocess, Http };
  Kind kind = Kind::Subprocess;
  std::string command;  // subprocess: run through /bin/sh -c
  std::string url;      // http: full endpoint, e.g. http://host:8080/translate
  std::string request_field = "sentences";
  std::string response_field = "outputs";
  int batch_size = 32;
  double timeout_seconds = 300.0;
  std::string version;  // free-form label, folded into the cache identity

  // Stable string naming this adapter for caching and provenance.
  std::string identity() const;
};

struct AdapterStats {
  int invocations = 0;  // number of adapter calls (one per batch)
};

// Sends sentences through the adapter in batches; output order matches
// input order. A count mismatch raises a DataError naming the batch.
std::vector<std::string> translate_corpus(const std::vector<std::string> &sentences,
                                          const AdapterSpec &adapter,
                                          AdapterStats *stats = nullptr);

// Sends sentences through a parser adapter and parses each returned block.
std::vector<AmrGraph> parse_corpus(const std::vector<std::string> &sentences,
                                   const AdapterSpec &adapter,
                                   AdapterStats *stats = nullptr,
                                   const PenmanOptions &penman = {});

struct PipelineInput {
  std::string id;
  std::string sentence;
};

struct PipelineRecord {
  std::string id;
  std::string source_sentence;
  std::string source_language;
  std::string translated_sentence;
  AmrGraph graph;
  std::string translated_at;  // ISO-8601 UTC; empty for cache-backed steps
  std::string parsed_at;
  std::string translator_id;
  std::string parser_id;
};

struct PipelineRunStats {
  AdapterStats translator;
  AdapterStats parser;
  int translation_cache_hits = 0;
  int parse_cache_hits = 0;
};

// Two-step translate+parse run. Results are cached per sentence under
// cache_dir, keyed by (adapter identity, sentence); a re-run over an
// unchanged corpus performs zero adapter invocations, and changing one
// sentence re-invokes the adapters for that sentence only. An empty
// cache_dir disables caching. Cache files carry a content hash; a hash
// mismatch raises a DataError.
std::vector<PipelineRecord> run_pipeline(const std::vector<PipelineInput> &inputs,
                                         const AdapterSpec &translator,
                                         const AdapterSpec &parser,
                                         const std::string &cache_dir,
                                         const std::string &source_language = "",
                                         PipelineRunStats *stats = nullptr);

// Writes the predictions as an AMR corpus file (id + translated sentence +
// graph) and a JSON provenance sidecar.
void write_predictions(const std::vector<PipelineRecord> &records,
                       const std::string &amr_path,
                       const std::string &provenance_path);

}  // namespace xamr

#endif  // XAMR_PIPELINE_HPP_
