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

#ifndef XAMR_S2MATCH_HPP_
#define XAMR_S2MATCH_HPP_

#include <string>
#include <unordered_map>
#include <vector>

#include "xamr/smatch.hpp"

namespace xamr {

// Token vectors stored with unit L2 norm. Immutable after load; safe to
// share across threads.
struct EmbeddingTable {
  int dimension = 0;
  std::unordered_map<std::string, std::vector<double>> vectors;

  std::size_t size() const { return vectors.size(); }
  const std::vector<double> *find(const std::string &token) const {
    auto it = vectors.find(token);
    return it == vectors.end() ? nullptr : &it->second;
  }
};

// GloVe-style flat text: one "token v1 ... vD" per line, optional "N D"
// header. Vectors are L2-normalized on load; duplicate tokens keep the
// first occurrence. Throws DataError on a dimension mismatch or an
// unparseable number.
EmbeddingTable load_embeddings(const std::string &path);

struct S2Config {
  double tau = 0.5;
  SearchConfig search;
  // Whether the virtual top triple earns graded credit like Instance
  // triples do; when false it is matched by exact value equality.
  bool grade_top = true;
};

// Graded label similarity: 1.0 for equal labels; otherwise the cosine of
// the composed label vectors if it reaches tau, else 0. Labels compose by
// stripping a trailing PropBank sense suffix ("-01"), splitting on
// hyphens, and averaging token vectors; any out-of-vocabulary token makes
// the pair exact-match-only.
double concept_similarity(const std::string &a, const std::string &b,
                          const EmbeddingTable &table, double tau);

// Smatch with graded credit for Instance (and optionally top) triples.
MatchResult s2match_score(const TripleSet &gold, const TripleSet &pred,
                          const EmbeddingTable &table, const S2Config &cfg = {});

// Exhaustive graded oracle; same guards as brute_force_score.
MatchResult s2match_brute_force(const TripleSet &gold, const TripleSet &pred,
                                const EmbeddingTable &table, const S2Config &cfg = {});

MatchResult corpus_s2match(const std::vector<TripleSet> &gold,
                           const std::vector<TripleSet> &pred,
                           const EmbeddingTable &table, const S2Config &cfg = {},
                           int jobs = 1);

}  // namespace xamr

#endif  // XAMR_S2MATCH_HPP_
