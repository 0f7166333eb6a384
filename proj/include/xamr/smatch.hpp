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

#ifndef XAMR_SMATCH_HPP_
#define XAMR_SMATCH_HPP_

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "xamr/triples.hpp"

namespace xamr {

struct SearchConfig {
  int restarts = 4;
  std::uint64_t seed = 0;
  // Mapped-side variable count below which exhaustive search replaces hill
  // climbing. 0 disables the exact path entirely.
  int exact_threshold = 6;
};

// Injective partial map from predicted variables to gold variables, with
// the triple mass it matched.
struct Alignment {
  std::vector<std::pair<std::string, std::string>> mapping;
  double matched_score = 0.0;
};

struct MatchResult {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  double matched = 0.0;
  double pred_size = 0.0;
  double gold_size = 0.0;
  Alignment alignment;
  int restarts_used = 0;  // 0 when the exact path answered
  std::uint64_t seed = 0;
  // An empty triple bag leaves the corresponding ratio undefined; the value
  // is then reported as 0.0 (or 1.0 for the both-empty identity case).
  bool precision_defined = true;
  bool recall_defined = true;
};

// Similarity of two concept labels in [0,1]. An unset function means exact
// (binary) label equality.
using ConceptSimilarity = std::function<double(const std::string &, const std::string &)>;

// Computes P/R/F1 over the best variable alignment found. Precision uses
// the pred triple count, recall the gold one; f1 = 2*matched/(pred+gold).
MatchResult smatch_score(const TripleSet &gold, const TripleSet &pred,
                         const SearchConfig &cfg = {});

// Alignment search with pluggable concept similarity. Graded credit applies
// to Instance triples and, when grade_top is set, the virtual top triple;
// every other triple stays binary.
MatchResult align_score(const TripleSet &gold, const TripleSet &pred,
                        const ConceptSimilarity &sim, bool grade_top,
                        const SearchConfig &cfg);

// Exhaustive enumeration over every injective total mapping of the smaller
// variable set, scored by a direct triple-renaming count that shares no
// machinery with the search path. Guard: min(|vars|) <= 8 and at most ~2e7
// mappings, otherwise a DataError is thrown.
MatchResult brute_force_score(const TripleSet &gold, const TripleSet &pred);
MatchResult brute_force_score(const TripleSet &gold, const TripleSet &pred,
                              const ConceptSimilarity &sim, bool grade_top);

// Micro-average: sums matched and both triple-bag sizes across pairs before
// computing P/R/F1. Throws DataError on a length mismatch. `jobs` bounds
// the number of worker threads; the aggregate is order-independent.
MatchResult corpus_smatch(const std::vector<TripleSet> &gold,
                          const std::vector<TripleSet> &pred,
                          const SearchConfig &cfg = {}, int jobs = 1);

// Shared corpus aggregation for any per-pair scorer.
using PairScoreFn = std::function<MatchResult(const TripleSet &gold, const TripleSet &pred)>;
MatchResult corpus_score(const std::vector<TripleSet> &gold,
                         const std::vector<TripleSet> &pred,
                         const PairScoreFn &pair_scorer, int jobs = 1);

}  // namespace xamr

#endif  // XAMR_SMATCH_HPP_
