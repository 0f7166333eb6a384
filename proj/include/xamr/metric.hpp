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

#ifndef XAMR_METRIC_HPP_
#define XAMR_METRIC_HPP_

#include <string>
#include <vector>

#include "xamr/s2match.hpp"
#include "xamr/smatch.hpp"

namespace xamr {

// Value-level choice between binary Smatch and graded S2MATCH scoring, so
// breakdowns and consistency matrices can be computed with either. An
// s2match Metric borrows the embedding table; keep it alive.
class Metric {
 public:
  static Metric smatch(const SearchConfig &cfg = {}) {
    Metric m;
    m.name_ = "smatch";
    m.search_ = cfg;
    return m;
  }

  static Metric s2match(const EmbeddingTable &table, const S2Config &cfg = {}) {
    Metric m;
    m.name_ = "s2match";
    m.search_ = cfg.search;
    m.table_ = &table;
    m.s2_ = cfg;
    return m;
  }

  const std::string &name() const { return name_; }

  MatchResult pair(const TripleSet &gold, const TripleSet &pred) const {
    if (table_) return s2match_score(gold, pred, *table_, s2_);
    return smatch_score(gold, pred, search_);
  }

  MatchResult corpus(const std::vector<TripleSet> &gold,
                     const std::vector<TripleSet> &pred, int jobs = 1) const {
    return corpus_score(
        gold, pred,
        [this](const TripleSet &g, const TripleSet &p) { return pair(g, p); },
        jobs);
  }

 private:
  std::string name_;
  SearchConfig search_;
  const EmbeddingTable *table_ = nullptr;
  S2Config s2_;
};

}  // namespace xamr

#endif  // XAMR_METRIC_HPP_
