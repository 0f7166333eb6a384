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

#include "xamr/consistency.hpp"

#include <algorithm>
#include <unordered_map>

#include "xamr/error.hpp"

namespace xamr {
namespace {

bool all_explicit_ids(const LanguageOutputs &outputs) {
  return std::all_of(outputs.entries.begin(), outputs.entries.end(),
                     [](const CorpusEntry &e) { return !e.synthetic_id; });
}

// Index pairs (into a.entries / b.entries) in a's order.
std::vector<std::pair<size_t, size_t>> align_entries(const LanguageOutputs &a,
                                                     const LanguageOutputs &b) {
  if (a.entries.size() != b.entries.size())
    throw DataError("consistency: " + a.language + " has " +
                    std::to_string(a.entries.size()) + " entries but " + b.language +
                    " has " + std::to_string(b.entries.size()));
  std::vector<std::pair<size_t, size_t>> pairs;
  pairs.reserve(a.entries.size());
  if (all_explicit_ids(a) && all_explicit_ids(b)) {
    std::unordered_map<std::string, size_t> b_index;
    for (size_t i = 0; i < b.entries.size(); ++i) {
      if (!b_index.emplace(b.entries[i].id, i).second)
        throw DataError("consistency: duplicate id '" + b.entries[i].id + "' in " +
                        b.language);
    }
    for (size_t i = 0; i < a.entries.size(); ++i) {
      auto it = b_index.find(a.entries[i].id);
      if (it == b_index.end())
        throw DataError("consistency: id '" + a.entries[i].id + "' from " +
                        a.language + " is missing in " + b.language);
      pairs.emplace_back(i, it->second);
    }
  } else {
    for (size_t i = 0; i < a.entries.size(); ++i) pairs.emplace_back(i, i);
  }
  return pairs;
}

MatchResult transposed(MatchResult r) {
  std::swap(r.precision, r.recall);
  std::swap(r.pred_size, r.gold_size);
  std::swap(r.precision_defined, r.recall_defined);
  r.alignment.mapping.clear();
  return r;
}

MatchResult identity_cell(double triple_mass) {
  MatchResult r;
  r.precision = r.recall = r.f1 = 1.0;
  r.matched = r.pred_size = r.gold_size = triple_mass;
  return r;
}

using Views = std::vector<TripleSet>;  // per entry, aligned with entries

ConsistencyMatrix score_matrix(const std::vector<LanguageOutputs> &outputs,
                               const std::vector<Views> &views,
                               const std::vector<std::vector<std::pair<size_t, size_t>>>
                                   &pair_alignments,
                               const Metric &metric, int jobs) {
  const size_t n = outputs.size();
  ConsistencyMatrix matrix;
  for (const LanguageOutputs &o : outputs) matrix.languages.push_back(o.language);
  matrix.cells.resize(n * n);

  size_t pair_idx = 0;
  for (size_t i = 0; i < n; ++i) {
    double mass = 0;
    for (const TripleSet &t : views[i]) mass += static_cast<double>(t.triples.size());
    matrix.at(i, i) = identity_cell(mass);
    for (size_t j = i + 1; j < n; ++j, ++pair_idx) {
      const auto &aligned = pair_alignments[pair_idx];
      std::vector<TripleSet> pred, gold;
      pred.reserve(aligned.size());
      gold.reserve(aligned.size());
      for (const auto &[ai, bj] : aligned) {
        pred.push_back(views[i][ai]);  // row language plays the pred role
        gold.push_back(views[j][bj]);
      }
      MatchResult cell = metric.corpus(gold, pred, jobs);
      matrix.at(i, j) = cell;
      matrix.at(j, i) = transposed(cell);
    }
  }
  return matrix;
}

}  // namespace

ConsistencyMatrix consistency_matrix(const std::vector<LanguageOutputs> &outputs,
                                     const Metric &metric, int jobs) {
  if (outputs.size() < 2)
    throw DataError("consistency requires at least two languages");
  std::vector<Views> views(outputs.size());
  for (size_t i = 0; i < outputs.size(); ++i)
    for (const CorpusEntry &e : outputs[i].entries)
      views[i].push_back(to_triples(e.graph));
  std::vector<std::vector<std::pair<size_t, size_t>>> alignments;
  for (size_t i = 0; i < outputs.size(); ++i)
    for (size_t j = i + 1; j < outputs.size(); ++j)
      alignments.push_back(align_entries(outputs[i], outputs[j]));
  return score_matrix(outputs, views, alignments, metric, jobs);
}

ConsistencyBreakdown breakdown_consistency(const std::vector<LanguageOutputs> &outputs,
                                           const Metric &metric, int jobs) {
  if (outputs.size() < 2)
    throw DataError("consistency requires at least two languages");
  std::vector<Views> base(outputs.size());
  for (size_t i = 0; i < outputs.size(); ++i)
    for (const CorpusEntry &e : outputs[i].entries)
      base[i].push_back(to_triples(e.graph));
  std::vector<std::vector<std::pair<size_t, size_t>>> alignments;
  for (size_t i = 0; i < outputs.size(); ++i)
    for (size_t j = i + 1; j < outputs.size(); ++j)
      alignments.push_back(align_entries(outputs[i], outputs[j]));

  ConsistencyBreakdown report;
  report.overall = score_matrix(outputs, base, alignments, metric, jobs);
  for (Aspect aspect : kAllAspects) {
    std::vector<Views> views(outputs.size());
    for (size_t i = 0; i < outputs.size(); ++i) {
      views[i].reserve(base[i].size());
      for (const TripleSet &t : base[i]) views[i].push_back(aspect_view(t, aspect));
    }
    report.at(aspect) = score_matrix(outputs, views, alignments, metric, jobs);
  }
  return report;
}

}  // namespace xamr
