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

#ifndef XAMR_CONSISTENCY_HPP_
#define XAMR_CONSISTENCY_HPP_

#include <array>
#include <string>
#include <vector>

#include "xamr/metric.hpp"
#include "xamr/penman.hpp"
#include "xamr/subscores.hpp"

namespace xamr {

// One system's predicted graphs for one input language of a parallel
// corpus. Entries align across languages by ::id when every entry carries
// one, otherwise by position; any mismatch is a hard error.
struct LanguageOutputs {
  std::string language;
  std::vector<CorpusEntry> entries;
};

// Symmetric n x n matrix of corpus-level scores. F1 and matched mass are
// shared by mirrored cells; precision and recall are reported from the
// row-language perspective, so precision(X,Y) == recall(Y,X). The diagonal
// is defined as 1.0.
struct ConsistencyMatrix {
  std::vector<std::string> languages;
  std::vector<MatchResult> cells;  // row-major

  const MatchResult &at(size_t row, size_t col) const {
    return cells[row * languages.size() + col];
  }
  MatchResult &at(size_t row, size_t col) {
    return cells[row * languages.size() + col];
  }
};

ConsistencyMatrix consistency_matrix(const std::vector<LanguageOutputs> &outputs,
                                     const Metric &metric, int jobs = 1);

struct ConsistencyBreakdown {
  ConsistencyMatrix overall;
  std::array<ConsistencyMatrix, 7> aspects;  // kAllAspects order

  const ConsistencyMatrix &at(Aspect aspect) const {
    return aspects[static_cast<size_t>(aspect)];
  }
  ConsistencyMatrix &at(Aspect aspect) {
    return aspects[static_cast<size_t>(aspect)];
  }
};

ConsistencyBreakdown breakdown_consistency(const std::vector<LanguageOutputs> &outputs,
                                           const Metric &metric, int jobs = 1);

}  // namespace xamr

#endif  // XAMR_CONSISTENCY_HPP_
