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

#ifndef XAMR_SUBSCORES_HPP_
#define XAMR_SUBSCORES_HPP_

#include <array>
#include <string>
#include <vector>

#include "xamr/metric.hpp"
#include "xamr/penman.hpp"
#include "xamr/triples.hpp"

namespace xamr {

// Fine-grained evaluation aspects.
enum class Aspect {
  Unlabeled,
  NoWSD,
  Reentrancies,
  Concepts,
  NamedEnt,
  Negation,
  SRL,
};

inline constexpr std::array<Aspect, 7> kAllAspects = {
    Aspect::Unlabeled, Aspect::NoWSD,    Aspect::Reentrancies, Aspect::Concepts,
    Aspect::NamedEnt,  Aspect::Negation, Aspect::SRL,
};

// Stable machine key ("no_wsd") and display label ("No WSD").
const char *aspect_key(Aspect aspect);
const char *aspect_label(Aspect aspect);

// Projects a triple bag onto one aspect:
//   Unlabeled    — every Relation/Attribute role becomes "rel"; Instances kept.
//   NoWSD        — sense suffixes stripped from Instance and top values.
//   Reentrancies — Relations whose target has >=2 incoming Relations, plus
//                  endpoint Instances.
//   Concepts     — Instance triples only.
//   NamedEnt     — per variable with an outgoing "name" Relation: its
//                  Instance, that Relation, the name node's Instance, and
//                  the name node's opN Attributes.
//   Negation     — each "polarity -" Attribute plus its source's Instance.
//   SRL          — Relations with an argN / argN-of role, plus endpoint
//                  Instances.
// Only Unlabeled and NoWSD retain the virtual top triple. Views never
// invent variables; an aspect with nothing to select yields an empty bag,
// and two empty bags score F1 = 1.0 (nothing to find, nothing missed).
TripleSet aspect_view(const TripleSet &triples, Aspect aspect);

struct BreakdownReport {
  MatchResult overall;  // plain metric over the untransformed triples
  std::array<MatchResult, 7> aspects;  // indexed in kAllAspects order

  const MatchResult &at(Aspect aspect) const {
    return aspects[static_cast<size_t>(aspect)];
  }
  MatchResult &at(Aspect aspect) { return aspects[static_cast<size_t>(aspect)]; }
};

BreakdownReport breakdown(const AmrGraph &gold, const AmrGraph &pred,
                          const Metric &metric);

// Corpus-level breakdown with micro-aggregation per aspect.
BreakdownReport corpus_breakdown(const std::vector<AmrGraph> &gold,
                                 const std::vector<AmrGraph> &pred,
                                 const Metric &metric, int jobs = 1);

}  // namespace xamr

#endif  // XAMR_SUBSCORES_HPP_
