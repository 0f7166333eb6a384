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

#ifndef XAMR_TRIPLES_HPP_
#define XAMR_TRIPLES_HPP_

#include <string>
#include <vector>

#include "xamr/penman.hpp"

namespace xamr {

enum class TripleKind { Instance, Attribute, Relation };

// Atomic fact. Instance triples use the fixed relation "instance"; the
// virtual root triple is an Attribute with relation "top". Relations point
// at a variable; Instance and Attribute targets are concept/constant text.
// Relations, concepts, and constants are lowercase-normalized; variable
// ids are kept verbatim.
struct Triple {
  TripleKind kind;
  std::string relation;
  std::string source;
  std::string target;

  bool operator==(const Triple &) const = default;
};

struct TripleSet {
  std::vector<Triple> triples;       // multiset semantics
  std::vector<std::string> variables;  // every variable used by any triple

  bool operator==(const TripleSet &) const = default;
};

// Expands a graph into its triple bag: one Instance per node, one Relation
// per edge, one Attribute per attribute, plus the virtual "top" Attribute
// carrying the root variable and root concept.
TripleSet to_triples(const AmrGraph &graph);

// Debug dump, one "kind(relation, source, target)" per line, sorted
// lexicographically. Used by golden tests.
std::string dump_triples(const TripleSet &set);

// ASCII lowercase used for all metric-side normalization.
std::string lowercase(std::string_view text);

// Removes one trailing PropBank sense suffix: "want-01" -> "want".
std::string strip_sense_suffix(const std::string &label);

}  // namespace xamr

#endif  // XAMR_TRIPLES_HPP_
