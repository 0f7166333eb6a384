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

#ifndef XAMR_PENMAN_HPP_
#define XAMR_PENMAN_HPP_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "xamr/error.hpp"

namespace xamr {

// Surface kind of an attribute constant. String constants are stored with
// the quotes stripped; the kind remembers how to re-quote on output.
enum class ConstantKind { String, Number, Symbol };

struct AmrEdge {
  std::string source;    // variable id
  std::string relation;  // role without the leading ':'
  std::string target;    // variable id
};

struct AmrAttribute {
  std::string source;    // variable id
  std::string relation;  // role without the leading ':'
  std::string value;     // surface form, quotes stripped for strings
  ConstantKind kind = ConstantKind::Symbol;
};

// Rooted labeled directed graph. Inverse roles (":ARG0-of") are normalized
// to forward edges at parse time, so stored relations never carry an
// inverse suffix except the conventional non-inverse roles (":consist-of",
// ":prep-*-of") which are kept verbatim.
struct AmrGraph {
  std::string root;
  std::map<std::string, std::string> nodes;  // variable id -> concept label
  std::vector<AmrEdge> edges;
  std::vector<AmrAttribute> attributes;

  bool operator==(const AmrGraph &) const = default;
};

struct PenmanOptions {
  // When true, a bare variable-shaped token ("b", "g2") that is never
  // defined becomes a Symbol constant instead of a parse error.
  bool lenient_refs = false;
};

// Parses a single parenthesized Penman expression.
AmrGraph parse_penman(std::string_view text, const PenmanOptions &opts = {});

// Serializes a graph so that each variable is introduced exactly once, at
// its first traversal from the root; re-entrant mentions come out as bare
// variable references. parse(serialize(g)) is isomorphic to g.
std::string serialize_penman(const AmrGraph &graph);

// Returns one human-readable message per violated graph invariant; empty
// means the graph is valid.
std::vector<std::string> check_graph(const AmrGraph &graph);

struct CorpusEntry {
  std::string id;
  std::optional<std::string> sentence;
  AmrGraph graph;
  bool synthetic_id = false;  // id was generated from the block position
};

struct CorpusDiagnostic {
  std::string id;
  int line = 0;  // 1-based line where the block starts
  std::string message;
};

struct CorpusReadOptions {
  bool strict = false;  // abort on the first unparseable block
  PenmanOptions penman;
};

// Reads a blank-line separated AMR corpus file. Metadata lines "# ::id"
// and "# ::snt" populate the entry; other "#" lines are ignored. Blocks
// whose graph fails to parse are reported through `diagnostics` and
// skipped, unless opts.strict is set, in which case the first failure
// aborts with a DataError.
std::vector<CorpusEntry> read_corpus(const std::string &path,
                                     const CorpusReadOptions &opts = {},
                                     std::vector<CorpusDiagnostic> *diagnostics = nullptr);

// Writes entries in the same block format: "# ::id", then "# ::snt" when
// present, then the serialized graph, then one blank line.
void write_corpus(const std::vector<CorpusEntry> &entries, const std::string &path);

}  // namespace xamr

#endif  // XAMR_PENMAN_HPP_
