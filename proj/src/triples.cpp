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

#include "xamr/triples.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace xamr {

std::string lowercase(std::string_view text) {
  std::string out(text);
  for (char &c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

std::string strip_sense_suffix(const std::string &label) {
  size_t dash = label.rfind('-');
  if (dash == std::string::npos || dash == 0 || dash + 1 == label.size())
    return label;
  for (size_t i = dash + 1; i < label.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(label[i]))) return label;
  return label.substr(0, dash);
}

TripleSet to_triples(const AmrGraph &graph) {
  TripleSet set;
  set.variables.reserve(graph.nodes.size());
  for (const auto &[var, label] : graph.nodes) {
    set.variables.push_back(var);
    set.triples.push_back({TripleKind::Instance, "instance", var, lowercase(label)});
  }
  for (const AmrAttribute &a : graph.attributes)
    set.triples.push_back(
        {TripleKind::Attribute, lowercase(a.relation), a.source, lowercase(a.value)});
  for (const AmrEdge &e : graph.edges)
    set.triples.push_back({TripleKind::Relation, lowercase(e.relation), e.source, e.target});
  if (graph.nodes.count(graph.root))
    set.triples.push_back({TripleKind::Attribute, "top", graph.root,
                           lowercase(graph.nodes.at(graph.root))});
  return set;
}

std::string dump_triples(const TripleSet &set) {
  std::vector<std::string> lines;
  lines.reserve(set.triples.size());
  for (const Triple &t : set.triples) {
    const char *kind = t.kind == TripleKind::Instance   ? "instance"
                       : t.kind == TripleKind::Attribute ? "attribute"
                                                         : "relation";
    std::ostringstream line;
    line << kind << '(' << t.relation << ", " << t.source << ", " << t.target << ')';
    lines.push_back(line.str());
  }
  std::sort(lines.begin(), lines.end());
  std::string out;
  for (const std::string &l : lines) {
    out += l;
    out += '\n';
  }
  return out;
}

}  // namespace xamr
