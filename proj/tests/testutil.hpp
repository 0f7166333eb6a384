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

#ifndef XAMR_TESTS_TESTUTIL_HPP_
#define XAMR_TESTS_TESTUTIL_HPP_

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "xamr/penman.hpp"
#include "xamr/triples.hpp"

namespace xamrtest {

// Deterministic generator; keeps tests reproducible across platforms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  std::size_t index(std::size_t n) { return n ? next() % n : 0; }
  bool chance(double p) { return next() % 1000000 < std::uint64_t(p * 1000000); }

 private:
  std::uint64_t state_;
};

inline const std::vector<std::string> &concept_vocab() {
  static const std::vector<std::string> v = {
      "want-01", "go-02",   "see-01", "run-02", "sleep-01", "possible-01",
      "boy",     "girl",    "dog",    "cat",    "city",     "house",
      "thing",   "person",  "good",   "small",  "country",  "tell-01"};
  return v;
}

inline const std::vector<std::string> &role_vocab() {
  static const std::vector<std::string> v = {"ARG0", "ARG1",     "ARG2", "mod",
                                             "time", "location", "poss", "manner"};
  return v;
}

struct GraphOptions {
  int max_vars = 6;
  bool with_names = true;
  bool with_attributes = true;
};

// Connected rooted graph: a random tree plus occasional re-entrant edges,
// with optional name subgraphs and attributes for aspect coverage.
inline xamr::AmrGraph random_graph(Rng &rng, const GraphOptions &opts = {}) {
  xamr::AmrGraph g;
  int n = 1 + static_cast<int>(rng.index(static_cast<std::size_t>(opts.max_vars)));
  std::vector<std::string> vars;
  for (int i = 0; i < n; ++i) {
    std::string var = "x" + std::to_string(i);
    vars.push_back(var);
    g.nodes[var] = concept_vocab()[rng.index(concept_vocab().size())];
  }
  g.root = vars[0];
  for (int i = 1; i < n; ++i) {
    int parent = static_cast<int>(rng.index(static_cast<std::size_t>(i)));
    g.edges.push_back(
        {vars[parent], role_vocab()[rng.index(role_vocab().size())], vars[i]});
  }
  if (n >= 2 && rng.chance(0.4)) {  // re-entrancy; cycles are fine
    g.edges.push_back({vars[rng.index(vars.size())],
                       role_vocab()[rng.index(role_vocab().size())],
                       vars[rng.index(vars.size())]});
  }
  if (opts.with_names && n >= 2 && rng.chance(0.25)) {
    const std::string &v = vars[n - 1];
    g.nodes[v] = "name";
    for (auto &e : g.edges) {
      if (e.target == v) {
        e.relation = "name";
        break;
      }
    }
    g.attributes.push_back({v, "op1", "Foo", xamr::ConstantKind::String});
    if (rng.chance(0.5))
      g.attributes.push_back({v, "op2", "Bar", xamr::ConstantKind::String});
  }
  if (opts.with_attributes) {
    for (int i = 0; i < n; ++i) {
      if (rng.chance(0.2))
        g.attributes.push_back({vars[i], "polarity", "-", xamr::ConstantKind::Symbol});
      if (rng.chance(0.15))
        g.attributes.push_back({vars[i], "quant",
                                std::to_string(1 + rng.index(9)),
                                xamr::ConstantKind::Number});
      if (rng.chance(0.1))
        g.attributes.push_back(
            {vars[i], "mode", "interrogative", xamr::ConstantKind::Symbol});
    }
  }
  return g;
}

inline xamr::AmrGraph rename_variables(const xamr::AmrGraph &g,
                                       const std::string &prefix) {
  std::map<std::string, std::string> renamed;
  int counter = 0;
  for (const auto &[var, label] : g.nodes) {
    (void)label;
    renamed[var] = prefix + std::to_string(counter++);
  }
  xamr::AmrGraph out;
  out.root = renamed.at(g.root);
  for (const auto &[var, label] : g.nodes) out.nodes[renamed.at(var)] = label;
  for (const auto &e : g.edges)
    out.edges.push_back({renamed.at(e.source), e.relation, renamed.at(e.target)});
  for (const auto &a : g.attributes)
    out.attributes.push_back({renamed.at(a.source), a.relation, a.value, a.kind});
  return out;
}

// A plausible "prediction": same skeleton with renamed variables and some
// concept/role/attribute noise.
inline xamr::AmrGraph mutate(Rng &rng, const xamr::AmrGraph &g,
                             const std::string &prefix = "m") {
  xamr::AmrGraph out = rename_variables(g, prefix);
  for (auto &[var, label] : out.nodes) {
    (void)var;
    if (rng.chance(0.3)) label = concept_vocab()[rng.index(concept_vocab().size())];
  }
  std::vector<xamr::AmrAttribute> kept;
  for (const auto &a : out.attributes)
    if (!rng.chance(0.25)) kept.push_back(a);
  out.attributes = kept;
  for (auto &e : out.edges)
    if (rng.chance(0.15)) e.relation = role_vocab()[rng.index(role_vocab().size())];
  return out;
}

inline xamr::TripleSet ts(const std::string &penman) {
  return xamr::to_triples(xamr::parse_penman(penman));
}

struct TempDir {
  std::filesystem::path path;

  TempDir() {
    std::string tmpl =
        (std::filesystem::temp_directory_path() / "xamr-test-XXXXXX").string();
    std::vector<char> buf(tmpl.begin(), tmpl.end());
    buf.push_back('\0');
    char *result = mkdtemp(buf.data());
    path = result ? std::filesystem::path(result) : std::filesystem::path(tmpl);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path, ec);
  }
  TempDir(const TempDir &) = delete;
  TempDir &operator=(const TempDir &) = delete;

  std::string file(const std::string &name) const { return (path / name).string(); }
};

inline void write_file(const std::string &path, const std::string &content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
}

inline std::string read_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace xamrtest

#endif  // XAMR_TESTS_TESTUTIL_HPP_
