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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "testutil.hpp"
#include "xamr/consistency.hpp"

using namespace xamr;
using xamrtest::Rng;

namespace {

Metric exact_metric() {
  SearchConfig cfg;
  cfg.exact_threshold = 64;
  return Metric::smatch(cfg);
}

CorpusEntry entry(const std::string &id, const std::string &penman) {
  CorpusEntry e;
  e.id = id;
  e.graph = parse_penman(penman);
  return e;
}

LanguageOutputs lang(const std::string &tag, std::vector<CorpusEntry> entries) {
  return {tag, std::move(entries)};
}

}  // namespace

TEST_CASE("identical outputs are perfectly consistent") {
  std::vector<CorpusEntry> entries = {
      entry("a", "(w / want-01 :ARG0 (b / boy))"),
      entry("b", "(s / sleep-01 :polarity -)"),
  };
  ConsistencyMatrix m = consistency_matrix({lang("DE", entries), lang("ES", entries)},
                                           exact_metric());
  CHECK(m.at(0, 1).f1 == 1.0);
  CHECK(m.at(1, 0).f1 == 1.0);
  CHECK(m.at(0, 0).f1 == 1.0);
  CHECK(m.at(1, 1).f1 == 1.0);
}

TEST_CASE("the want/boy/go language pair scores 0.8") {
  auto x = lang("X", {entry("s1", "(w / want-01 :ARG0 (b / boy) :ARG1 (g / go-02 :ARG0 b))")});
  auto y = lang("Y", {entry("s1", "(w2 / want-01 :ARG0 (b2 / boy) "
                                  ":ARG1 (g2 / go-02 :ARG0 (g3 / girl)))")});
  ConsistencyMatrix m = consistency_matrix({x, y}, exact_metric());
  CHECK(m.at(0, 1).f1 == 0.8);
  CHECK(m.at(1, 0).f1 == 0.8);
  // Row language X is the pred side of cell (X, Y).
  CHECK(m.at(0, 1).precision == m.at(1, 0).recall);
  CHECK(m.at(0, 1).recall == m.at(1, 0).precision);
}

TEST_CASE("F1 symmetry and P/R transposition hold on random pairs") {
  Rng rng(61);
  Metric metric = exact_metric();
  for (int i = 0; i < 50; ++i) {
    TripleSet a = to_triples(xamrtest::random_graph(rng));
    TripleSet b = to_triples(xamrtest::random_graph(rng));
    MatchResult xy = metric.pair(b, a);  // gold=b, pred=a
    MatchResult yx = metric.pair(a, b);
    CHECK(xy.f1 == yx.f1);
    CHECK(xy.precision == yx.recall);
    CHECK(xy.recall == yx.precision);
  }
}

TEST_CASE("entries align by id when every entry has one") {
  auto x = lang("X", {entry("one", "(a / apple)"), entry("two", "(b / banana)")});
  // Same entries in reverse file order: id alignment must fix the pairing.
  auto y = lang("Y", {entry("two", "(b2 / banana)"), entry("one", "(a2 / apple)")});
  ConsistencyMatrix m = consistency_matrix({x, y}, exact_metric());
  CHECK(m.at(0, 1).f1 == 1.0);
}

TEST_CASE("positional alignment applies when ids are synthetic") {
  CorpusEntry a = entry("line:1", "(a / apple)");
  a.synthetic_id = true;
  CorpusEntry b = entry("line:1", "(b / apple)");
  b.synthetic_id = true;
  ConsistencyMatrix m =
      consistency_matrix({lang("X", {a}), lang("Y", {b})}, exact_metric());
  CHECK(m.at(0, 1).f1 == 1.0);
}

TEST_CASE("alignment mismatches are hard errors") {
  auto x = lang("X", {entry("one", "(a / apple)")});
  auto y2 = lang("Y", {entry("one", "(a / apple)"), entry("two", "(b / banana)")});
  CHECK_THROWS_AS(consistency_matrix({x, y2}, exact_metric()), DataError);

  auto y_diff = lang("Y", {entry("other", "(a / apple)")});
  CHECK_THROWS_AS(consistency_matrix({x, y_diff}, exact_metric()), DataError);

  CHECK_THROWS_AS(consistency_matrix({x}, exact_metric()), DataError);
}

TEST_CASE("breakdown consistency reports every aspect") {
  std::vector<CorpusEntry> same = {
      entry("a", "(t / tell-01 :ARG0 (p / person :name (n / name :op1 \"Ada\")) "
                 ":ARG1 (s / sleep-01 :polarity - :ARG0 p))")};
  ConsistencyBreakdown report = breakdown_consistency(
      {lang("X", same), lang("Y", same), lang("Z", same)}, exact_metric());
  CHECK(report.overall.at(0, 1).f1 == 1.0);
  CHECK(report.overall.at(0, 2).f1 == 1.0);
  for (Aspect aspect : kAllAspects) {
    CHECK(report.at(aspect).at(0, 1).f1 == 1.0);
    CHECK(report.at(aspect).at(1, 2).f1 == 1.0);
  }
}

TEST_CASE("a polarity divergence hits negation but concept-only changes do not") {
  auto x = lang("X", {entry("a", "(s / sleep-01 :polarity - :ARG0 (b / boy))")});
  auto y = lang("Y", {entry("a", "(s2 / sleep-01 :ARG0 (b2 / boy))")});
  ConsistencyBreakdown report = breakdown_consistency({x, y}, exact_metric());
  CHECK(report.at(Aspect::Negation).at(0, 1).f1 < 1.0);
  CHECK(report.at(Aspect::Unlabeled).at(0, 1).f1 < 1.0);  // structure differs too

  // Role-only divergence: identical unlabeled structure, so Unlabeled stays 1.
  auto x2 = lang("X", {entry("a", "(s / sleep-01 :ARG0 (b / boy))")});
  auto y2 = lang("Y", {entry("a", "(s2 / sleep-01 :ARG1 (b2 / boy))")});
  ConsistencyBreakdown report2 = breakdown_consistency({x2, y2}, exact_metric());
  CHECK(report2.at(Aspect::Unlabeled).at(0, 1).f1 == 1.0);
  CHECK(report2.overall.at(0, 1).f1 < 1.0);
}

TEST_CASE("language order permutation transposes the matrix") {
  Rng rng(62);
  auto g1 = xamrtest::random_graph(rng);
  auto g2 = xamrtest::random_graph(rng);
  CorpusEntry e1, e2;
  e1.id = e2.id = "a";
  e1.graph = g1;
  e2.graph = g2;
  Metric metric = exact_metric();
  ConsistencyMatrix m1 = consistency_matrix({lang("X", {e1}), lang("Y", {e2})}, metric);
  ConsistencyMatrix m2 = consistency_matrix({lang("Y", {e2}), lang("X", {e1})}, metric);
  CHECK(m1.at(0, 1).f1 == m2.at(1, 0).f1);
  CHECK(m1.at(0, 1).precision == m2.at(1, 0).precision);
  CHECK(m1.at(0, 1).recall == m2.at(1, 0).recall);
}
