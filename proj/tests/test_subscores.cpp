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

#include <algorithm>
#include <map>
#include <set>

#include "testutil.hpp"
#include "xamr/subscores.hpp"

using namespace xamr;
using xamrtest::Rng;
using xamrtest::ts;

namespace {

Metric exact_metric() {
  SearchConfig cfg;
  cfg.exact_threshold = 64;
  return Metric::smatch(cfg);
}

// Alignment-free oracle for the Concepts aspect: bag F1 over lowercased
// concept multisets.
MatchResult concept_bag_f1(const TripleSet &gold, const TripleSet &pred) {
  std::map<std::string, int> gold_counts, pred_counts;
  for (const Triple &t : gold.triples)
    if (t.kind == TripleKind::Instance) gold_counts[t.target]++;
  for (const Triple &t : pred.triples)
    if (t.kind == TripleKind::Instance) pred_counts[t.target]++;
  double matched = 0, gold_total = 0, pred_total = 0;
  for (const auto &[label, count] : gold_counts) gold_total += count;
  for (const auto &[label, count] : pred_counts) pred_total += count;
  for (const auto &[label, count] : pred_counts) {
    auto it = gold_counts.find(label);
    if (it != gold_counts.end()) matched += std::min(count, it->second);
  }
  MatchResult r;
  r.matched = matched;
  r.pred_size = pred_total;
  r.gold_size = gold_total;
  if (pred_total == 0 && gold_total == 0) {
    r.precision = r.recall = r.f1 = 1.0;
  } else if (pred_total == 0 || gold_total == 0) {
    r.f1 = 0.0;
  } else {
    r.precision = matched / pred_total;
    r.recall = matched / gold_total;
    r.f1 = matched > 0 ? 2.0 * matched / (pred_total + gold_total) : 0.0;
  }
  return r;
}

}  // namespace

TEST_CASE("negation view keeps the polarity triple and its instance") {
  TripleSet view = aspect_view(ts("(s / sleep-01 :polarity -)"), Aspect::Negation);
  CHECK(dump_triples(view) ==
        "attribute(polarity, s, -)\n"
        "instance(instance, s, sleep-01)\n");
}

TEST_CASE("no-wsd view strips sense suffixes from instances and top") {
  TripleSet view = aspect_view(ts("(w / want-01 :ARG0 (b / boy))"), Aspect::NoWSD);
  std::string dump = dump_triples(view);
  CHECK(dump.find("instance(instance, w, want)") != std::string::npos);
  CHECK(dump.find("attribute(top, w, want)") != std::string::npos);
  CHECK(dump.find("want-01") == std::string::npos);
}

TEST_CASE("unlabeled view collapses every role to rel") {
  TripleSet view =
      aspect_view(ts("(w / want-01 :ARG0 (b / boy) :polarity -)"), Aspect::Unlabeled);
  for (const Triple &t : view.triples) {
    if (t.kind == TripleKind::Instance)
      CHECK(t.relation == "instance");
    else
      CHECK(t.relation == "rel");
  }
  CHECK(view.triples.size() == 5);
}

TEST_CASE("concepts view keeps instance triples only") {
  TripleSet view =
      aspect_view(ts("(w / want-01 :ARG0 (b / boy) :polarity -)"), Aspect::Concepts);
  CHECK(view.triples.size() == 2);
  for (const Triple &t : view.triples) CHECK(t.kind == TripleKind::Instance);
}

TEST_CASE("reentrancies view keeps relations into shared targets") {
  TripleSet view = aspect_view(
      ts("(w / want-01 :ARG0 (b / boy) :ARG1 (g / go-02 :ARG0 b))"),
      Aspect::Reentrancies);
  // b has two incoming relations; g only one.
  CHECK(dump_triples(view) ==
        "instance(instance, b, boy)\n"
        "instance(instance, g, go-02)\n"
        "instance(instance, w, want-01)\n"
        "relation(arg0, g, b)\n"
        "relation(arg0, w, b)\n");
}

TEST_CASE("srl view keeps argN relations and their endpoints") {
  TripleSet view = aspect_view(
      ts("(w / want-01 :ARG0 (b / boy) :time (n / now) :ARG1 (g / go-02))"),
      Aspect::SRL);
  std::string dump = dump_triples(view);
  CHECK(dump.find("relation(arg0, w, b)") != std::string::npos);
  CHECK(dump.find("relation(arg1, w, g)") != std::string::npos);
  CHECK(dump.find("time") == std::string::npos);
  CHECK(dump.find("(instance, n, now)") == std::string::npos);
}

TEST_CASE("named-entity view keeps name subgraphs") {
  TripleSet view = aspect_view(
      ts("(c / city :name (n / name :op1 \"New\" :op2 \"York\") "
         ":mod (b / big))"),
      Aspect::NamedEnt);
  CHECK(dump_triples(view) ==
        "attribute(op1, n, new)\n"
        "attribute(op2, n, york)\n"
        "instance(instance, c, city)\n"
        "instance(instance, n, name)\n"
        "relation(name, c, n)\n");
}

TEST_CASE("only unlabeled and no-wsd retain the top triple") {
  TripleSet base = ts("(w / want-01 :ARG0 (b / boy) :polarity -)");
  auto has_top_attr = [](const TripleSet &set, const std::string &role) {
    return std::any_of(set.triples.begin(), set.triples.end(), [&](const Triple &t) {
      return t.kind == TripleKind::Attribute && t.relation == role &&
             t.target == "want-01";
    });
  };
  CHECK(has_top_attr(aspect_view(base, Aspect::Unlabeled), "rel"));
  CHECK(has_top_attr(aspect_view(base, Aspect::NoWSD), "top") == false);  // stripped value
  bool nowsd_top = std::any_of(
      aspect_view(base, Aspect::NoWSD).triples.begin(),
      aspect_view(base, Aspect::NoWSD).triples.end(),
      [](const Triple &t) { return t.relation == "top" && t.target == "want"; });
  CHECK(nowsd_top);
  for (Aspect aspect : {Aspect::Concepts, Aspect::NamedEnt, Aspect::Negation,
                        Aspect::Reentrancies, Aspect::SRL}) {
    TripleSet view = aspect_view(base, aspect);
    for (const Triple &t : view.triples) CHECK(t.relation != "top");
  }
}

TEST_CASE("subset-style views are idempotent") {
  Rng rng(41);
  for (int i = 0; i < 80; ++i) {
    TripleSet base = to_triples(xamrtest::random_graph(rng));
    for (Aspect aspect : {Aspect::Concepts, Aspect::NamedEnt, Aspect::Negation,
                          Aspect::Reentrancies, Aspect::SRL}) {
      TripleSet once = aspect_view(base, aspect);
      TripleSet twice = aspect_view(once, aspect);
      CHECK(once == twice);
    }
  }
}

TEST_CASE("views never invent variables") {
  Rng rng(42);
  for (int i = 0; i < 80; ++i) {
    TripleSet base = to_triples(xamrtest::random_graph(rng));
    std::set<std::string> known(base.variables.begin(), base.variables.end());
    for (Aspect aspect : kAllAspects) {
      TripleSet view = aspect_view(base, aspect);
      for (const std::string &v : view.variables) CHECK(known.count(v) == 1);
    }
  }
}

TEST_CASE("identical graphs score 1.0 on every aspect") {
  AmrGraph g = parse_penman(
      "(t / tell-01 :ARG0 (p / person :name (n / name :op1 \"Ada\")) "
      ":ARG1 (s / sleep-01 :polarity - :ARG0 p))");
  BreakdownReport report = breakdown(g, g, exact_metric());
  CHECK(report.overall.f1 == 1.0);
  for (Aspect aspect : kAllAspects) CHECK(report.at(aspect).f1 == 1.0);
}

TEST_CASE("sense-only differences vanish under no-wsd") {
  AmrGraph gold = parse_penman("(w / want-01)");
  AmrGraph pred = parse_penman("(x / want-02)");
  BreakdownReport report = breakdown(gold, pred, exact_metric());
  CHECK(report.overall.f1 == 0.0);
  CHECK(report.at(Aspect::NoWSD).f1 == 1.0);
}

TEST_CASE("missing polarity zeroes negation but not the overall score") {
  AmrGraph gold = parse_penman("(s / sleep-01 :polarity - :ARG0 (b / boy))");
  AmrGraph pred = parse_penman("(s2 / sleep-01 :ARG0 (b2 / boy))");
  BreakdownReport report = breakdown(gold, pred, exact_metric());
  CHECK(report.at(Aspect::Negation).f1 == 0.0);
  CHECK(report.at(Aspect::Negation).recall_defined);
  CHECK(!report.at(Aspect::Negation).precision_defined);
  CHECK(report.overall.f1 > 0.0);
}

TEST_CASE("aspects empty on both sides score 1.0") {
  AmrGraph gold = parse_penman("(a / apple)");
  AmrGraph pred = parse_penman("(b / apple)");
  BreakdownReport report = breakdown(gold, pred, exact_metric());
  CHECK(report.at(Aspect::Negation).f1 == 1.0);
  CHECK(report.at(Aspect::NamedEnt).f1 == 1.0);
  CHECK(report.at(Aspect::SRL).f1 == 1.0);
  CHECK(report.at(Aspect::Reentrancies).f1 == 1.0);
}

TEST_CASE("no-wsd and unlabeled dominate smatch under exact search") {
  Rng rng(43);
  Metric metric = exact_metric();
  for (int i = 0; i < 60; ++i) {
    AmrGraph gold = xamrtest::random_graph(rng);
    AmrGraph pred = rng.chance(0.5) ? xamrtest::mutate(rng, gold)
                                    : xamrtest::random_graph(rng);
    BreakdownReport report = breakdown(gold, pred, metric);
    CHECK(report.at(Aspect::NoWSD).f1 >= report.overall.f1);
    CHECK(report.at(Aspect::Unlabeled).f1 >= report.overall.f1);
  }
}

TEST_CASE("concepts aspect equals the alignment-free bag oracle") {
  Rng rng(44);
  Metric metric = exact_metric();
  for (int i = 0; i < 80; ++i) {
    TripleSet gold = to_triples(xamrtest::random_graph(rng));
    TripleSet pred = to_triples(xamrtest::random_graph(rng));
    MatchResult aligned = metric.pair(aspect_view(gold, Aspect::Concepts),
                                      aspect_view(pred, Aspect::Concepts));
    MatchResult bag = concept_bag_f1(gold, pred);
    CHECK(aligned.matched == bag.matched);
    CHECK(aligned.f1 == bag.f1);
  }
}

TEST_CASE("corpus breakdown micro-aggregates per aspect") {
  AmrGraph g1 = parse_penman("(s / sleep-01 :polarity -)");
  AmrGraph g2 = parse_penman("(w / want-01 :ARG0 (b / boy))");
  AmrGraph p1 = parse_penman("(s2 / sleep-01 :polarity -)");
  AmrGraph p2 = parse_penman("(w2 / want-01 :ARG0 (g / girl))");
  BreakdownReport report = corpus_breakdown({g1, g2}, {p1, p2}, exact_metric());
  CHECK(report.at(Aspect::Negation).f1 == 1.0);  // only pair one contributes
  CHECK(report.at(Aspect::Concepts).matched == 2.0);  // sleep-01 and want-01 match
  CHECK(report.overall.matched > 0);
}
