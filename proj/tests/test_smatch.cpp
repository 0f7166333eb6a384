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

#include <set>

#include "testutil.hpp"
#include "xamr/smatch.hpp"

using namespace xamr;
using xamrtest::Rng;
using xamrtest::ts;

namespace {

const char *kGoldWant = "(w / want-01 :ARG0 (b / boy) :ARG1 (g / go-02 :ARG0 b))";
const char *kPredWant =
    "(w2 / want-01 :ARG0 (b2 / boy) :ARG1 (g2 / go-02 :ARG0 (g3 / girl)))";

SearchConfig exact_cfg() {
  SearchConfig cfg;
  cfg.exact_threshold = 64;
  return cfg;
}

SearchConfig climb_cfg(std::uint64_t seed = 0, int restarts = 4) {
  SearchConfig cfg;
  cfg.exact_threshold = 0;  // force hill climbing
  cfg.seed = seed;
  cfg.restarts = restarts;
  return cfg;
}

}  // namespace

TEST_CASE("identical graphs score 1.0") {
  TripleSet g = ts("(w / want-01 :ARG0 (b / boy))");
  MatchResult r = smatch_score(g, g);
  CHECK(r.precision == 1.0);
  CHECK(r.recall == 1.0);
  CHECK(r.f1 == 1.0);
  CHECK(r.matched == 4.0);
}

TEST_CASE("completely different single nodes score 0") {
  MatchResult r = smatch_score(ts("(a / apple)"), ts("(b / banana)"));
  CHECK(r.matched == 0.0);
  CHECK(r.f1 == 0.0);
}

TEST_CASE("the want/boy/go pair scores 6 matched and F1 = 0.8 exactly") {
  MatchResult r = smatch_score(ts(kGoldWant), ts(kPredWant));
  CHECK(r.matched == 6.0);
  CHECK(r.pred_size == 8.0);
  CHECK(r.gold_size == 7.0);
  CHECK(r.precision == 6.0 / 8.0);
  CHECK(r.recall == 6.0 / 7.0);
  CHECK(r.f1 == 0.8);

  MatchResult brute = brute_force_score(ts(kGoldWant), ts(kPredWant));
  CHECK(brute.matched == 6.0);
  CHECK(brute.f1 == 0.8);
}

TEST_CASE("brute force equals the search on single-variable pairs") {
  MatchResult a = smatch_score(ts("(a / apple)"), ts("(b / apple)"));
  MatchResult b = brute_force_score(ts("(a / apple)"), ts("(b / apple)"));
  CHECK(a.matched == b.matched);
  CHECK(a.f1 == 1.0);
}

TEST_CASE("brute force dominates hill climbing on random 5-variable pairs") {
  Rng rng(11);
  xamrtest::GraphOptions opts;
  opts.max_vars = 5;
  for (int i = 0; i < 100; ++i) {
    TripleSet gold = to_triples(xamrtest::random_graph(rng, opts));
    TripleSet pred = to_triples(xamrtest::random_graph(rng, opts));
    MatchResult hc = smatch_score(gold, pred, climb_cfg(i));
    MatchResult bf = brute_force_score(gold, pred);
    CHECK(bf.matched >= hc.matched);
  }
}

TEST_CASE("default config equals the brute-force optimum below the threshold") {
  Rng rng(12);
  xamrtest::GraphOptions opts;
  opts.max_vars = 5;  // min side < default exact_threshold of 6
  for (int i = 0; i < 100; ++i) {
    AmrGraph g = xamrtest::random_graph(rng, opts);
    TripleSet gold = to_triples(g);
    TripleSet pred = to_triples(rng.chance(0.5) ? xamrtest::mutate(rng, g)
                                                : xamrtest::random_graph(rng, opts));
    MatchResult search = smatch_score(gold, pred);
    MatchResult brute = brute_force_score(gold, pred);
    CHECK(search.matched == brute.matched);
    CHECK(search.f1 == brute.f1);
  }
}

TEST_CASE("exact search handles asymmetric sizes") {
  Rng rng(13);
  xamrtest::GraphOptions small_opts, big_opts;
  small_opts.max_vars = 3;
  big_opts.max_vars = 8;
  for (int i = 0; i < 50; ++i) {
    TripleSet gold = to_triples(xamrtest::random_graph(rng, small_opts));
    TripleSet pred = to_triples(xamrtest::random_graph(rng, big_opts));
    MatchResult search = smatch_score(gold, pred, exact_cfg());
    MatchResult brute = brute_force_score(gold, pred);
    CHECK(search.matched == brute.matched);
  }
}

TEST_CASE("variable renaming leaves the exact score unchanged") {
  Rng rng(14);
  for (int i = 0; i < 60; ++i) {
    AmrGraph g = xamrtest::random_graph(rng);
    AmrGraph p = xamrtest::random_graph(rng);
    MatchResult base = smatch_score(to_triples(g), to_triples(p), exact_cfg());
    MatchResult renamed =
        smatch_score(to_triples(xamrtest::rename_variables(g, "qq")),
                     to_triples(xamrtest::rename_variables(p, "rr")), exact_cfg());
    CHECK(base.matched == renamed.matched);
    CHECK(base.f1 == renamed.f1);
  }
}

TEST_CASE("swapping arguments swaps precision and recall bit-exactly") {
  Rng rng(15);
  for (int i = 0; i < 60; ++i) {
    TripleSet a = to_triples(xamrtest::random_graph(rng));
    TripleSet b = to_triples(xamrtest::random_graph(rng));
    for (const SearchConfig &cfg : {exact_cfg(), climb_cfg(i)}) {
      MatchResult ab = smatch_score(a, b, cfg);
      MatchResult ba = smatch_score(b, a, cfg);
      CHECK(ab.matched == ba.matched);
      CHECK(ab.precision == ba.recall);
      CHECK(ab.recall == ba.precision);
      CHECK(ab.f1 == ba.f1);
    }
  }
}

TEST_CASE("more restarts never lower the hill-climbing score") {
  Rng rng(16);
  xamrtest::GraphOptions opts;
  opts.max_vars = 8;
  for (int i = 0; i < 30; ++i) {
    TripleSet gold = to_triples(xamrtest::random_graph(rng, opts));
    TripleSet pred = to_triples(xamrtest::random_graph(rng, opts));
    double previous = -1;
    for (int restarts = 1; restarts <= 5; ++restarts) {
      MatchResult r = smatch_score(gold, pred, climb_cfg(99, restarts));
      CHECK(r.matched >= previous);
      previous = r.matched;
    }
  }
}

TEST_CASE("fixed seed and restarts give identical results") {
  Rng rng(17);
  xamrtest::GraphOptions opts;
  opts.max_vars = 8;
  TripleSet gold = to_triples(xamrtest::random_graph(rng, opts));
  TripleSet pred = to_triples(xamrtest::random_graph(rng, opts));
  MatchResult a = smatch_score(gold, pred, climb_cfg(42));
  MatchResult b = smatch_score(gold, pred, climb_cfg(42));
  CHECK(a.matched == b.matched);
  CHECK(a.f1 == b.f1);
  CHECK(a.restarts_used == b.restarts_used);
  CHECK(a.alignment.mapping == b.alignment.mapping);
  CHECK(a.seed == 42);
}

TEST_CASE("empty triple bags follow the identity and total-miss limits") {
  TripleSet empty;
  TripleSet something = ts("(a / apple)");

  MatchResult both = smatch_score(empty, empty);
  CHECK(both.f1 == 1.0);
  CHECK(!both.precision_defined);
  CHECK(!both.recall_defined);

  MatchResult pred_empty = smatch_score(something, empty);
  CHECK(pred_empty.f1 == 0.0);
  CHECK(!pred_empty.precision_defined);
  CHECK(pred_empty.recall_defined);

  MatchResult gold_empty = smatch_score(empty, something);
  CHECK(gold_empty.f1 == 0.0);
  CHECK(gold_empty.precision_defined);
  CHECK(!gold_empty.recall_defined);
}

TEST_CASE("alignments are injective partial maps over real variables") {
  Rng rng(18);
  for (int i = 0; i < 50; ++i) {
    AmrGraph g = xamrtest::random_graph(rng);
    AmrGraph p = xamrtest::random_graph(rng);
    MatchResult r = smatch_score(to_triples(g), to_triples(p), exact_cfg());
    std::set<std::string> sources, targets;
    for (const auto &[pv, gv] : r.alignment.mapping) {
      CHECK(p.nodes.count(pv) == 1);
      CHECK(g.nodes.count(gv) == 1);
      CHECK(sources.insert(pv).second);
      CHECK(targets.insert(gv).second);
    }
    CHECK(r.matched <= std::min(r.pred_size, r.gold_size));
    CHECK(r.alignment.matched_score == r.matched);
  }
}

TEST_CASE("corpus micro-average matches the documented arithmetic") {
  // Pair A: matched 6 of pred 8 / gold 7. Pair B: matched 0 of 2 / 2.
  std::vector<TripleSet> gold = {ts(kGoldWant), ts("(a / apple)")};
  std::vector<TripleSet> pred = {ts(kPredWant), ts("(b / banana)")};
  MatchResult r = corpus_smatch(gold, pred);
  CHECK(r.matched == 6.0);
  CHECK(r.pred_size == 10.0);
  CHECK(r.gold_size == 9.0);
  CHECK(r.precision == 0.6);
  CHECK(r.recall == 6.0 / 9.0);
  CHECK(r.f1 == 12.0 / 19.0);

  // Order invariance.
  std::vector<TripleSet> gold_swapped = {gold[1], gold[0]};
  std::vector<TripleSet> pred_swapped = {pred[1], pred[0]};
  MatchResult swapped = corpus_smatch(gold_swapped, pred_swapped);
  CHECK(swapped.f1 == r.f1);
  CHECK(swapped.matched == r.matched);
}

TEST_CASE("corpus scoring with multiple jobs matches single-threaded") {
  Rng rng(19);
  std::vector<TripleSet> gold, pred;
  for (int i = 0; i < 40; ++i) {
    AmrGraph g = xamrtest::random_graph(rng);
    gold.push_back(to_triples(g));
    pred.push_back(to_triples(xamrtest::mutate(rng, g)));
  }
  MatchResult serial = corpus_smatch(gold, pred, {}, 1);
  MatchResult parallel = corpus_smatch(gold, pred, {}, 4);
  CHECK(serial.matched == parallel.matched);
  CHECK(serial.f1 == parallel.f1);
}

TEST_CASE("corpus length mismatch and empty corpus are errors") {
  std::vector<TripleSet> one = {ts("(a / apple)")};
  std::vector<TripleSet> two = {ts("(a / apple)"), ts("(b / banana)")};
  CHECK_THROWS_AS(corpus_smatch(one, two), DataError);
  CHECK_THROWS_AS(corpus_smatch({}, {}), DataError);
}

TEST_CASE("brute force refuses oversized inputs") {
  Rng rng(20);
  xamrtest::GraphOptions opts;
  opts.max_vars = 12;
  AmrGraph a, b;
  do {
    a = xamrtest::random_graph(rng, opts);
    b = xamrtest::random_graph(rng, opts);
  } while (a.nodes.size() <= 8 || b.nodes.size() <= 8);
  CHECK_THROWS_AS(brute_force_score(to_triples(a), to_triples(b)), DataError);
}
