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

#include "xamr/smatch.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <map>
#include <mutex>
#include <thread>
#include <unordered_map>
#include <unordered_set>

#include "xamr/error.hpp"

namespace xamr {
namespace {

constexpr double kImproveEps = 1e-12;
constexpr double kPruneSlack = 1e-9;

// SplitMix64. Standard-library shuffles and distributions are
// implementation-defined, so all randomized choices go through this.
std::uint64_t splitmix64(std::uint64_t &state) {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t restart_state(std::uint64_t seed, int restart) {
  std::uint64_t s = seed ^ (0x9e3779b97f4a7c15ULL * (std::uint64_t(restart) + 1));
  splitmix64(s);
  splitmix64(s);
  return s;
}

void fisher_yates(std::vector<int> &items, std::uint64_t &state) {
  for (size_t i = items.size(); i > 1; --i)
    std::swap(items[i - 1], items[splitmix64(state) % i]);
}

struct Interner {
  std::unordered_map<std::string, int> ids;
  int get(const std::string &key) {
    return ids.emplace(key, static_cast<int>(ids.size())).first->second;
  }
};

using Counts = std::vector<std::pair<int, int>>;  // sorted (id, count)

double overlap(const Counts &a, const Counts &b) {
  double total = 0;
  size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].first < b[j].first) {
      ++i;
    } else if (b[j].first < a[i].first) {
      ++j;
    } else {
      total += std::min(a[i].second, b[j].second);
      ++i;
      ++j;
    }
  }
  return total;
}

bool intersects(const std::vector<int> &a, const std::vector<int> &b) {
  size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j]) ++i;
    else if (b[j] < a[i]) ++j;
    else return true;
  }
  return false;
}

Counts finalize(std::map<int, int> &&counts) {
  return Counts(counts.begin(), counts.end());
}

void sort_unique(std::vector<int> &v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

// One graph's triples indexed for alignment scoring.
struct SideData {
  std::vector<std::string> vars;
  std::unordered_map<std::string, int> var_index;
  std::vector<std::string> concepts;  // empty string = no instance triple
  std::vector<Counts> attr_sigs;      // per variable, excluding the top triple
  int top_var = -1;
  std::string top_value;

  std::vector<std::pair<int, int>> pair_keys;  // unique ordered (source, target)
  std::vector<Counts> pair_roles;              // parallel to pair_keys
  std::unordered_map<std::uint64_t, int> pair_lookup;
  std::vector<std::vector<int>> adj_pairs;  // var -> indices into pair_keys
  std::vector<std::vector<int>> out_roles, in_roles;  // per var, sorted role ids

  double total = 0;

  int count() const { return static_cast<int>(vars.size()); }
};

std::uint64_t pair_key(int s, int t) {
  return (std::uint64_t(std::uint32_t(s)) << 32) | std::uint32_t(t);
}

SideData build_side(const TripleSet &set, Interner &roles, Interner &attrs) {
  SideData side;
  side.total = static_cast<double>(set.triples.size());
  auto intern_var = [&side](const std::string &name) {
    auto [it, inserted] = side.var_index.emplace(name, side.count());
    if (inserted) side.vars.push_back(name);
    return it->second;
  };
  for (const std::string &v : set.variables) intern_var(v);
  for (const Triple &t : set.triples) {
    intern_var(t.source);
    if (t.kind == TripleKind::Relation) intern_var(t.target);
  }

  const int n = side.count();
  side.concepts.resize(n);
  std::vector<std::map<int, int>> attr_maps(n);
  std::map<std::pair<int, int>, std::map<int, int>> pair_maps;

  for (const Triple &t : set.triples) {
    int src = side.var_index.at(t.source);
    switch (t.kind) {
      case TripleKind::Instance:
        if (side.concepts[src].empty())
          side.concepts[src] = t.target;
        else  // extra instances are rare; fold them into the attribute bag
          attr_maps[src][attrs.get(t.relation + '\x1f' + t.target)]++;
        break;
      case TripleKind::Attribute:
        if (t.relation == "top" && side.top_var < 0) {
          side.top_var = src;
          side.top_value = t.target;
        } else {
          attr_maps[src][attrs.get(t.relation + '\x1f' + t.target)]++;
        }
        break;
      case TripleKind::Relation: {
        int tgt = side.var_index.at(t.target);
        pair_maps[{src, tgt}][roles.get(t.relation)]++;
        break;
      }
    }
  }

  side.attr_sigs.reserve(n);
  for (auto &m : attr_maps) side.attr_sigs.push_back(finalize(std::move(m)));

  side.adj_pairs.resize(n);
  side.out_roles.resize(n);
  side.in_roles.resize(n);
  for (auto &[key, role_map] : pair_maps) {
    int idx = static_cast<int>(side.pair_keys.size());
    side.pair_keys.push_back(key);
    side.pair_lookup.emplace(pair_key(key.first, key.second), idx);
    side.adj_pairs[key.first].push_back(idx);
    if (key.second != key.first) side.adj_pairs[key.second].push_back(idx);
    for (auto &[role, count] : role_map) {
      (void)count;
      side.out_roles[key.first].push_back(role);
      side.in_roles[key.second].push_back(role);
    }
    side.pair_roles.push_back(finalize(std::move(role_map)));
  }
  for (int v = 0; v < n; ++v) {
    sort_unique(side.adj_pairs[v]);
    sort_unique(side.out_roles[v]);
    sort_unique(side.in_roles[v]);
  }
  return side;
}

// Scores injective maps from side A variables into side B variables. The
// contribution decomposes as a per-assignment unary term (instance
// similarity, attribute overlap, top credit) plus relation-role overlap per
// ordered variable pair, which makes local deltas cheap.
class PairScorer {
 public:
  PairScorer(const TripleSet &a, const TripleSet &b, const ConceptSimilarity &sim,
             bool grade_top) {
    Interner roles, attrs;
    A = build_side(a, roles, attrs);
    B = build_side(b, roles, attrs);
    unary_.assign(size_t(A.count()) * B.count(), 0.0);
    for (int va = 0; va < A.count(); ++va) {
      for (int vb = 0; vb < B.count(); ++vb) {
        double u = overlap(A.attr_sigs[va], B.attr_sigs[vb]);
        if (!A.concepts[va].empty() && !B.concepts[vb].empty())
          u += similarity(A.concepts[va], B.concepts[vb], sim);
        if (va == A.top_var && vb == B.top_var && A.top_var >= 0 && B.top_var >= 0)
          u += grade_top ? similarity(A.top_value, B.top_value, sim)
                         : (A.top_value == B.top_value ? 1.0 : 0.0);
        unary_[size_t(va) * B.count() + vb] = u;
      }
    }
  }

  double unary(int va, int vb) const { return unary_[size_t(va) * B.count() + vb]; }

  double pair_term(int pair_idx, const std::vector<int> &m) const {
    const auto &[s, t] = A.pair_keys[pair_idx];
    if (m[s] < 0 || m[t] < 0) return 0;
    auto it = B.pair_lookup.find(pair_key(m[s], m[t]));
    if (it == B.pair_lookup.end()) return 0;
    return overlap(A.pair_roles[pair_idx], B.pair_roles[it->second]);
  }

  double score(const std::vector<int> &m) const {
    double s = 0;
    for (int va = 0; va < A.count(); ++va)
      if (m[va] >= 0) s += unary(va, m[va]);
    for (int pi = 0; pi < static_cast<int>(A.pair_keys.size()); ++pi)
      s += pair_term(pi, m);
    return s;
  }

  // Contribution of every term that involves variable va.
  double local(int va, const std::vector<int> &m) const {
    double s = m[va] >= 0 ? unary(va, m[va]) : 0;
    for (int pi : A.adj_pairs[va]) s += pair_term(pi, m);
    return s;
  }

  // Contribution of every term involving va1 or va2 (counted once).
  double local2(int va1, int va2, const std::vector<int> &m) const {
    double s = 0;
    if (m[va1] >= 0) s += unary(va1, m[va1]);
    if (m[va2] >= 0) s += unary(va2, m[va2]);
    const auto &p1 = A.adj_pairs[va1];
    const auto &p2 = A.adj_pairs[va2];
    size_t i = 0, j = 0;
    while (i < p1.size() || j < p2.size()) {
      int pi;
      if (j >= p2.size() || (i < p1.size() && p1[i] < p2[j])) {
        pi = p1[i++];
      } else if (i >= p1.size() || p2[j] < p1[i]) {
        pi = p2[j++];
      } else {
        pi = p1[i];
        ++i;
        ++j;
      }
      s += pair_term(pi, m);
    }
    return s;
  }

  SideData A, B;

 private:
  static double similarity(const std::string &x, const std::string &y,
                           const ConceptSimilarity &sim) {
    if (sim) return sim(x, y);
    return x == y ? 1.0 : 0.0;
  }

  std::vector<double> unary_;
};

struct CoreResult {
  double matched = 0;
  std::vector<int> mapping;  // A index -> B index or -1
  int restarts_used = 0;
};

// Normative hill climbing: greedy concept pairing with seeded shuffles and
// random fill, then best-of-all single remaps and pairwise swaps until no
// move strictly improves; independent restarts keep the best run.
CoreResult hill_climb(const PairScorer &scorer, const SearchConfig &cfg) {
  const int na = scorer.A.count();
  const int nb = scorer.B.count();
  const double max_matched = std::min(scorer.A.total, scorer.B.total);

  CoreResult best;
  best.matched = -1;
  for (int r = 0; r < std::max(1, cfg.restarts); ++r) {
    best.restarts_used = r + 1;
    std::uint64_t state = restart_state(cfg.seed, r);
    std::vector<int> a_order(na), b_order(nb);
    for (int i = 0; i < na; ++i) a_order[i] = i;
    for (int i = 0; i < nb; ++i) b_order[i] = i;
    fisher_yates(a_order, state);
    fisher_yates(b_order, state);

    std::vector<int> m(na, -1);
    std::vector<bool> used(nb, false);
    // Greedy pairing of equal instance concepts, ties to the earliest
    // variable in the shuffled order.
    for (int va : a_order) {
      if (scorer.A.concepts[va].empty()) continue;
      for (int vb : b_order) {
        if (used[vb] || scorer.B.concepts[vb] != scorer.A.concepts[va]) continue;
        m[va] = vb;
        used[vb] = true;
        break;
      }
    }
    std::vector<int> free_b;
    for (int vb : b_order)
      if (!used[vb]) free_b.push_back(vb);
    for (int va : a_order) {
      if (m[va] >= 0 || free_b.empty()) continue;
      size_t pick = splitmix64(state) % free_b.size();
      m[va] = free_b[pick];
      used[free_b[pick]] = true;
      free_b.erase(free_b.begin() + pick);
    }

    double cur = scorer.score(m);
    for (int iter = 0; iter < 10000; ++iter) {
      double best_delta = 0;
      int move_a = -1, move_b = -1, swap_a = -1;
      // Single-variable remaps, including unmapping.
      for (int va : a_order) {
        double base = scorer.local(va, m);
        int old = m[va];
        auto consider = [&](int nb_target) {
          m[va] = nb_target;
          double delta = scorer.local(va, m) - base;
          m[va] = old;
          if (delta > best_delta + kImproveEps) {
            best_delta = delta;
            move_a = va;
            move_b = nb_target;
            swap_a = -1;
          }
        };
        if (old >= 0) consider(-1);
        for (int vb : b_order)
          if (!used[vb] && vb != old) consider(vb);
      }
      // Pairwise swaps.
      for (int i = 0; i < na; ++i) {
        for (int j = i + 1; j < na; ++j) {
          int va1 = a_order[i], va2 = a_order[j];
          if (m[va1] == m[va2]) continue;  // both unmapped
          double base = scorer.local2(va1, va2, m);
          std::swap(m[va1], m[va2]);
          double delta = scorer.local2(va1, va2, m) - base;
          std::swap(m[va1], m[va2]);
          if (delta > best_delta + kImproveEps) {
            best_delta = delta;
            move_a = va1;
            swap_a = va2;
            move_b = -1;
          }
        }
      }
      if (move_a < 0) break;
      int previous = m[move_a];
      if (swap_a >= 0) {
        std::swap(m[move_a], m[swap_a]);
      } else {
        if (previous >= 0) used[previous] = false;
        m[move_a] = move_b;
        if (move_b >= 0) used[move_b] = true;
      }
      double next = scorer.score(m);
      if (next <= cur + kImproveEps) {
        // Local delta disagreed with the full recompute (graded-score
        // drift); undo and stop at the last verified mapping.
        if (swap_a >= 0) {
          std::swap(m[move_a], m[swap_a]);
        } else {
          if (move_b >= 0) used[move_b] = false;
          m[move_a] = previous;
          if (previous >= 0) used[previous] = true;
        }
        break;
      }
      cur = next;
    }

    if (cur > best.matched) {
      best.matched = cur;
      best.mapping = m;
    }
    if (best.matched >= max_matched - kImproveEps) break;  // nothing left to gain
  }
  if (best.mapping.empty()) best.mapping.assign(na, -1);
  if (best.matched < 0) best.matched = 0;
  return best;
}

// Exact search: depth-first assignment of A variables (most promising
// first) over candidate B images plus "unmapped", with an admissible bound
// on the remaining gain. Only pairs that can contribute are candidates, so
// the optimum is preserved.
CoreResult exact_search(const PairScorer &scorer) {
  const int na = scorer.A.count();
  const int nb = scorer.B.count();

  std::vector<double> max_unary(na, 0.0);
  std::vector<std::vector<int>> candidates(na);
  for (int va = 0; va < na; ++va) {
    for (int vb = 0; vb < nb; ++vb) {
      double u = scorer.unary(va, vb);
      max_unary[va] = std::max(max_unary[va], u);
      bool role_compat = intersects(scorer.A.out_roles[va], scorer.B.out_roles[vb]) ||
                         intersects(scorer.A.in_roles[va], scorer.B.in_roles[vb]);
      if (u > 0 || role_compat) candidates[va].push_back(vb);
    }
  }

  std::vector<double> rel_weight(na, 0.0);  // total role mass touching the var
  for (int va = 0; va < na; ++va)
    for (int pi : scorer.A.adj_pairs[va])
      for (const auto &[role, count] : scorer.A.pair_roles[pi]) {
        (void)role;
        rel_weight[va] += count;
      }

  std::vector<int> order(na);
  for (int i = 0; i < na; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
    return max_unary[x] + rel_weight[x] > max_unary[y] + rel_weight[y];
  });
  std::vector<int> pos(na);
  for (int i = 0; i < na; ++i) pos[order[i]] = i;

  // A relation pair unlocks once both endpoints are assigned; charge its
  // mass to the later endpoint so the suffix bound stays admissible.
  std::vector<double> ub(na, 0.0);
  for (int i = 0; i < na; ++i) ub[i] = max_unary[order[i]];
  for (size_t pi = 0; pi < scorer.A.pair_keys.size(); ++pi) {
    const auto &[s, t] = scorer.A.pair_keys[pi];
    double mass = 0;
    for (const auto &[role, count] : scorer.A.pair_roles[pi]) {
      (void)role;
      mass += count;
    }
    ub[std::max(pos[s], pos[t])] += mass;
  }
  std::vector<double> suffix(na + 1, 0.0);
  for (int i = na - 1; i >= 0; --i) suffix[i] = suffix[i + 1] + ub[i];

  std::vector<int> m(na, -1);
  std::vector<bool> used(nb, false);
  CoreResult best;
  best.matched = -1;
  best.mapping.assign(na, -1);

  auto dfs = [&](auto &&self, int depth, double current) -> void {
    if (current + suffix[depth] + kPruneSlack <= best.matched) return;
    if (depth == na) {
      double value = scorer.score(m);
      if (value > best.matched) {
        best.matched = value;
        best.mapping = m;
      }
      return;
    }
    int va = order[depth];
    for (int vb : candidates[va]) {
      if (used[vb]) continue;
      m[va] = vb;
      used[vb] = true;
      // Gain from terms whose variables are all assigned by now.
      double gain = scorer.unary(va, vb);
      for (int pi : scorer.A.adj_pairs[va]) {
        const auto &[s, t] = scorer.A.pair_keys[pi];
        int other = (s == va) ? t : s;
        if (other == va || pos[other] < depth) gain += scorer.pair_term(pi, m);
      }
      self(self, depth + 1, current + gain);
      used[vb] = false;
      m[va] = -1;
    }
    m[va] = -1;
    self(self, depth + 1, current);
  };
  dfs(dfs, 0, 0.0);
  if (best.matched < 0) best.matched = 0;
  return best;
}

// True when the pred side should be the mapped (smaller) side. Ties fall
// back to a canonical text key so that swapping the arguments swaps P and
// R bit-exactly.
bool map_pred_side(const TripleSet &gold, const TripleSet &pred) {
  auto var_count = [](const TripleSet &s) {
    std::unordered_set<std::string> vars(s.variables.begin(), s.variables.end());
    for (const Triple &t : s.triples) {
      vars.insert(t.source);
      if (t.kind == TripleKind::Relation) vars.insert(t.target);
    }
    return vars.size();
  };
  size_t p = var_count(pred), g = var_count(gold);
  if (p != g) return p < g;
  return dump_triples(pred) <= dump_triples(gold);
}

MatchResult assemble(const TripleSet &gold, const TripleSet &pred, double matched,
                     Alignment alignment, int restarts_used, std::uint64_t seed) {
  MatchResult result;
  result.matched = matched;
  result.pred_size = static_cast<double>(pred.triples.size());
  result.gold_size = static_cast<double>(gold.triples.size());
  result.alignment = std::move(alignment);
  result.alignment.matched_score = matched;
  result.restarts_used = restarts_used;
  result.seed = seed;
  result.precision_defined = result.pred_size > 0;
  result.recall_defined = result.gold_size > 0;
  if (!result.precision_defined && !result.recall_defined) {
    result.precision = result.recall = result.f1 = 1.0;  // both empty: identity
  } else if (!result.precision_defined || !result.recall_defined) {
    result.precision = result.recall = result.f1 = 0.0;
  } else {
    result.precision = matched / result.pred_size;
    result.recall = matched / result.gold_size;
    result.f1 = matched > 0 ? 2.0 * matched / (result.pred_size + result.gold_size) : 0.0;
  }
  return result;
}

Alignment orient_mapping(const PairScorer &scorer, const std::vector<int> &m,
                         bool pred_is_a) {
  Alignment alignment;
  for (int va = 0; va < scorer.A.count(); ++va) {
    if (m[va] < 0) continue;
    if (pred_is_a)
      alignment.mapping.emplace_back(scorer.A.vars[va], scorer.B.vars[m[va]]);
    else
      alignment.mapping.emplace_back(scorer.B.vars[m[va]], scorer.A.vars[va]);
  }
  std::sort(alignment.mapping.begin(), alignment.mapping.end());
  return alignment;
}

}  // namespace

MatchResult align_score(const TripleSet &gold, const TripleSet &pred,
                        const ConceptSimilarity &sim, bool grade_top,
                        const SearchConfig &cfg) {
  bool pred_is_a = map_pred_side(gold, pred);
  const TripleSet &a = pred_is_a ? pred : gold;
  const TripleSet &b = pred_is_a ? gold : pred;
  PairScorer scorer(a, b, sim, grade_top);

  CoreResult core;
  if (cfg.exact_threshold > 0 && scorer.A.count() < cfg.exact_threshold)
    core = exact_search(scorer);
  else
    core = hill_climb(scorer, cfg);

  return assemble(gold, pred, core.matched, orient_mapping(scorer, core.mapping, pred_is_a),
                  core.restarts_used, cfg.seed);
}

MatchResult smatch_score(const TripleSet &gold, const TripleSet &pred,
                         const SearchConfig &cfg) {
  return align_score(gold, pred, nullptr, true, cfg);
}

namespace {

// Oracle-side scoring: rename the mapped triples and count the multiset
// intersection directly. Shares nothing with PairScorer.
struct BruteSide {
  std::vector<std::string> vars;
  std::unordered_map<std::string, std::string> concepts;  // var -> concept
  std::string top_var, top_value;
  bool has_top = false;
  std::vector<std::string> binary_triples;  // attributes + relations, encoded
};

BruteSide build_brute_side(const TripleSet &set) {
  BruteSide side;
  std::unordered_set<std::string> seen;
  auto add_var = [&](const std::string &v) {
    if (seen.insert(v).second) side.vars.push_back(v);
  };
  for (const std::string &v : set.variables) add_var(v);
  for (const Triple &t : set.triples) {
    add_var(t.source);
    if (t.kind == TripleKind::Relation) add_var(t.target);
  }
  for (const Triple &t : set.triples) {
    switch (t.kind) {
      case TripleKind::Instance:
        if (!side.concepts.count(t.source)) {
          side.concepts[t.source] = t.target;
        } else {
          side.binary_triples.push_back("A\x1f" + t.relation + "\x1f" + t.source +
                                        "\x1f" + t.target);
        }
        break;
      case TripleKind::Attribute:
        if (t.relation == "top" && !side.has_top) {
          side.has_top = true;
          side.top_var = t.source;
          side.top_value = t.target;
        } else {
          side.binary_triples.push_back("A\x1f" + t.relation + "\x1f" + t.source +
                                        "\x1f" + t.target);
        }
        break;
      case TripleKind::Relation:
        side.binary_triples.push_back("R\x1f" + t.relation + "\x1f" + t.source +
                                      "\x1f" + t.target);
        break;
    }
  }
  std::sort(side.binary_triples.begin(), side.binary_triples.end());
  return side;
}

double brute_mapping_score(const BruteSide &a, const BruteSide &b,
                           const std::unordered_map<std::string, std::string> &m,
                           const ConceptSimilarity &sim, bool grade_top) {
  auto similarity = [&](const std::string &x, const std::string &y) {
    if (sim) return sim(x, y);
    return x == y ? 1.0 : 0.0;
  };
  double total = 0;
  for (const auto &[av, bv] : m) {
    auto ac = a.concepts.find(av);
    auto bc = b.concepts.find(bv);
    if (ac != a.concepts.end() && bc != b.concepts.end())
      total += similarity(ac->second, bc->second);
  }
  if (a.has_top && b.has_top) {
    auto it = m.find(a.top_var);
    if (it != m.end() && it->second == b.top_var)
      total += grade_top ? similarity(a.top_value, b.top_value)
                         : (a.top_value == b.top_value ? 1.0 : 0.0);
  }
  // Binary part: rename, then multiset-intersect against b's encoded bag.
  std::vector<std::string> renamed;
  renamed.reserve(a.binary_triples.size());
  for (const std::string &enc : a.binary_triples) {
    size_t p1 = enc.find('\x1f');
    size_t p2 = enc.find('\x1f', p1 + 1);
    size_t p3 = enc.find('\x1f', p2 + 1);
    std::string src = enc.substr(p2 + 1, p3 - p2 - 1);
    std::string tgt = enc.substr(p3 + 1);
    auto src_it = m.find(src);
    if (src_it == m.end()) continue;
    if (enc[0] == 'R') {
      auto tgt_it = m.find(tgt);
      if (tgt_it == m.end()) continue;
      tgt = tgt_it->second;
    }
    renamed.push_back(enc.substr(0, p2 + 1) + src_it->second + "\x1f" + tgt);
  }
  std::sort(renamed.begin(), renamed.end());
  size_t i = 0, j = 0;
  while (i < renamed.size() && j < b.binary_triples.size()) {
    if (renamed[i] < b.binary_triples[j]) ++i;
    else if (b.binary_triples[j] < renamed[i]) ++j;
    else { total += 1; ++i; ++j; }
  }
  return total;
}

}  // namespace

MatchResult brute_force_score(const TripleSet &gold, const TripleSet &pred,
                              const ConceptSimilarity &sim, bool grade_top) {
  bool pred_is_a = map_pred_side(gold, pred);
  BruteSide a = build_brute_side(pred_is_a ? pred : gold);
  BruteSide b = build_brute_side(pred_is_a ? gold : pred);

  size_t k = a.vars.size(), n = b.vars.size();
  if (std::min(k, n) > 8)
    throw DataError("brute_force_score: more than 8 variables on both sides");
  double mappings = 1;
  for (size_t i = 0; i < k; ++i) mappings *= double(n - i);
  if (mappings > 2e7)
    throw DataError("brute_force_score: mapping space too large");

  std::unordered_map<std::string, std::string> m, best_m;
  std::vector<bool> used(n, false);
  double best = -1;
  auto dfs = [&](auto &&self, size_t depth) -> void {
    if (depth == k) {
      double value = brute_mapping_score(a, b, m, sim, grade_top);
      if (value > best) {
        best = value;
        best_m = m;
      }
      return;
    }
    for (size_t vb = 0; vb < n; ++vb) {
      if (used[vb]) continue;
      used[vb] = true;
      m[a.vars[depth]] = b.vars[vb];
      self(self, depth + 1);
      m.erase(a.vars[depth]);
      used[vb] = false;
    }
  };
  dfs(dfs, 0);
  if (best < 0) best = brute_mapping_score(a, b, m, sim, grade_top);

  Alignment alignment;
  for (const auto &[av, bv] : best_m) {
    if (pred_is_a)
      alignment.mapping.emplace_back(av, bv);
    else
      alignment.mapping.emplace_back(bv, av);
  }
  std::sort(alignment.mapping.begin(), alignment.mapping.end());
  return assemble(gold, pred, best, std::move(alignment), 0, 0);
}

MatchResult brute_force_score(const TripleSet &gold, const TripleSet &pred) {
  return brute_force_score(gold, pred, nullptr, true);
}

MatchResult corpus_score(const std::vector<TripleSet> &gold,
                         const std::vector<TripleSet> &pred,
                         const PairScoreFn &pair_scorer, int jobs) {
  if (gold.size() != pred.size())
    throw DataError("corpus length mismatch: " + std::to_string(gold.size()) +
                    " gold vs " + std::to_string(pred.size()) + " pred entries");
  if (gold.empty()) throw DataError("empty corpus");

  std::vector<MatchResult> results(gold.size());
  int workers = std::max(1, jobs);
  if (workers == 1) {
    for (size_t i = 0; i < gold.size(); ++i)
      results[i] = pair_scorer(gold[i], pred[i]);
  } else {
    std::vector<std::thread> pool;
    std::atomic<size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    for (int w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        try {
          for (size_t i = next.fetch_add(1); i < gold.size(); i = next.fetch_add(1))
            results[i] = pair_scorer(gold[i], pred[i]);
        } catch (...) {
          std::lock_guard<std::mutex> lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      });
    for (auto &t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
  }

  double matched = 0, pred_total = 0, gold_total = 0;
  int restarts_used = 0;
  for (const MatchResult &r : results) {
    matched += r.matched;
    pred_total += r.pred_size;
    gold_total += r.gold_size;
    restarts_used = std::max(restarts_used, r.restarts_used);
  }
  MatchResult out;
  out.matched = matched;
  out.pred_size = pred_total;
  out.gold_size = gold_total;
  out.restarts_used = restarts_used;
  out.seed = results.front().seed;
  out.precision_defined = pred_total > 0;
  out.recall_defined = gold_total > 0;
  if (!out.precision_defined && !out.recall_defined) {
    out.precision = out.recall = out.f1 = 1.0;
  } else if (!out.precision_defined || !out.recall_defined) {
    out.precision = out.recall = out.f1 = 0.0;
  } else {
    out.precision = matched / pred_total;
    out.recall = matched / gold_total;
    out.f1 = matched > 0 ? 2.0 * matched / (pred_total + gold_total) : 0.0;
  }
  return out;
}

MatchResult corpus_smatch(const std::vector<TripleSet> &gold,
                          const std::vector<TripleSet> &pred,
                          const SearchConfig &cfg, int jobs) {
  return corpus_score(
      gold, pred,
      [&cfg](const TripleSet &g, const TripleSet &p) { return smatch_score(g, p, cfg); },
      jobs);
}

}  // namespace xamr
