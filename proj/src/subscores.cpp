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

#include "xamr/subscores.hpp"

#include <cctype>
#include <unordered_map>
#include <unordered_set>

namespace xamr {
namespace {

bool is_arg_role(const std::string &role) {
  std::string base = role;
  if (base.size() > 3 && base.compare(base.size() - 3, 3, "-of") == 0)
    base.resize(base.size() - 3);
  if (base.size() < 4 || base.compare(0, 3, "arg") != 0) return false;
  for (size_t i = 3; i < base.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(base[i]))) return false;
  return true;
}

bool is_op_role(const std::string &role) {
  if (role.size() < 3 || role.compare(0, 2, "op") != 0) return false;
  for (size_t i = 2; i < role.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(role[i]))) return false;
  return true;
}

void collect_variables(TripleSet *set) {
  std::unordered_set<std::string> seen;
  for (const Triple &t : set->triples) {
    if (seen.insert(t.source).second) set->variables.push_back(t.source);
    if (t.kind == TripleKind::Relation && seen.insert(t.target).second)
      set->variables.push_back(t.target);
  }
}

void keep_instances_of(const TripleSet &in, const std::unordered_set<std::string> &vars,
                       TripleSet *out) {
  for (const Triple &t : in.triples)
    if (t.kind == TripleKind::Instance && vars.count(t.source))
      out->triples.push_back(t);
}

}  // namespace

const char *aspect_key(Aspect aspect) {
  switch (aspect) {
    case Aspect::Unlabeled: return "unlabeled";
    case Aspect::NoWSD: return "no_wsd";
    case Aspect::Reentrancies: return "reentrancies";
    case Aspect::Concepts: return "concepts";
    case Aspect::NamedEnt: return "named_ent";
    case Aspect::Negation: return "negation";
    case Aspect::SRL: return "srl";
  }
  return "";
}

const char *aspect_label(Aspect aspect) {
  switch (aspect) {
    case Aspect::Unlabeled: return "Unlabeled";
    case Aspect::NoWSD: return "No WSD";
    case Aspect::Reentrancies: return "Reentrancies";
    case Aspect::Concepts: return "Concepts";
    case Aspect::NamedEnt: return "Named Ent.";
    case Aspect::Negation: return "Negation";
    case Aspect::SRL: return "SRL";
  }
  return "";
}

TripleSet aspect_view(const TripleSet &triples, Aspect aspect) {
  TripleSet out;
  switch (aspect) {
    case Aspect::Unlabeled:
      for (Triple t : triples.triples) {
        if (t.kind != TripleKind::Instance) t.relation = "rel";
        out.triples.push_back(std::move(t));
      }
      break;

    case Aspect::NoWSD:
      for (Triple t : triples.triples) {
        if (t.kind == TripleKind::Instance ||
            (t.kind == TripleKind::Attribute && t.relation == "top"))
          t.target = strip_sense_suffix(t.target);
        out.triples.push_back(std::move(t));
      }
      break;

    case Aspect::Concepts:
      for (const Triple &t : triples.triples)
        if (t.kind == TripleKind::Instance) out.triples.push_back(t);
      break;

    case Aspect::Negation: {
      std::unordered_set<std::string> negated;
      for (const Triple &t : triples.triples)
        if (t.kind == TripleKind::Attribute && t.relation == "polarity" &&
            t.target == "-")
          negated.insert(t.source);
      keep_instances_of(triples, negated, &out);
      for (const Triple &t : triples.triples)
        if (t.kind == TripleKind::Attribute && t.relation == "polarity" &&
            t.target == "-")
          out.triples.push_back(t);
      break;
    }

    case Aspect::NamedEnt: {
      std::unordered_set<std::string> named, name_nodes;
      for (const Triple &t : triples.triples) {
        if (t.kind == TripleKind::Relation && t.relation == "name") {
          named.insert(t.source);
          name_nodes.insert(t.target);
        }
      }
      keep_instances_of(triples, named, &out);
      keep_instances_of(triples, name_nodes, &out);
      for (const Triple &t : triples.triples) {
        if (t.kind == TripleKind::Relation && t.relation == "name")
          out.triples.push_back(t);
        else if (t.kind == TripleKind::Attribute && is_op_role(t.relation) &&
                 name_nodes.count(t.source))
          out.triples.push_back(t);
      }
      break;
    }

    case Aspect::Reentrancies: {
      std::unordered_map<std::string, int> indegree;
      for (const Triple &t : triples.triples)
        if (t.kind == TripleKind::Relation) indegree[t.target]++;
      std::unordered_set<std::string> endpoints;
      for (const Triple &t : triples.triples) {
        if (t.kind == TripleKind::Relation && indegree[t.target] >= 2) {
          endpoints.insert(t.source);
          endpoints.insert(t.target);
        }
      }
      keep_instances_of(triples, endpoints, &out);
      for (const Triple &t : triples.triples)
        if (t.kind == TripleKind::Relation && indegree[t.target] >= 2)
          out.triples.push_back(t);
      break;
    }

    case Aspect::SRL: {
      std::unordered_set<std::string> endpoints;
      for (const Triple &t : triples.triples) {
        if (t.kind == TripleKind::Relation && is_arg_role(t.relation)) {
          endpoints.insert(t.source);
          endpoints.insert(t.target);
        }
      }
      keep_instances_of(triples, endpoints, &out);
      for (const Triple &t : triples.triples)
        if (t.kind == TripleKind::Relation && is_arg_role(t.relation))
          out.triples.push_back(t);
      break;
    }
  }
  collect_variables(&out);
  return out;
}

BreakdownReport breakdown(const AmrGraph &gold, const AmrGraph &pred,
                          const Metric &metric) {
  TripleSet gold_triples = to_triples(gold);
  TripleSet pred_triples = to_triples(pred);
  BreakdownReport report;
  report.overall = metric.pair(gold_triples, pred_triples);
  for (Aspect aspect : kAllAspects)
    report.at(aspect) = metric.pair(aspect_view(gold_triples, aspect),
                                    aspect_view(pred_triples, aspect));
  return report;
}

BreakdownReport corpus_breakdown(const std::vector<AmrGraph> &gold,
                                 const std::vector<AmrGraph> &pred,
                                 const Metric &metric, int jobs) {
  std::vector<TripleSet> gold_triples, pred_triples;
  gold_triples.reserve(gold.size());
  pred_triples.reserve(pred.size());
  for (const AmrGraph &g : gold) gold_triples.push_back(to_triples(g));
  for (const AmrGraph &g : pred) pred_triples.push_back(to_triples(g));

  BreakdownReport report;
  report.overall = metric.corpus(gold_triples, pred_triples, jobs);
  for (Aspect aspect : kAllAspects) {
    std::vector<TripleSet> gold_views, pred_views;
    gold_views.reserve(gold_triples.size());
    pred_views.reserve(pred_triples.size());
    for (const TripleSet &t : gold_triples) gold_views.push_back(aspect_view(t, aspect));
    for (const TripleSet &t : pred_triples) pred_views.push_back(aspect_view(t, aspect));
    report.at(aspect) = metric.corpus(gold_views, pred_views, jobs);
  }
  return report;
}

}  // namespace xamr
