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

#include "xamr/s2match.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>

#include "xamr/error.hpp"

namespace xamr {
namespace {

std::vector<std::string> split_fields(const std::string &line) {
  std::vector<std::string> fields;
  std::istringstream in(line);
  std::string field;
  while (in >> field) fields.push_back(field);
  return fields;
}

bool parse_double(const std::string &text, double *out) {
  char *end = nullptr;
  *out = std::strtod(text.c_str(), &end);
  return end == text.c_str() + text.size() && !text.empty();
}

bool is_integer(const std::string &text) {
  if (text.empty()) return false;
  for (char c : text)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

std::vector<std::string> label_tokens(const std::string &label) {
  std::string base = strip_sense_suffix(label);
  std::vector<std::string> tokens;
  size_t start = 0;
  while (start <= base.size()) {
    size_t dash = base.find('-', start);
    if (dash == std::string::npos) dash = base.size();
    if (dash > start) tokens.push_back(base.substr(start, dash - start));
    start = dash + 1;
  }
  return tokens;
}

struct Composed {
  std::vector<double> vec;
  double norm = 1.0;
};

// Averages the unit token vectors; stored single-token vectors keep their
// unit norm so the identity cosine stays exact.
std::optional<Composed> compose(const std::string &label, const EmbeddingTable &table) {
  std::vector<std::string> tokens = label_tokens(label);
  if (tokens.empty()) return std::nullopt;
  if (tokens.size() == 1) {
    const std::vector<double> *v = table.find(tokens[0]);
    if (!v) return std::nullopt;
    return Composed{*v, 1.0};
  }
  Composed out;
  out.vec.assign(table.dimension, 0.0);
  for (const std::string &tok : tokens) {
    const std::vector<double> *v = table.find(tok);
    if (!v) return std::nullopt;
    for (int d = 0; d < table.dimension; ++d) out.vec[d] += (*v)[d];
  }
  double n2 = 0;
  for (int d = 0; d < table.dimension; ++d) {
    out.vec[d] /= static_cast<double>(tokens.size());
    n2 += out.vec[d] * out.vec[d];
  }
  out.norm = std::sqrt(n2);
  return out;
}

}  // namespace

EmbeddingTable load_embeddings(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open embedding file: " + path);

  EmbeddingTable table;
  std::string line;
  int lineno = 0;
  bool first_content_line = true;
  while (std::getline(in, line)) {
    ++lineno;
    std::vector<std::string> fields = split_fields(line);
    if (fields.empty()) continue;
    if (first_content_line && fields.size() == 2 && is_integer(fields[0]) &&
        is_integer(fields[1])) {
      first_content_line = false;  // "N D" header
      continue;
    }
    first_content_line = false;
    if (fields.size() < 2)
      throw DataError("embedding line " + std::to_string(lineno) + ": no vector");
    int dim = static_cast<int>(fields.size()) - 1;
    if (table.dimension == 0)
      table.dimension = dim;
    else if (dim != table.dimension)
      throw DataError("embedding line " + std::to_string(lineno) +
                      ": dimension " + std::to_string(dim) + " != " +
                      std::to_string(table.dimension));
    if (table.vectors.count(fields[0])) continue;  // keep first occurrence
    std::vector<double> vec(dim);
    double n2 = 0;
    for (int d = 0; d < dim; ++d) {
      if (!parse_double(fields[d + 1], &vec[d]))
        throw DataError("embedding line " + std::to_string(lineno) +
                        ": unparseable value '" + fields[d + 1] + "'");
      n2 += vec[d] * vec[d];
    }
    if (n2 > 0) {
      double norm = std::sqrt(n2);
      for (double &v : vec) v /= norm;
    }
    table.vectors.emplace(fields[0], std::move(vec));
  }
  return table;
}

double concept_similarity(const std::string &a, const std::string &b,
                          const EmbeddingTable &table, double tau) {
  if (a == b) return 1.0;
  std::optional<Composed> va = compose(a, table);
  std::optional<Composed> vb = compose(b, table);
  if (!va || !vb) return 0.0;  // OOV: exact match only
  if (va->norm == 0 || vb->norm == 0) return 0.0;
  double dot = 0;
  for (size_t d = 0; d < va->vec.size(); ++d) dot += va->vec[d] * vb->vec[d];
  double cos = dot / (va->norm * vb->norm);
  if (cos > 1.0) cos = 1.0;
  return cos >= tau && cos > 0 ? cos : 0.0;
}

MatchResult s2match_score(const TripleSet &gold, const TripleSet &pred,
                          const EmbeddingTable &table, const S2Config &cfg) {
  ConceptSimilarity sim = [&table, tau = cfg.tau](const std::string &x,
                                                  const std::string &y) {
    return concept_similarity(x, y, table, tau);
  };
  return align_score(gold, pred, sim, cfg.grade_top, cfg.search);
}

MatchResult s2match_brute_force(const TripleSet &gold, const TripleSet &pred,
                                const EmbeddingTable &table, const S2Config &cfg) {
  ConceptSimilarity sim = [&table, tau = cfg.tau](const std::string &x,
                                                  const std::string &y) {
    return concept_similarity(x, y, table, tau);
  };
  return brute_force_score(gold, pred, sim, cfg.grade_top);
}

MatchResult corpus_s2match(const std::vector<TripleSet> &gold,
                           const std::vector<TripleSet> &pred,
                           const EmbeddingTable &table, const S2Config &cfg,
                           int jobs) {
  return corpus_score(
      gold, pred,
      [&table, &cfg](const TripleSet &g, const TripleSet &p) {
        return s2match_score(g, p, table, cfg);
      },
      jobs);
}

}  // namespace xamr
