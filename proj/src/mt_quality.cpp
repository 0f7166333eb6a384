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

#include "xamr/mt_quality.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <unordered_map>

#include "xamr/error.hpp"

namespace xamr {

std::vector<std::string> tokenize(std::string_view text) {
  static const std::string kDetach = ".,!?;:\"()";
  std::string spaced;
  spaced.reserve(text.size() + 8);
  for (char c : text) {
    if (kDetach.find(c) != std::string::npos) {
      spaced.push_back(' ');
      spaced.push_back(c);
      spaced.push_back(' ');
    } else {
      spaced.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    }
  }
  std::vector<std::string> tokens;
  std::istringstream in(spaced);
  std::string tok;
  while (in >> tok) tokens.push_back(tok);
  return tokens;
}

namespace {

std::string ngram_key(const std::vector<std::string> &tokens, size_t start, int n) {
  std::string key;
  for (int i = 0; i < n; ++i) {
    if (i) key.push_back('\x1f');
    key += tokens[start + i];
  }
  return key;
}

}  // namespace

double corpus_bleu(const std::vector<SentencePair> &pairs, int max_n) {
  if (pairs.empty()) throw DataError("corpus_bleu: empty corpus");
  if (max_n < 1) throw DataError("corpus_bleu: max_n must be >= 1");

  std::vector<double> clipped(max_n, 0.0), total(max_n, 0.0);
  double hyp_len = 0, ref_len = 0;
  for (const SentencePair &pair : pairs) {
    hyp_len += static_cast<double>(pair.hypothesis.size());
    ref_len += static_cast<double>(pair.reference.size());
    for (int n = 1; n <= max_n; ++n) {
      if (pair.hypothesis.size() < static_cast<size_t>(n)) continue;
      std::unordered_map<std::string, int> hyp_counts, ref_counts;
      for (size_t i = 0; i + n <= pair.hypothesis.size(); ++i)
        hyp_counts[ngram_key(pair.hypothesis, i, n)]++;
      for (size_t i = 0; i + n <= pair.reference.size(); ++i)
        ref_counts[ngram_key(pair.reference, i, n)]++;
      for (const auto &[key, count] : hyp_counts) {
        total[n - 1] += count;
        auto it = ref_counts.find(key);
        if (it != ref_counts.end()) clipped[n - 1] += std::min(count, it->second);
      }
    }
  }
  if (hyp_len == 0) throw DataError("corpus_bleu: empty hypothesis corpus");

  // Orders with no hypothesis n-grams anywhere are unavailable; truncate
  // the geometric mean to the rest.
  double log_sum = 0;
  int orders = 0;
  for (int n = 1; n <= max_n; ++n) {
    if (total[n - 1] == 0) continue;
    ++orders;
    if (clipped[n - 1] == 0) return 0.0;
    log_sum += std::log(clipped[n - 1] / total[n - 1]);
  }
  if (orders == 0) return 0.0;

  double brevity = hyp_len <= ref_len ? std::exp(1.0 - ref_len / hyp_len) : 1.0;
  return brevity * std::exp(log_sum / orders);
}

SentenceEmbeddings load_sentence_embeddings(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open sentence embedding file: " + path);
  SentenceEmbeddings table;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream fields(line);
    std::vector<double> row;
    std::string field;
    while (fields >> field) {
      char *end = nullptr;
      double value = std::strtod(field.c_str(), &end);
      if (end != field.c_str() + field.size())
        throw DataError("sentence embedding line " + std::to_string(lineno) +
                        ": unparseable value '" + field + "'");
      row.push_back(value);
    }
    if (row.empty()) continue;
    if (table.dimension == 0)
      table.dimension = static_cast<int>(row.size());
    else if (static_cast<int>(row.size()) != table.dimension)
      throw DataError("sentence embedding line " + std::to_string(lineno) +
                      ": dimension " + std::to_string(row.size()) + " != " +
                      std::to_string(table.dimension));
    table.rows.push_back(std::move(row));
  }
  return table;
}

CosineReport embedding_cosine_report(const SentenceEmbeddings &hyp,
                                     const SentenceEmbeddings &ref) {
  if (hyp.rows.size() != ref.rows.size())
    throw DataError("embedding count mismatch: " + std::to_string(hyp.rows.size()) +
                    " vs " + std::to_string(ref.rows.size()));
  if (hyp.rows.empty()) throw DataError("embedding files are empty");
  if (hyp.dimension != ref.dimension)
    throw DataError("embedding dimension mismatch: " + std::to_string(hyp.dimension) +
                    " vs " + std::to_string(ref.dimension));

  std::vector<double> cosines;
  cosines.reserve(hyp.rows.size());
  for (size_t i = 0; i < hyp.rows.size(); ++i) {
    double dot = 0, na = 0, nb = 0;
    for (int d = 0; d < hyp.dimension; ++d) {
      dot += hyp.rows[i][d] * ref.rows[i][d];
      na += hyp.rows[i][d] * hyp.rows[i][d];
      nb += ref.rows[i][d] * ref.rows[i][d];
    }
    cosines.push_back(na > 0 && nb > 0 ? dot / (std::sqrt(na) * std::sqrt(nb)) : 0.0);
  }

  CosineReport report;
  report.count = cosines.size();
  for (double c : cosines) report.mean += c;
  report.mean /= static_cast<double>(cosines.size());
  double var = 0;
  for (double c : cosines) var += (c - report.mean) * (c - report.mean);
  report.stdev = std::sqrt(var / static_cast<double>(cosines.size()));
  return report;
}

}  // namespace xamr
