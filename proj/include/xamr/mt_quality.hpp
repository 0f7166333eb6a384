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

#ifndef XAMR_MT_QUALITY_HPP_
#define XAMR_MT_QUALITY_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace xamr {

// Fixed evaluation tokenization: lowercase, detach .,!?;:"() as separate
// tokens, split on whitespace.
std::vector<std::string> tokenize(std::string_view text);

struct SentencePair {
  std::vector<std::string> hypothesis;
  std::vector<std::string> reference;
};

// Corpus BLEU: clipped modified n-gram precisions pooled over the corpus,
// geometric mean over orders 1..max_n, brevity penalty exp(1 - r/c) when
// c <= r. No smoothing; a zero pooled precision zeroes the score. Orders
// with no hypothesis n-grams anywhere in the corpus are dropped from the
// mean (short-hypothesis truncation). Throws DataError when the corpus is
// empty or contains no hypothesis tokens.
double corpus_bleu(const std::vector<SentencePair> &pairs, int max_n = 4);

// Positional sentence-embedding file: one whitespace-separated vector per
// corpus line, uniform dimension, no leading token.
struct SentenceEmbeddings {
  int dimension = 0;
  std::vector<std::vector<double>> rows;
};

SentenceEmbeddings load_sentence_embeddings(const std::string &path);

struct CosineReport {
  double mean = 0.0;
  double stdev = 0.0;  // population standard deviation
  std::size_t count = 0;
};

// Mean and population stdev of per-line cosine similarities. Throws
// DataError on a count or dimension mismatch.
CosineReport embedding_cosine_report(const SentenceEmbeddings &hyp,
                                     const SentenceEmbeddings &ref);

}  // namespace xamr

#endif  // XAMR_MT_QUALITY_HPP_
