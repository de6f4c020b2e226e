// Copyright 2026 The segaug Authors
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

#ifndef SEGAUG_MODEL1_HPP
#define SEGAUG_MODEL1_HPP

#include <string>
#include <unordered_map>
#include <vector>

#include "segaug/alignment.hpp"
#include "segaug/corpus_types.hpp"

namespace segaug {

// Which side conditions the lexical probabilities.
enum class Direction {
  kTgtGivenSrc,  // t(target word | source word)
  kSrcGivenTgt,  // t(source word | target word)
};

// Spelling of the empty word in serialized tables.
inline constexpr const char* kNullWord = "<NULL>";

// IBM Model 1 lexical table t(f|e) where e ranges over the conditioning
// vocabulary plus NULL. Every conditional distribution sums to 1.
class TranslationTable {
 public:
  TranslationTable() = default;

  Direction direction() const { return direction_; }

  // Probability t(f|e); 0 for pairs that never co-occurred. `e` may be
  // kNullWord. An f unseen in training yields 0, except t(f|NULL) which
  // gets a fixed 1e-12 floor so unknown words align to NULL.
  double prob(const std::string& f, const std::string& e) const;

  // Overwrites one conditional distribution (mainly for tests and for
  // loading serialized tables).
  void set_distribution(const std::string& e,
                        const std::vector<std::pair<std::string, double>>& fs);

  // Corpus log-likelihood before each EM iteration; history[k] is the
  // likelihood of the table after k iterations.
  const std::vector<double>& log_likelihood_history() const {
    return ll_history_;
  }

  // TSV rows `e \t f \t prob`, sorted by (e, f); NULL spelled <NULL>.
  void save_tsv(const std::string& path) const;
  static TranslationTable load_tsv(const std::string& path, Direction dir);

  // Largest |sum - 1| over all conditional distributions.
  double max_normalization_error() const;

  struct Stats {
    std::size_t conditioning_words = 0;
    std::size_t entries = 0;
  };
  Stats stats() const;

 private:
  friend class Model1Trainer;

  Direction direction_ = Direction::kTgtGivenSrc;
  // probs_[e][f]; e == kNullWord holds the NULL distribution.
  std::unordered_map<std::string, std::unordered_map<std::string, double>>
      probs_;
  std::vector<double> ll_history_;
};

struct Model1Options {
  int iterations = 5;
  // 0 = use the OpenMP default; ignored by the serial reference.
  int threads = 0;
};

// Exact EM: uniform initialization over co-occurring pairs (plus NULL),
// then `iterations` full E/M sweeps. Throws IoError on an empty corpus.
//
// The OpenMP version shards the E-step over the corpus and merges the
// expected counts by summation; it matches the serial reference up to
// floating-point summation order.
TranslationTable train_model1(const Corpus& corpus, Direction dir,
                              const Model1Options& opts = {});
TranslationTable train_model1_serial(const Corpus& corpus, Direction dir,
                                     const Model1Options& opts = {});

// Links each dependent-side token to its argmax conditioning token, in
// (source index, target index) orientation regardless of direction. NULL
// and ties resolve as if NULL sat at index 0 and words at 1..n: the
// smaller index wins, so NULL wins any tie and produces no link.
WordAlignment viterbi_align(const ParallelPair& pair,
                            const TranslationTable& table, Direction dir);

std::vector<WordAlignment> viterbi_align_corpus(const Corpus& corpus,
                                                const TranslationTable& table,
                                                Direction dir,
                                                int threads = 0);

// Trains both directions and symmetrizes per-pair Viterbi alignments.
std::vector<WordAlignment> train_and_align(const Corpus& corpus,
                                           const Model1Options& opts,
                                           SymmetrizationHeuristic h);

}  // namespace segaug

#endif  // SEGAUG_MODEL1_HPP
