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

#ifndef SEGAUG_REPORT_HPP
#define SEGAUG_REPORT_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "segaug/corpus_types.hpp"

namespace segaug {

// Per-pair generation outcome, kept for count-law checks.
struct PairOutcome {
  std::int64_t pair_id = 0;
  bool is_long = false;
  std::int64_t partials_extracted = 0;
  std::int64_t pseudo_attempted = 0;
  std::int64_t pseudo_emitted = 0;
  std::int64_t duplicates_dropped = 0;
  std::int64_t failures = 0;
};

struct AugmentationReport {
  std::string mode;  // empty for plain corpus stats

  // corpus shape
  std::int64_t total_pairs = 0;
  std::map<std::string, std::int64_t> by_provenance;
  std::int64_t long_pairs = 0;
  double mean_source_tokens = 0.0;
  double mean_target_tokens = 0.0;

  // generation accounting
  std::int64_t originals = 0;
  std::int64_t partial_pairs_extracted = 0;
  std::int64_t partials_backtranslated = 0;
  std::int64_t pseudo_attempted = 0;
  std::int64_t pseudo_pairs_emitted = 0;
  std::int64_t duplicates_dropped = 0;
  std::int64_t failures = 0;
  std::int64_t copied_duplicates = 0;

  std::vector<PairOutcome> per_pair;

  // Stable key order, no volatile fields; two identical runs serialize
  // byte-identically.
  std::string to_json(bool include_per_pair = false) const;
};

// Counts by provenance plus sentence-length means; long pairs are those
// whose both sides split into at least `min_segments` segments. Assumes
// delimiters are marked.
AugmentationReport corpus_stats(const Corpus& corpus, int min_segments = 2);

}  // namespace segaug

#endif  // SEGAUG_REPORT_HPP
