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

#ifndef SEGAUG_AUGMENT_HPP
#define SEGAUG_AUGMENT_HPP

#include <optional>
#include <string>
#include <vector>

#include "segaug/backtranslate.hpp"
#include "segaug/corpus_io.hpp"
#include "segaug/corpus_types.hpp"
#include "segaug/model1.hpp"
#include "segaug/report.hpp"
#include "segaug/segmenter.hpp"

namespace segaug {

enum class AugmentationMode {
  kBaseline,
  kCopied,
  kPartial,
  kBackTranslation,
  kProposed,
};

AugmentationMode parse_mode(const std::string& name);
const char* mode_name(AugmentationMode mode);

struct PseudoPair {
  std::int64_t origin_id = 0;
  PartialPair replaced_group;
  Sentence source;  // origin source with the group span substituted
  Sentence target;  // copied verbatim from the origin
};

// Builds the pseudo-source by replacing the tokens of the partial's source
// span with `bt_source`; a trailing delimiter token of the span stays in
// place. Throws InternalError when the partial does not belong to the pair.
PseudoPair make_pseudo(const ParallelPair& pair, const PartialPair& partial,
                       const std::vector<Token>& bt_source);

enum class TokenizeMode { kPreTokenized, kWhitespace, kChars };

struct AugmentConfig {
  DelimiterSet delims = DelimiterSet::standard();
  TokenizeMode tokenize = TokenizeMode::kPreTokenized;
  SegmenterOptions segmenter;
  TranslatorSpec translator;
  bool cache_enabled = true;
  bool keep_duplicates = false;
  Model1Options model1;
  SymmetrizationHeuristic heuristic = SymmetrizationHeuristic::kGrowDiagFinal;
  WriteOptions write;
  int threads = 0;
};

struct ModeResult {
  Corpus corpus;
  AugmentationReport report;
};

// Runs one augmentation mode over a tokenized, delimiter-marked corpus with
// precomputed word alignments (one per pair). Originals come first in
// input order, generated pairs after in (origin id, group) order.
ModeResult run_mode(const Corpus& corpus,
                    const std::vector<WordAlignment>& alignments,
                    AugmentationMode mode, const AugmentConfig& cfg);

struct PipelineConfig {
  std::string source_path;
  std::string target_path;
  std::string source_lang = "src";
  std::string target_lang = "tgt";
  // Pharaoh alignment file; when absent the built-in aligner is trained.
  std::optional<std::string> alignment_path;
  std::vector<AugmentationMode> modes = {AugmentationMode::kProposed};
  std::string out_prefix = "out/";
  std::optional<std::string> report_path;
  bool report_per_pair = false;
  // Persist extracted partials and the alignments actually used.
  std::optional<std::string> save_align_path;
  AugmentConfig augment;
};

// read -> tokenize -> align (ingest or train) -> extract -> back-translate
// -> generate -> write, once per requested mode. Output files are
// <out_prefix><mode>.src / .tgt. Returns one report per mode.
std::vector<AugmentationReport> run_pipeline(const PipelineConfig& cfg);

}  // namespace segaug

#endif  // SEGAUG_AUGMENT_HPP
