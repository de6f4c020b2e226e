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

#ifndef SEGAUG_BACKTRANSLATE_HPP
#define SEGAUG_BACKTRANSLATE_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "segaug/tokenizer.hpp"

namespace segaug {

using TokenSeq = std::vector<std::string>;

enum class TranslatorKind {
  kExternalCommand,
  kHttpService,
  kMockDictionary,
  kMockIdentity,
};

// How external/HTTP client output lines are turned back into tokens.
enum class Retokenize { kWhitespace, kCodepoints };

struct TranslatorSpec {
  TranslatorKind kind = TranslatorKind::kMockIdentity;
  // Shell command line or URL, depending on kind.
  std::string endpoint;
  std::map<std::string, std::string> dictionary;
  int batch_size = 32;
  double timeout_seconds = 30.0;
  int retries = 1;            // extra attempts per failed batch
  int http_concurrency = 1;   // batches in flight against an HTTP service
  // Joiner used to detokenize target partials before an external client,
  // and how the client's output lines are turned back into tokens.
  std::string target_joiner = " ";
  Retokenize retokenize = Retokenize::kWhitespace;

  // Parses the --translator CLI syntax:
  //   cmd:CMDLINE | http:URL | mock-identity | mock-dict:FILE
  // where FILE holds TSV `word \t replacement` rows.
  static TranslatorSpec parse(const std::string& flag_value);
};

struct BatchFailure {
  std::size_t index = 0;
  std::string reason;
};

// Every input index appears exactly once: either outputs[i] holds a value
// or i is listed in failures.
struct TranslationBatchResult {
  std::vector<std::optional<TokenSeq>> outputs;
  std::vector<BatchFailure> failures;

  bool all_ok() const { return failures.empty(); }
};

// One back-translation client. Implementations preserve input order.
class Translator {
 public:
  virtual ~Translator() = default;
  virtual TranslationBatchResult translate_batch(
      const std::vector<TokenSeq>& inputs) = 0;
};

// Throws TranslatorError when the spec itself is unusable (unknown kind,
// bad URL, unreadable dictionary, empty command). Runtime failures are
// reported per batch, never thrown.
std::unique_ptr<Translator> make_translator(const TranslatorSpec& spec);

// Splits inputs into batches of spec.batch_size, retries failed batches,
// and memoizes identical inputs so each distinct partial is translated
// once. Results are reassembled in input order.
class BacktranslationService {
 public:
  BacktranslationService(std::unique_ptr<Translator> translator,
                         const TranslatorSpec& spec, bool cache_enabled = true);

  TranslationBatchResult backtranslate(const std::vector<TokenSeq>& partials);

  std::size_t cache_hits() const { return cache_hits_; }
  std::size_t cache_size() const { return cache_.size(); }

 private:
  std::unique_ptr<Translator> translator_;
  int batch_size_;
  int retries_;
  bool cache_enabled_;
  std::map<TokenSeq, TokenSeq> cache_;
  std::size_t cache_hits_ = 0;
};

}  // namespace segaug

#endif  // SEGAUG_BACKTRANSLATE_HPP
