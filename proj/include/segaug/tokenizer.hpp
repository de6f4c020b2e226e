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

#ifndef SEGAUG_TOKENIZER_HPP
#define SEGAUG_TOKENIZER_HPP

#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "segaug/corpus_types.hpp"

namespace segaug {

// Punctuation strings that mark intra-sentence segment boundaries.
// Sentence-final punctuation is intentionally absent: a trailing full stop
// would produce an empty final segment.
class DelimiterSet {
 public:
  // ASCII plus CJK fullwidth forms.
  static DelimiterSet standard();

  // Each delimiter must be a single code point; throws ConfigError otherwise.
  explicit DelimiterSet(std::set<std::string> delimiters);

  bool contains(std::string_view text) const {
    return delimiters_.count(std::string(text)) > 0;
  }
  const std::set<std::string>& strings() const { return delimiters_; }

  // Parses the --delims CLI syntax: comma-separated code points, with
  // "\," standing for the comma itself.
  static DelimiterSet parse(std::string_view flag_value);

 private:
  std::set<std::string> delimiters_;
};

// Splits on whitespace runs; delimiter code points become their own tokens
// wherever they occur. Throws IoError("empty input") on whitespace-only text.
std::vector<Token> tokenize_whitespace(std::string_view raw,
                                       const DelimiterSet& delims);

// One token per code point, whitespace dropped.
std::vector<Token> tokenize_chars(std::string_view raw,
                                  const DelimiterSet& delims);

// Splits on whitespace only, keeping pre-tokenized tokens intact.
std::vector<Token> tokenize_pretokenized(std::string_view raw,
                                         const DelimiterSet& delims);

// Recomputes is_delimiter on every token; text is never changed. Idempotent.
std::vector<Token> mark_delimiters(std::vector<Token> tokens,
                                   const DelimiterSet& delims);

}  // namespace segaug

#endif  // SEGAUG_TOKENIZER_HPP
