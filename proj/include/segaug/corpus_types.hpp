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

#ifndef SEGAUG_CORPUS_TYPES_HPP
#define SEGAUG_CORPUS_TYPES_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace segaug {

struct Token {
  std::string text;
  bool is_delimiter = false;

  friend bool operator==(const Token& a, const Token& b) {
    return a.text == b.text && a.is_delimiter == b.is_delimiter;
  }
};

struct Sentence {
  std::vector<Token> tokens;
  std::string lang;

  std::size_t size() const { return tokens.size(); }
};

// Where a pair came from; mirrors the augmentation method labels.
enum class Provenance {
  kOriginal,
  kPartial,
  kPseudo,
  kCopiedDuplicate,
  kBackTranslated,
};

const char* provenance_name(Provenance p);

struct ParallelPair {
  std::int64_t id = 0;
  Sentence source;
  Sentence target;
  Provenance provenance = Provenance::kOriginal;
};

struct Corpus {
  std::vector<ParallelPair> pairs;
  std::string source_lang;
  std::string target_lang;

  std::size_t size() const { return pairs.size(); }
  bool empty() const { return pairs.empty(); }
};

// Token texts side by side, ignoring delimiter flags.
bool same_token_text(const std::vector<Token>& a, const std::vector<Token>& b);

std::vector<std::string> token_texts(const std::vector<Token>& tokens);

}  // namespace segaug

#endif  // SEGAUG_CORPUS_TYPES_HPP
