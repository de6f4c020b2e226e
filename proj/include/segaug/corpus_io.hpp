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

#ifndef SEGAUG_CORPUS_IO_HPP
#define SEGAUG_CORPUS_IO_HPP

#include <string>

#include "segaug/corpus_types.hpp"
#include "segaug/tokenizer.hpp"

namespace segaug {

struct ReadOptions {
  // When true, lines are whitespace-split and delimiters marked; otherwise
  // each line becomes one raw pseudo-token to be tokenized later.
  bool pre_tokenized = true;
  DelimiterSet delims = DelimiterSet::standard();
};

// Reads two line-aligned UTF-8 files. Line i of each file becomes pair i
// (ids 0..n-1, provenance Original). Throws IoError on mismatched line
// counts, invalid UTF-8 (reported with byte offset) or blank lines
// (reported with 1-based line number).
Corpus read_parallel(const std::string& source_path,
                     const std::string& target_path,
                     const std::string& source_lang,
                     const std::string& target_lang,
                     const ReadOptions& opts = {});

// Single-file variant: `source TAB target` per line.
Corpus read_parallel_tsv(const std::string& path,
                         const std::string& source_lang,
                         const std::string& target_lang,
                         const ReadOptions& opts = {});

struct WriteOptions {
  // Joiner between tokens, per side. Empty string produces unsegmented
  // output for CJK.
  std::string source_joiner = " ";
  std::string target_joiner = " ";
};

// One line per pair; a read_parallel round trip with space joiners
// reproduces the token texts exactly.
void write_parallel(const Corpus& corpus, const std::string& source_path,
                    const std::string& target_path,
                    const WriteOptions& opts = {});

std::string join_tokens(const std::vector<Token>& tokens,
                        const std::string& joiner);

}  // namespace segaug

#endif  // SEGAUG_CORPUS_IO_HPP
