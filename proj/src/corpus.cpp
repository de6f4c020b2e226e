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

#include "segaug/corpus_io.hpp"
#include "segaug/corpus_types.hpp"

#include <fstream>
#include <sstream>

#include "segaug/errors.hpp"
#include "segaug/utf8.hpp"

namespace segaug {

const char* provenance_name(Provenance p) {
  switch (p) {
    case Provenance::kOriginal: return "original";
    case Provenance::kPartial: return "partial";
    case Provenance::kPseudo: return "pseudo";
    case Provenance::kCopiedDuplicate: return "copied_duplicate";
    case Provenance::kBackTranslated: return "back_translated";
  }
  return "unknown";
}

bool same_token_text(const std::vector<Token>& a,
                     const std::vector<Token>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].text != b[i].text) return false;
  }
  return true;
}

std::vector<std::string> token_texts(const std::vector<Token>& tokens) {
  std::vector<std::string> out;
  out.reserve(tokens.size());
  for (const auto& t : tokens) out.push_back(t.text);
  return out;
}

namespace {

bool is_blank(std::string_view line) {
  std::size_t i = 0;
  while (i < line.size()) {
    if (!utf8::is_space(utf8::decode_at(line, i))) return false;
  }
  return true;
}

// Reads all lines, validating UTF-8 as it goes. `offset_base` tracks the
// byte position of each line start so encoding errors report an absolute
// file offset.
std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot open '" + path + "' for reading");
  }
  std::vector<std::string> lines;
  std::string line;
  std::size_t offset_base = 0;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const std::size_t bad = utf8::first_invalid(line);
    if (bad != std::string::npos) {
      std::ostringstream msg;
      msg << "invalid UTF-8 in '" << path << "' at byte offset "
          << (offset_base + bad);
      throw IoError(msg.str());
    }
    offset_base += line.size() + 1;
    lines.push_back(std::move(line));
  }
  if (in.bad()) {
    throw IoError("read failure on '" + path + "'");
  }
  return lines;
}

Sentence make_sentence(const std::string& line, const std::string& lang,
                       const ReadOptions& opts, const std::string& path,
                       std::size_t line_no) {
  if (is_blank(line)) {
    std::ostringstream msg;
    msg << "blank line " << line_no << " in '" << path << "'";
    throw IoError(msg.str());
  }
  Sentence s;
  s.lang = lang;
  if (opts.pre_tokenized) {
    s.tokens = tokenize_pretokenized(line, opts.delims);
  } else {
    s.tokens.push_back({line, false});  // raw; tokenized later
  }
  return s;
}

}  // namespace

Corpus read_parallel(const std::string& source_path,
                     const std::string& target_path,
                     const std::string& source_lang,
                     const std::string& target_lang, const ReadOptions& opts) {
  const auto src_lines = read_lines(source_path);
  const auto tgt_lines = read_lines(target_path);
  if (src_lines.size() != tgt_lines.size()) {
    std::ostringstream msg;
    msg << "line count mismatch: '" << source_path << "' has "
        << src_lines.size() << " lines, '" << target_path << "' has "
        << tgt_lines.size();
    throw IoError(msg.str());
  }
  Corpus corpus;
  corpus.source_lang = source_lang;
  corpus.target_lang = target_lang;
  corpus.pairs.reserve(src_lines.size());
  for (std::size_t i = 0; i < src_lines.size(); ++i) {
    ParallelPair pair;
    pair.id = static_cast<std::int64_t>(i);
    pair.source = make_sentence(src_lines[i], source_lang, opts, source_path,
                                i + 1);
    pair.target = make_sentence(tgt_lines[i], target_lang, opts, target_path,
                                i + 1);
    pair.provenance = Provenance::kOriginal;
    corpus.pairs.push_back(std::move(pair));
  }
  return corpus;
}

Corpus read_parallel_tsv(const std::string& path,
                         const std::string& source_lang,
                         const std::string& target_lang,
                         const ReadOptions& opts) {
  const auto lines = read_lines(path);
  Corpus corpus;
  corpus.source_lang = source_lang;
  corpus.target_lang = target_lang;
  corpus.pairs.reserve(lines.size());
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const auto tab = lines[i].find('\t');
    if (tab == std::string::npos) {
      std::ostringstream msg;
      msg << "line " << (i + 1) << " of '" << path << "' has no TAB";
      throw IoError(msg.str());
    }
    ParallelPair pair;
    pair.id = static_cast<std::int64_t>(i);
    pair.source =
        make_sentence(lines[i].substr(0, tab), source_lang, opts, path, i + 1);
    pair.target =
        make_sentence(lines[i].substr(tab + 1), target_lang, opts, path, i + 1);
    pair.provenance = Provenance::kOriginal;
    corpus.pairs.push_back(std::move(pair));
  }
  return corpus;
}

std::string join_tokens(const std::vector<Token>& tokens,
                        const std::string& joiner) {
  std::string out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i > 0) out += joiner;
    out += tokens[i].text;
  }
  return out;
}

void write_parallel(const Corpus& corpus, const std::string& source_path,
                    const std::string& target_path, const WriteOptions& opts) {
  if (corpus.empty()) {
    throw IoError("refusing to write an empty corpus");
  }
  std::ofstream src(source_path, std::ios::binary);
  std::ofstream tgt(target_path, std::ios::binary);
  if (!src) throw IoError("cannot open '" + source_path + "' for writing");
  if (!tgt) throw IoError("cannot open '" + target_path + "' for writing");
  for (const auto& pair : corpus.pairs) {
    src << join_tokens(pair.source.tokens, opts.source_joiner) << '\n';
    tgt << join_tokens(pair.target.tokens, opts.target_joiner) << '\n';
  }
  src.flush();
  tgt.flush();
  if (!src || !tgt) {
    throw IoError("write failure on corpus output files");
  }
}

}  // namespace segaug
