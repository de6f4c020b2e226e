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

#include "segaug/tokenizer.hpp"

#include <utility>

#include "segaug/errors.hpp"
#include "segaug/utf8.hpp"

namespace segaug {

DelimiterSet DelimiterSet::standard() {
  return DelimiterSet({",", ";", ":", "、", "，", "；", "："});
}

DelimiterSet::DelimiterSet(std::set<std::string> delimiters)
    : delimiters_(std::move(delimiters)) {
  if (delimiters_.empty()) {
    throw ConfigError("delimiter set must not be empty");
  }
  for (const auto& d : delimiters_) {
    if (!utf8::is_valid(d) || utf8::length(d) != 1) {
      throw ConfigError("delimiter '" + d + "' is not a single code point");
    }
  }
}

DelimiterSet DelimiterSet::parse(std::string_view flag_value) {
  std::set<std::string> out;
  std::string cur;
  for (std::size_t i = 0; i < flag_value.size(); ++i) {
    char c = flag_value[i];
    if (c == '\\' && i + 1 < flag_value.size() && flag_value[i + 1] == ',') {
      cur.push_back(',');
      ++i;
    } else if (c == ',') {
      if (!cur.empty()) out.insert(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) out.insert(cur);
  return DelimiterSet(std::move(out));
}

namespace {

void require_nonblank(std::string_view raw) {
  std::size_t i = 0;
  while (i < raw.size()) {
    if (!utf8::is_space(utf8::decode_at(raw, i))) return;
  }
  throw IoError("empty input: text is blank after trimming");
}

}  // namespace

std::vector<Token> tokenize_whitespace(std::string_view raw,
                                       const DelimiterSet& delims) {
  require_nonblank(raw);
  std::vector<Token> out;
  std::string cur;
  std::size_t i = 0;
  auto flush = [&] {
    if (!cur.empty()) {
      out.push_back({cur, false});
      cur.clear();
    }
  };
  while (i < raw.size()) {
    const std::size_t start = i;
    const char32_t cp = utf8::decode_at(raw, i);
    const std::string_view piece = raw.substr(start, i - start);
    if (utf8::is_space(cp)) {
      flush();
    } else if (delims.contains(piece)) {
      flush();
      out.push_back({std::string(piece), true});
    } else {
      cur.append(piece);
    }
  }
  flush();
  return out;
}

std::vector<Token> tokenize_chars(std::string_view raw,
                                  const DelimiterSet& delims) {
  require_nonblank(raw);
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < raw.size()) {
    const std::size_t start = i;
    const char32_t cp = utf8::decode_at(raw, i);
    if (utf8::is_space(cp)) continue;
    std::string piece(raw.substr(start, i - start));
    const bool is_delim = delims.contains(piece);
    out.push_back({std::move(piece), is_delim});
  }
  return out;
}

std::vector<Token> tokenize_pretokenized(std::string_view raw,
                                         const DelimiterSet& delims) {
  require_nonblank(raw);
  std::vector<Token> out;
  std::string cur;
  std::size_t i = 0;
  auto flush = [&] {
    if (!cur.empty()) {
      const bool is_delim = delims.contains(cur);
      out.push_back({std::move(cur), is_delim});
      cur.clear();
    }
  };
  while (i < raw.size()) {
    const std::size_t start = i;
    const char32_t cp = utf8::decode_at(raw, i);
    if (utf8::is_space(cp)) {
      flush();
    } else {
      cur.append(raw.substr(start, i - start));
    }
  }
  flush();
  return out;
}

std::vector<Token> mark_delimiters(std::vector<Token> tokens,
                                   const DelimiterSet& delims) {
  for (auto& t : tokens) {
    t.is_delimiter = delims.contains(t.text);
  }
  return tokens;
}

}  // namespace segaug
