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

#include "segaug/utf8.hpp"

namespace segaug {
namespace utf8 {

namespace {

inline bool is_cont(unsigned char c) { return (c & 0xC0) == 0x80; }

}  // namespace

std::size_t first_invalid(std::string_view text) {
  const std::size_t n = text.size();
  std::size_t i = 0;
  while (i < n) {
    const unsigned char c0 = static_cast<unsigned char>(text[i]);
    if (c0 < 0x80) {
      ++i;
      continue;
    }
    if ((c0 & 0xE0) == 0xC0) {
      if (c0 < 0xC2) return i;  // overlong 2-byte form
      if (i + 1 >= n || !is_cont(text[i + 1])) return i;
      i += 2;
      continue;
    }
    if ((c0 & 0xF0) == 0xE0) {
      if (i + 2 >= n || !is_cont(text[i + 1]) || !is_cont(text[i + 2]))
        return i;
      const unsigned char c1 = static_cast<unsigned char>(text[i + 1]);
      if (c0 == 0xE0 && c1 < 0xA0) return i;  // overlong
      if (c0 == 0xED && c1 >= 0xA0) return i; // surrogate
      i += 3;
      continue;
    }
    if ((c0 & 0xF8) == 0xF0) {
      if (c0 > 0xF4) return i;  // beyond U+10FFFF
      if (i + 3 >= n || !is_cont(text[i + 1]) || !is_cont(text[i + 2]) ||
          !is_cont(text[i + 3]))
        return i;
      const unsigned char c1 = static_cast<unsigned char>(text[i + 1]);
      if (c0 == 0xF0 && c1 < 0x90) return i;  // overlong
      if (c0 == 0xF4 && c1 >= 0x90) return i; // beyond U+10FFFF
      i += 4;
      continue;
    }
    return i;
  }
  return std::string_view::npos;
}

char32_t decode_at(std::string_view text, std::size_t& pos) {
  const unsigned char c0 = static_cast<unsigned char>(text[pos]);
  if (c0 < 0x80) {
    ++pos;
    return c0;
  }
  if ((c0 & 0xE0) == 0xC0) {
    char32_t cp = (c0 & 0x1F) << 6 |
                  (static_cast<unsigned char>(text[pos + 1]) & 0x3F);
    pos += 2;
    return cp;
  }
  if ((c0 & 0xF0) == 0xE0) {
    char32_t cp = (c0 & 0x0F) << 12 |
                  (static_cast<unsigned char>(text[pos + 1]) & 0x3F) << 6 |
                  (static_cast<unsigned char>(text[pos + 2]) & 0x3F);
    pos += 3;
    return cp;
  }
  char32_t cp = (c0 & 0x07) << 18 |
                (static_cast<unsigned char>(text[pos + 1]) & 0x3F) << 12 |
                (static_cast<unsigned char>(text[pos + 2]) & 0x3F) << 6 |
                (static_cast<unsigned char>(text[pos + 3]) & 0x3F);
  pos += 4;
  return cp;
}

std::vector<std::string> codepoints(std::string_view text) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < text.size()) {
    std::size_t start = i;
    decode_at(text, i);
    out.emplace_back(text.substr(start, i - start));
  }
  return out;
}

std::size_t length(std::string_view text) {
  std::size_t count = 0;
  std::size_t i = 0;
  while (i < text.size()) {
    decode_at(text, i);
    ++count;
  }
  return count;
}

bool is_space(char32_t cp) {
  switch (cp) {
    case U' ':
    case U'\t':
    case U'\n':
    case U'\r':
    case U'\f':
    case U'\v':
    case U' ':  // no-break space
    case U'　':  // ideographic space
      return true;
    default:
      return false;
  }
}

}  // namespace utf8
}  // namespace segaug
