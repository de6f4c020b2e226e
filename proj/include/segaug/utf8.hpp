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

#ifndef SEGAUG_UTF8_HPP
#define SEGAUG_UTF8_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace segaug {
namespace utf8 {

// Byte offset of the first invalid UTF-8 sequence, or npos if the whole
// buffer is valid. Rejects overlong encodings, surrogates and code points
// beyond U+10FFFF.
std::size_t first_invalid(std::string_view text);

inline bool is_valid(std::string_view text) {
  return first_invalid(text) == std::string_view::npos;
}

// Decodes the code point starting at byte `pos` of valid UTF-8 and advances
// `pos` past it.
char32_t decode_at(std::string_view text, std::size_t& pos);

// Splits valid UTF-8 into one string per code point.
std::vector<std::string> codepoints(std::string_view text);

// Number of code points in valid UTF-8.
std::size_t length(std::string_view text);

bool is_space(char32_t cp);

}  // namespace utf8
}  // namespace segaug

#endif  // SEGAUG_UTF8_HPP
