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

#ifndef SEGAUG_ERRORS_HPP
#define SEGAUG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace segaug {

// Process exit codes, one per error class.
enum class ExitCode : int {
  kOk = 0,
  kConfig = 2,
  kIo = 3,
  kTranslator = 4,
  kInternal = 5,
};

class Error : public std::runtime_error {
 public:
  Error(ExitCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ExitCode code() const noexcept { return code_; }

 private:
  ExitCode code_;
};

class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& what)
      : Error(ExitCode::kConfig, what) {}
};

// Anything wrong with input/output files: missing files, malformed
// content, encoding problems, blank lines, mismatched line counts.
class IoError : public Error {
 public:
  explicit IoError(const std::string& what) : Error(ExitCode::kIo, what) {}
};

class TranslatorError : public Error {
 public:
  explicit TranslatorError(const std::string& what)
      : Error(ExitCode::kTranslator, what) {}
};

class InternalError : public Error {
 public:
  explicit InternalError(const std::string& what)
      : Error(ExitCode::kInternal, what) {}
};

}  // namespace segaug

#endif  // SEGAUG_ERRORS_HPP
