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

#include "segaug/backtranslate.hpp"

#include <fcntl.h>
#include <signal.h>
#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>

#include "httplib.h"
#include "json.hpp"

#include "segaug/errors.hpp"
#include "segaug/utf8.hpp"

namespace segaug {

namespace {

std::string detokenize(const TokenSeq& tokens, const std::string& joiner) {
  std::string out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i > 0) out += joiner;
    out += tokens[i];
  }
  return out;
}

TokenSeq split_whitespace(const std::string& line) {
  TokenSeq out;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) out.push_back(std::move(tok));
  return out;
}

TokenSeq retokenize(const std::string& line, Retokenize mode) {
  if (mode == Retokenize::kCodepoints) {
    TokenSeq out;
    for (auto& cp : utf8::codepoints(line)) {
      std::size_t i = 0;
      if (!utf8::is_space(utf8::decode_at(cp, i))) out.push_back(std::move(cp));
    }
    return out;
  }
  return split_whitespace(line);
}

class MockIdentityTranslator : public Translator {
 public:
  TranslationBatchResult translate_batch(
      const std::vector<TokenSeq>& inputs) override {
    TranslationBatchResult result;
    result.outputs.assign(inputs.begin(), inputs.end());
    return result;
  }
};

class MockDictionaryTranslator : public Translator {
 public:
  explicit MockDictionaryTranslator(std::map<std::string, std::string> dict)
      : dict_(std::move(dict)) {}

  TranslationBatchResult translate_batch(
      const std::vector<TokenSeq>& inputs) override {
    TranslationBatchResult result;
    result.outputs.reserve(inputs.size());
    for (const auto& seq : inputs) {
      TokenSeq mapped;
      mapped.reserve(seq.size());
      for (const auto& tok : seq) {
        auto it = dict_.find(tok);
        mapped.push_back(it == dict_.end() ? tok : it->second);
      }
      result.outputs.emplace_back(std::move(mapped));
    }
    return result;
  }

 private:
  std::map<std::string, std::string> dict_;
};

// Removes its batch scratch files on scope exit.
struct TempFiles {
  std::filesystem::path in_path, out_path;

  TempFiles() {
    static std::atomic<std::uint64_t> counter{0};
    const auto dir = std::filesystem::temp_directory_path();
    std::ostringstream stem;
    stem << "segaug-bt-" << ::getpid() << "-" << counter++;
    in_path = dir / (stem.str() + ".in");
    out_path = dir / (stem.str() + ".out");
  }
  ~TempFiles() {
    std::error_code ec;
    std::filesystem::remove(in_path, ec);
    std::filesystem::remove(out_path, ec);
  }
};

class ExternalCommandTranslator : public Translator {
 public:
  explicit ExternalCommandTranslator(TranslatorSpec spec)
      : spec_(std::move(spec)) {
    if (spec_.endpoint.empty()) {
      throw TranslatorError("external command is empty");
    }
  }

  TranslationBatchResult translate_batch(
      const std::vector<TokenSeq>& inputs) override {
    TempFiles files;
    {
      std::ofstream in(files.in_path, std::ios::binary);
      for (const auto& seq : inputs) {
        in << detokenize(seq, spec_.target_joiner) << '\n';
      }
      if (!in.flush()) {
        throw std::runtime_error("process spawn error: cannot stage input");
      }
    }
    run_child(files);

    std::ifstream out(files.out_path, std::ios::binary);
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(out, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      lines.push_back(std::move(line));
    }
    if (lines.size() != inputs.size()) {
      std::ostringstream msg;
      msg << "line count mismatch: command produced " << lines.size()
          << " lines for " << inputs.size() << " inputs";
      throw std::runtime_error(msg.str());
    }
    TranslationBatchResult result;
    result.outputs.resize(inputs.size());
    for (std::size_t i = 0; i < lines.size(); ++i) {
      TokenSeq toks = retokenize(lines[i], spec_.retokenize);
      if (toks.empty()) {
        result.failures.push_back({i, "empty translation"});
      } else {
        result.outputs[i] = std::move(toks);
      }
    }
    return result;
  }

 private:
  void run_child(const TempFiles& files) const {
    const pid_t pid = ::fork();
    if (pid < 0) {
      throw std::runtime_error("process spawn error: fork failed");
    }
    if (pid == 0) {
      const int fd_in = ::open(files.in_path.c_str(), O_RDONLY);
      const int fd_out =
          ::open(files.out_path.c_str(), O_WRONLY | O_CREAT | O_TRUNC, 0600);
      if (fd_in < 0 || fd_out < 0) ::_exit(126);
      ::dup2(fd_in, STDIN_FILENO);
      ::dup2(fd_out, STDOUT_FILENO);
      ::execl("/bin/sh", "sh", "-c", spec_.endpoint.c_str(),
              static_cast<char*>(nullptr));
      ::_exit(127);
    }
    const auto deadline =
        std::chrono::steady_clock::now() +
        std::chrono::duration_cast<std::chrono::steady_clock::duration>(
            std::chrono::duration<double>(spec_.timeout_seconds));
    int status = 0;
    for (;;) {
      const pid_t done = ::waitpid(pid, &status, WNOHANG);
      if (done == pid) break;
      if (std::chrono::steady_clock::now() >= deadline) {
        ::kill(pid, SIGKILL);
        ::waitpid(pid, &status, 0);
        std::ostringstream msg;
        msg << "process timed out after " << spec_.timeout_seconds << "s";
        throw std::runtime_error(msg.str());
      }
      std::this_thread::sleep_for(std::chrono::milliseconds(2));
    }
    if (WIFSIGNALED(status)) {
      throw std::runtime_error("process killed by signal " +
                               std::to_string(WTERMSIG(status)));
    }
    const int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    if (code == 127) {
      throw std::runtime_error("process spawn error: command not found");
    }
    if (code == 126) {
      throw std::runtime_error("process spawn error: cannot redirect stdio");
    }
    if (code != 0) {
      throw std::runtime_error("process exited with status " +
                               std::to_string(code));
    }
  }

  TranslatorSpec spec_;
};

struct ParsedUrl {
  std::string scheme_host;  // e.g. http://localhost:8080
  std::string path;         // e.g. /translate
};

ParsedUrl parse_url(const std::string& url) {
  const auto scheme_end = url.find("://");
  if (scheme_end == std::string::npos) {
    throw TranslatorError("malformed URL '" + url + "'");
  }
  const auto path_start = url.find('/', scheme_end + 3);
  ParsedUrl out;
  if (path_start == std::string::npos) {
    out.scheme_host = url;
    out.path = "/";
  } else {
    out.scheme_host = url.substr(0, path_start);
    out.path = url.substr(path_start);
  }
  if (out.scheme_host.size() <= scheme_end + 3) {
    throw TranslatorError("malformed URL '" + url + "': missing host");
  }
  return out;
}

class HttpTranslator : public Translator {
 public:
  explicit HttpTranslator(TranslatorSpec spec)
      : spec_(std::move(spec)), url_(parse_url(spec_.endpoint)) {}

  bool concurrent_safe() const override { return true; }

  TranslationBatchResult translate_batch(
      const std::vector<TokenSeq>& inputs) override {
    nlohmann::json request;
    auto& texts = request["texts"];
    texts = nlohmann::json::array();
    for (const auto& seq : inputs) {
      texts.push_back(detokenize(seq, spec_.target_joiner));
    }

    // one client per call so concurrent batches never share a connection
    httplib::Client client(url_.scheme_host);
    const auto secs = static_cast<time_t>(spec_.timeout_seconds);
    const auto usecs = static_cast<time_t>(
        (spec_.timeout_seconds - static_cast<double>(secs)) * 1e6);
    client.set_connection_timeout(secs, usecs);
    client.set_read_timeout(secs, usecs);
    client.set_write_timeout(secs, usecs);

    auto res = client.Post(url_.path, request.dump(), "application/json");
    if (!res) {
      throw std::runtime_error("http error: " + httplib::to_string(res.error()));
    }
    if (res->status != 200) {
      throw std::runtime_error("http error: status " +
                               std::to_string(res->status));
    }
    nlohmann::json response = nlohmann::json::parse(res->body, nullptr,
                                                    /*allow_exceptions=*/false);
    if (response.is_discarded() || !response.contains("translations") ||
        !response["translations"].is_array()) {
      throw std::runtime_error("http error: response is not a translations object");
    }
    const auto& translations = response["translations"];
    if (translations.size() != inputs.size()) {
      std::ostringstream msg;
      msg << "shape mismatch: " << translations.size()
          << " translations for " << inputs.size() << " texts";
      throw std::runtime_error(msg.str());
    }
    TranslationBatchResult result;
    result.outputs.resize(inputs.size());
    for (std::size_t i = 0; i < inputs.size(); ++i) {
      if (!translations[i].is_string()) {
        result.failures.push_back({i, "translation is not a string"});
        continue;
      }
      TokenSeq toks =
          retokenize(translations[i].get<std::string>(), spec_.retokenize);
      if (toks.empty()) {
        result.failures.push_back({i, "empty translation"});
      } else {
        result.outputs[i] = std::move(toks);
      }
    }
    return result;
  }

 private:
  TranslatorSpec spec_;
  ParsedUrl url_;
};

std::map<std::string, std::string> load_dictionary(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw TranslatorError("cannot open dictionary file '" + path + "'");
  }
  std::map<std::string, std::string> dict;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    auto sep = line.find('\t');
    if (sep == std::string::npos) sep = line.find(' ');
    if (sep == std::string::npos) {
      std::ostringstream msg;
      msg << "dictionary line " << line_no << " has no separator: '" << line
          << "'";
      throw TranslatorError(msg.str());
    }
    dict[line.substr(0, sep)] = line.substr(sep + 1);
  }
  return dict;
}

}  // namespace

TranslatorSpec TranslatorSpec::parse(const std::string& flag_value) {
  TranslatorSpec spec;
  if (flag_value == "mock-identity") {
    spec.kind = TranslatorKind::kMockIdentity;
  } else if (flag_value.rfind("mock-dict:", 0) == 0) {
    spec.kind = TranslatorKind::kMockDictionary;
    spec.endpoint = flag_value.substr(10);
  } else if (flag_value.rfind("cmd:", 0) == 0) {
    spec.kind = TranslatorKind::kExternalCommand;
    spec.endpoint = flag_value.substr(4);
  } else if (flag_value.rfind("http:", 0) == 0) {
    spec.kind = TranslatorKind::kHttpService;
    // http:URL where URL itself starts with http:// or https://
    spec.endpoint = flag_value.substr(5);
    if (spec.endpoint.rfind("//", 0) == 0) {
      spec.endpoint = flag_value;  // the whole value was already a URL
    }
  } else {
    throw ConfigError("unknown translator spec '" + flag_value + "'");
  }
  return spec;
}

std::unique_ptr<Translator> make_translator(const TranslatorSpec& spec) {
  switch (spec.kind) {
    case TranslatorKind::kMockIdentity:
      return std::make_unique<MockIdentityTranslator>();
    case TranslatorKind::kMockDictionary: {
      auto dict = spec.dictionary;
      if (dict.empty() && !spec.endpoint.empty()) {
        dict = load_dictionary(spec.endpoint);
      }
      return std::make_unique<MockDictionaryTranslator>(std::move(dict));
    }
    case TranslatorKind::kExternalCommand:
      return std::make_unique<ExternalCommandTranslator>(spec);
    case TranslatorKind::kHttpService:
      return std::make_unique<HttpTranslator>(spec);
  }
  throw ConfigError("unknown translator kind");
}

BacktranslationService::BacktranslationService(
    std::unique_ptr<Translator> translator, const TranslatorSpec& spec,
    bool cache_enabled)
    : translator_(std::move(translator)),
      batch_size_(spec.batch_size),
      retries_(spec.retries),
      cache_enabled_(cache_enabled),
      concurrency_(spec.http_concurrency) {
  if (batch_size_ < 1) throw ConfigError("batch size must be >= 1");
  if (spec.timeout_seconds <= 0) throw ConfigError("timeout must be > 0");
}

TranslationBatchResult BacktranslationService::backtranslate(
    const std::vector<TokenSeq>& partials) {
  TranslationBatchResult result;
  result.outputs.resize(partials.size());

  // Group identical inputs so each distinct partial is translated once,
  // keyed in first-appearance order for determinism.
  std::vector<const TokenSeq*> todo;           // distinct inputs to translate
  std::vector<std::vector<std::size_t>> fans;  // indices served by todo[k]
  std::map<TokenSeq, std::size_t> seen;
  for (std::size_t i = 0; i < partials.size(); ++i) {
    if (cache_enabled_) {
      auto hit = cache_.find(partials[i]);
      if (hit != cache_.end()) {
        result.outputs[i] = hit->second;
        ++cache_hits_;
        continue;
      }
      auto [it, inserted] = seen.try_emplace(partials[i], todo.size());
      if (!inserted) {
        fans[it->second].push_back(i);
        ++cache_hits_;
        continue;
      }
    }
    todo.push_back(&partials[i]);
    fans.push_back({i});
  }

  // Cut into batches.
  struct Batch {
    std::size_t first = 0;  // offset into todo
    std::vector<TokenSeq> inputs;
    TranslationBatchResult result;
    std::string error;  // batch-level failure after retries
  };
  std::vector<Batch> batches;
  for (std::size_t off = 0; off < todo.size();
       off += static_cast<std::size_t>(batch_size_)) {
    Batch b;
    b.first = off;
    const std::size_t end =
        std::min(todo.size(), off + static_cast<std::size_t>(batch_size_));
    for (std::size_t k = off; k < end; ++k) b.inputs.push_back(*todo[k]);
    batches.push_back(std::move(b));
  }

  auto run_batch = [&](Batch& b) {
    for (int attempt = 0; attempt <= retries_; ++attempt) {
      try {
        b.result = translator_->translate_batch(b.inputs);
        b.error.clear();
        return;
      } catch (const std::exception& e) {
        b.error = e.what();
      }
    }
  };

  if (concurrency_ > 1 && translator_->concurrent_safe() && batches.size() > 1) {
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (;;) {
        const std::size_t k = next.fetch_add(1);
        if (k >= batches.size()) return;
        run_batch(batches[k]);
      }
    };
    std::vector<std::thread> pool;
    const std::size_t n_workers = std::min<std::size_t>(
        static_cast<std::size_t>(concurrency_), batches.size());
    pool.reserve(n_workers);
    for (std::size_t w = 0; w < n_workers; ++w) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  } else {
    for (auto& b : batches) run_batch(b);
  }

  // Reassemble in input order.
  for (const auto& b : batches) {
    for (std::size_t k = 0; k < b.inputs.size(); ++k) {
      const std::size_t todo_idx = b.first + k;
      std::optional<TokenSeq> translated;
      std::string reason = b.error;
      if (reason.empty()) {
        if (b.result.outputs[k].has_value()) {
          translated = b.result.outputs[k];
        } else {
          for (const auto& f : b.result.failures) {
            if (f.index == k) {
              reason = f.reason;
              break;
            }
          }
          if (reason.empty()) reason = "missing translation";
        }
      }
      if (translated.has_value() && cache_enabled_) {
        cache_[*todo[todo_idx]] = *translated;
      }
      for (const std::size_t input_idx : fans[todo_idx]) {
        if (translated.has_value()) {
          result.outputs[input_idx] = *translated;
        } else {
          result.failures.push_back({input_idx, reason});
        }
      }
    }
  }
  std::sort(result.failures.begin(), result.failures.end(),
            [](const BatchFailure& a, const BatchFailure& b) {
              return a.index < b.index;
            });
  return result;
}

}  // namespace segaug
