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

#include "segaug/model1.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <tuple>
#include <unordered_set>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "segaug/errors.hpp"

namespace segaug {

namespace {

constexpr double kOovNullFloor = 1e-12;

// Corpus interned to integer ids. Conditioning id 0 is NULL; real words
// start at 1. Dependent ids start at 0.
struct EncodedCorpus {
  std::vector<std::vector<int>> cond;  // per pair, without the NULL slot
  std::vector<std::vector<int>> dep;
  std::vector<std::string> cond_words;  // cond_words[0] == kNullWord
  std::vector<std::string> dep_words;
};

EncodedCorpus encode(const Corpus& corpus, Direction dir) {
  EncodedCorpus enc;
  enc.cond_words.push_back(kNullWord);
  std::unordered_map<std::string, int> cond_ids, dep_ids;
  auto cond_id = [&](const std::string& w) {
    auto [it, inserted] = cond_ids.try_emplace(w, enc.cond_words.size());
    if (inserted) enc.cond_words.push_back(w);
    return it->second;
  };
  auto dep_id = [&](const std::string& w) {
    auto [it, inserted] = dep_ids.try_emplace(w, enc.dep_words.size());
    if (inserted) enc.dep_words.push_back(w);
    return it->second;
  };
  enc.cond.reserve(corpus.size());
  enc.dep.reserve(corpus.size());
  for (const auto& pair : corpus.pairs) {
    const auto& cond_sent =
        dir == Direction::kTgtGivenSrc ? pair.source : pair.target;
    const auto& dep_sent =
        dir == Direction::kTgtGivenSrc ? pair.target : pair.source;
    std::vector<int> c, d;
    c.reserve(cond_sent.tokens.size());
    d.reserve(dep_sent.tokens.size());
    for (const auto& t : cond_sent.tokens) c.push_back(cond_id(t.text));
    for (const auto& t : dep_sent.tokens) d.push_back(dep_id(t.text));
    enc.cond.push_back(std::move(c));
    enc.dep.push_back(std::move(d));
  }
  return enc;
}

using ProbRows = std::vector<std::unordered_map<int, double>>;

// t0(f|e) = 1 / |{f' co-occurring with e}|, NULL co-occurring with all.
ProbRows uniform_init(const EncodedCorpus& enc) {
  std::vector<std::unordered_set<int>> cooc(enc.cond_words.size());
  for (std::size_t p = 0; p < enc.cond.size(); ++p) {
    for (int f : enc.dep[p]) {
      cooc[0].insert(f);
      for (int e : enc.cond[p]) cooc[e].insert(f);
    }
  }
  ProbRows t(enc.cond_words.size());
  for (std::size_t e = 0; e < cooc.size(); ++e) {
    if (cooc[e].empty()) continue;
    const double p = 1.0 / static_cast<double>(cooc[e].size());
    t[e].reserve(cooc[e].size());
    for (int f : cooc[e]) t[e].emplace(f, p);
  }
  return t;
}

double lookup(const ProbRows& t, int e, int f) {
  const auto& row = t[e];
  auto it = row.find(f);
  return it == row.end() ? 0.0 : it->second;
}

struct CountRows {
  ProbRows counts;
  std::vector<double> totals;

  explicit CountRows(std::size_t cond_size)
      : counts(cond_size), totals(cond_size, 0.0) {}

  void add(int e, int f, double c) {
    counts[e][f] += c;
    totals[e] += c;
  }
};

// Expected counts from one pair under the current table; returns the
// pair's log-likelihood contribution.
double accumulate_pair(const std::vector<int>& cond,
                       const std::vector<int>& dep, const ProbRows& t,
                       CountRows& acc) {
  double ll = 0.0;
  const double len_norm = std::log(static_cast<double>(cond.size()) + 1.0);
  for (int f : dep) {
    double denom = lookup(t, 0, f);
    for (int e : cond) denom += lookup(t, e, f);
    ll += std::log(denom) - len_norm;
    acc.add(0, f, lookup(t, 0, f) / denom);
    for (int e : cond) acc.add(e, f, lookup(t, e, f) / denom);
  }
  return ll;
}

void mstep(const CountRows& acc, ProbRows& t) {
  for (std::size_t e = 0; e < t.size(); ++e) {
    const double total = acc.totals[e];
    if (total <= 0.0) continue;
    for (auto& [f, p] : t[e]) {
      auto it = acc.counts[e].find(f);
      p = it == acc.counts[e].end() ? 0.0 : it->second / total;
    }
  }
}

TranslationTable finish(const EncodedCorpus& enc, const ProbRows& t,
                        Direction dir, std::vector<double> ll_history);

TranslationTable em_train(const Corpus& corpus, Direction dir,
                          const Model1Options& opts, bool parallel) {
  if (corpus.empty()) {
    throw IoError("cannot train an aligner on an empty corpus");
  }
  if (opts.iterations < 1) {
    throw ConfigError("EM iteration count must be >= 1");
  }
  const EncodedCorpus enc = encode(corpus, dir);
  ProbRows t = uniform_init(enc);
  const std::size_t n_pairs = enc.cond.size();
  const std::size_t cond_size = enc.cond_words.size();
  std::vector<double> ll_history;

  for (int iter = 0; iter < opts.iterations; ++iter) {
    double ll = 0.0;
    CountRows merged(cond_size);
    if (!parallel) {
      for (std::size_t p = 0; p < n_pairs; ++p) {
        ll += accumulate_pair(enc.cond[p], enc.dep[p], t, merged);
      }
    } else {
#ifdef _OPENMP
      int n_threads = opts.threads > 0 ? opts.threads : omp_get_max_threads();
      std::vector<CountRows> locals;
      std::vector<double> local_ll;
      #pragma omp parallel num_threads(n_threads)
      {
        #pragma omp single
        {
          // actual team size may be smaller than requested
          const int team = omp_get_num_threads();
          locals.assign(team, CountRows(cond_size));
          local_ll.assign(team, 0.0);
        }
        const int tid = omp_get_thread_num();
        #pragma omp for schedule(static)
        for (std::size_t p = 0; p < n_pairs; ++p) {
          local_ll[tid] +=
              accumulate_pair(enc.cond[p], enc.dep[p], t, locals[tid]);
        }
      }
      // merge shards in thread order so a fixed thread count is reproducible
      for (std::size_t s = 0; s < locals.size(); ++s) {
        ll += local_ll[s];
        for (std::size_t e = 0; e < cond_size; ++e) {
          merged.totals[e] += locals[s].totals[e];
          for (const auto& [f, c] : locals[s].counts[e]) {
            merged.counts[e][f] += c;
          }
        }
      }
#else
      for (std::size_t p = 0; p < n_pairs; ++p) {
        ll += accumulate_pair(enc.cond[p], enc.dep[p], t, merged);
      }
#endif
    }
    ll_history.push_back(ll);
    mstep(merged, t);
  }
  return finish(enc, t, dir, std::move(ll_history));
}

TranslationTable finish(const EncodedCorpus& enc, const ProbRows& t,
                        Direction dir, std::vector<double> ll_history) {
  TranslationTable table;
  table.direction_ = dir;
  table.ll_history_ = std::move(ll_history);
  for (std::size_t e = 0; e < t.size(); ++e) {
    if (t[e].empty()) continue;
    auto& row = table.probs_[enc.cond_words[e]];
    row.reserve(t[e].size());
    for (const auto& [f, p] : t[e]) {
      row.emplace(enc.dep_words[f], p);
    }
  }
  return table;
}

}  // namespace

double TranslationTable::prob(const std::string& f,
                              const std::string& e) const {
  auto it_e = probs_.find(e);
  if (it_e != probs_.end()) {
    auto it_f = it_e->second.find(f);
    if (it_f != it_e->second.end()) return it_f->second;
  }
  // NULL co-occurs with every dependent word seen in training, so a miss on
  // the NULL row means f is out of vocabulary.
  if (e == kNullWord) return kOovNullFloor;
  return 0.0;
}

void TranslationTable::set_distribution(
    const std::string& e,
    const std::vector<std::pair<std::string, double>>& fs) {
  auto& row = probs_[e];
  row.clear();
  for (const auto& [f, p] : fs) row[f] = p;
}

void TranslationTable::save_tsv(const std::string& path) const {
  std::vector<std::tuple<std::string, std::string, double>> rows;
  for (const auto& [e, dist] : probs_) {
    for (const auto& [f, p] : dist) rows.emplace_back(e, f, p);
  }
  std::sort(rows.begin(), rows.end());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << std::setprecision(17);
  for (const auto& [e, f, p] : rows) {
    out << e << '\t' << f << '\t' << p << '\n';
  }
  if (!out) throw IoError("write failure on '" + path + "'");
}

TranslationTable TranslationTable::load_tsv(const std::string& path,
                                            Direction dir) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open table file '" + path + "'");
  TranslationTable table;
  table.direction_ = dir;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto tab1 = line.find('\t');
    const auto tab2 =
        tab1 == std::string::npos ? std::string::npos : line.find('\t', tab1 + 1);
    if (tab2 == std::string::npos) {
      std::ostringstream msg;
      msg << path << ":" << line_no << ": expected `e \\t f \\t prob`";
      throw IoError(msg.str());
    }
    const std::string e = line.substr(0, tab1);
    const std::string f = line.substr(tab1 + 1, tab2 - tab1 - 1);
    const double p = std::stod(line.substr(tab2 + 1));
    table.probs_[e][f] = p;
  }
  return table;
}

double TranslationTable::max_normalization_error() const {
  double worst = 0.0;
  for (const auto& [e, dist] : probs_) {
    double sum = 0.0;
    for (const auto& [f, p] : dist) sum += p;
    worst = std::max(worst, std::fabs(sum - 1.0));
  }
  return worst;
}

TranslationTable::Stats TranslationTable::stats() const {
  Stats s;
  s.conditioning_words = probs_.size();
  for (const auto& [e, dist] : probs_) s.entries += dist.size();
  return s;
}

TranslationTable train_model1(const Corpus& corpus, Direction dir,
                              const Model1Options& opts) {
  return em_train(corpus, dir, opts, /*parallel=*/true);
}

TranslationTable train_model1_serial(const Corpus& corpus, Direction dir,
                                     const Model1Options& opts) {
  return em_train(corpus, dir, opts, /*parallel=*/false);
}

WordAlignment viterbi_align(const ParallelPair& pair,
                            const TranslationTable& table, Direction dir) {
  const Sentence& cond_sent =
      dir == Direction::kTgtGivenSrc ? pair.source : pair.target;
  const Sentence& dep_sent =
      dir == Direction::kTgtGivenSrc ? pair.target : pair.source;
  WordAlignment out;
  for (std::size_t j = 0; j < dep_sent.tokens.size(); ++j) {
    const std::string& f = dep_sent.tokens[j].text;
    double best = table.prob(f, kNullWord);  // NULL wins ties
    int best_i = -1;
    for (std::size_t i = 0; i < cond_sent.tokens.size(); ++i) {
      const double p = table.prob(f, cond_sent.tokens[i].text);
      if (p > best) {
        best = p;
        best_i = static_cast<int>(i);
      }
    }
    if (best_i < 0) continue;
    if (dir == Direction::kTgtGivenSrc) {
      out.links.insert({best_i, static_cast<int>(j)});
    } else {
      out.links.insert({static_cast<int>(j), best_i});
    }
  }
  return out;
}

std::vector<WordAlignment> viterbi_align_corpus(const Corpus& corpus,
                                                const TranslationTable& table,
                                                Direction dir, int threads) {
  std::vector<WordAlignment> out(corpus.size());
#ifdef _OPENMP
  const int n_threads = threads > 0 ? threads : omp_get_max_threads();
  #pragma omp parallel for schedule(static) num_threads(n_threads)
#endif
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    out[i] = viterbi_align(corpus.pairs[i], table, dir);
  }
  return out;
}

std::vector<WordAlignment> train_and_align(const Corpus& corpus,
                                           const Model1Options& opts,
                                           SymmetrizationHeuristic h) {
  const TranslationTable fwd = train_model1(corpus, Direction::kTgtGivenSrc, opts);
  const TranslationTable rev = train_model1(corpus, Direction::kSrcGivenTgt, opts);
  const auto fwd_links =
      viterbi_align_corpus(corpus, fwd, Direction::kTgtGivenSrc, opts.threads);
  const auto rev_links =
      viterbi_align_corpus(corpus, rev, Direction::kSrcGivenTgt, opts.threads);
  std::vector<WordAlignment> out(corpus.size());
#ifdef _OPENMP
  const int n_threads =
      opts.threads > 0 ? opts.threads : omp_get_max_threads();
  #pragma omp parallel for schedule(static) num_threads(n_threads)
#endif
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    out[i] = symmetrize(fwd_links[i], rev_links[i], h);
  }
  return out;
}

}  // namespace segaug
