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

#include "segaug/segmenter.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "segaug/errors.hpp"

namespace segaug {

std::vector<Span> split_segments(const Sentence& s) {
  const int n = static_cast<int>(s.tokens.size());
  std::vector<Span> raw;
  int start = 0;
  for (int i = 0; i < n; ++i) {
    if (s.tokens[i].is_delimiter) {
      raw.push_back({start, i + 1});
      start = i + 1;
    }
  }
  if (start < n) raw.push_back({start, n});

  // Merge segments with no non-delimiter content into the preceding one
  // (into the following one when nothing precedes).
  std::vector<Span> out;
  bool carry = false;
  int carry_start = 0;
  for (const Span& span : raw) {
    bool has_content = false;
    for (int i = span.start; i < span.end; ++i) {
      if (!s.tokens[i].is_delimiter) {
        has_content = true;
        break;
      }
    }
    if (has_content) {
      Span merged = span;
      if (carry) {
        merged.start = carry_start;
        carry = false;
      }
      out.push_back(merged);
    } else if (!out.empty()) {
      out.back().end = span.end;
    } else if (!carry) {
      carry = true;
      carry_start = span.start;
    }
  }
  if (carry && out.empty() && n > 0) {
    out.push_back({carry_start, n});  // sentence of delimiters only
  }
  return out;
}

bool is_long(const Sentence& s, int min_segments) {
  return static_cast<int>(split_segments(s).size()) >= min_segments;
}

bool pair_is_long(const ParallelPair& pair, int min_segments) {
  return is_long(pair.source, min_segments) &&
         is_long(pair.target, min_segments);
}

namespace {

int find_segment(const std::vector<Span>& spans, int token_index) {
  for (std::size_t k = 0; k < spans.size(); ++k) {
    if (token_index >= spans[k].start && token_index < spans[k].end) {
      return static_cast<int>(k);
    }
  }
  return -1;
}

}  // namespace

SegmentAlignmentMatrix::SegmentAlignmentMatrix(std::vector<Span> src_segments,
                                               std::vector<Span> tgt_segments,
                                               const WordAlignment& wa,
                                               double theta,
                                               RateDenominator denom)
    : src_segments_(std::move(src_segments)),
      tgt_segments_(std::move(tgt_segments)),
      theta_(theta) {
  const std::size_t ns = src_segments_.size();
  const std::size_t nt = tgt_segments_.size();
  const int src_len = ns == 0 ? 0 : src_segments_.back().end;
  const int tgt_len = nt == 0 ? 0 : tgt_segments_.back().end;
  src_counts_.assign(ns, std::vector<int>(nt, 0));
  tgt_counts_.assign(ns, std::vector<int>(nt, 0));
  src_denoms_.assign(ns, 0);
  tgt_denoms_.assign(nt, 0);

  // Per-token link targets, bucketed by opposite-side segment.
  std::vector<std::vector<bool>> src_hits(src_len,
                                          std::vector<bool>(nt, false));
  std::vector<std::vector<bool>> tgt_hits(tgt_len,
                                          std::vector<bool>(ns, false));
  for (const auto& [si, ti] : wa.links) {
    if (si < 0 || si >= src_len || ti < 0 || ti >= tgt_len) {
      std::ostringstream msg;
      msg << "alignment link " << si << "-" << ti
          << " out of range for sentence pair of lengths " << src_len << "/"
          << tgt_len;
      throw IoError(msg.str());
    }
    const int j = find_segment(tgt_segments_, ti);
    const int i = find_segment(src_segments_, si);
    src_hits[si][j] = true;
    tgt_hits[ti][i] = true;
  }

  // Each token counts once per opposite segment it links into.
  for (std::size_t i = 0; i < ns; ++i) {
    int aligned = 0;
    for (int tok = src_segments_[i].start; tok < src_segments_[i].end; ++tok) {
      bool any = false;
      for (std::size_t j = 0; j < nt; ++j) {
        if (src_hits[tok][j]) {
          ++src_counts_[i][j];
          any = true;
        }
      }
      if (any) ++aligned;
    }
    src_denoms_[i] = denom == RateDenominator::kAlignedTokens
                         ? aligned
                         : src_segments_[i].size();
  }
  for (std::size_t j = 0; j < nt; ++j) {
    int aligned = 0;
    for (int tok = tgt_segments_[j].start; tok < tgt_segments_[j].end; ++tok) {
      bool any = false;
      for (std::size_t i = 0; i < ns; ++i) {
        if (tgt_hits[tok][i]) {
          ++tgt_counts_[i][j];
          any = true;
        }
      }
      if (any) ++aligned;
    }
    tgt_denoms_[j] = denom == RateDenominator::kAlignedTokens
                         ? aligned
                         : tgt_segments_[j].size();
  }
}

double SegmentAlignmentMatrix::src_rate(int i, int j) const {
  const int denom = src_denoms_[i];
  if (denom <= 0) return 0.0;
  return static_cast<double>(src_counts_[i][j]) / denom;
}

double SegmentAlignmentMatrix::tgt_rate(int i, int j) const {
  const int denom = tgt_denoms_[j];
  if (denom <= 0) return 0.0;
  return static_cast<double>(tgt_counts_[i][j]) / denom;
}

std::set<std::pair<int, int>> infer_directional(
    const SegmentAlignmentMatrix& m, InferDirection dir) {
  std::set<std::pair<int, int>> out;
  for (std::size_t i = 0; i < m.source_segments(); ++i) {
    for (std::size_t j = 0; j < m.target_segments(); ++j) {
      const int ii = static_cast<int>(i);
      const int jj = static_cast<int>(j);
      if (dir == InferDirection::kSrcToTgt) {
        if (m.src_link_count(ii, jj) >= 1 && m.src_rate(ii, jj) >= m.theta()) {
          out.insert({ii, jj});
        }
      } else {
        if (m.tgt_link_count(ii, jj) >= 1 && m.tgt_rate(ii, jj) >= m.theta()) {
          out.insert({ii, jj});
        }
      }
    }
  }
  return out;
}

namespace {

std::vector<Token> slice_tokens(const Sentence& s, const Span& span) {
  return {s.tokens.begin() + span.start, s.tokens.begin() + span.end};
}

}  // namespace

std::vector<PartialPair> combine_one_to_one(
    const std::set<std::pair<int, int>>& fwd,
    const std::set<std::pair<int, int>>& rev, const Sentence& src,
    const std::vector<Span>& src_segments, const Sentence& tgt,
    const std::vector<Span>& tgt_segments) {
  const int ns = static_cast<int>(src_segments.size());
  const int nt = static_cast<int>(tgt_segments.size());

  // Union-find over source nodes [0, ns) and target nodes [ns, ns+nt).
  std::vector<int> parent(ns + nt);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  auto unite = [&](int a, int b) { parent[find(a)] = find(b); };
  for (const auto& [i, j] : fwd) unite(i, ns + j);
  for (const auto& [i, j] : rev) unite(i, ns + j);

  struct Component {
    std::vector<int> src_idx, tgt_idx;
  };
  std::map<int, Component> components;
  for (const auto& edges : {fwd, rev}) {
    for (const auto& [i, j] : edges) {
      auto& c = components[find(i)];
      c.src_idx.push_back(i);
      c.tgt_idx.push_back(j);
    }
  }

  std::vector<PartialPair> out;
  for (auto& [root, comp] : components) {
    auto dedupe = [](std::vector<int>& v) {
      std::sort(v.begin(), v.end());
      v.erase(std::unique(v.begin(), v.end()), v.end());
    };
    dedupe(comp.src_idx);
    dedupe(comp.tgt_idx);
    const bool src_contig =
        comp.src_idx.back() - comp.src_idx.front() + 1 ==
        static_cast<int>(comp.src_idx.size());
    const bool tgt_contig =
        comp.tgt_idx.back() - comp.tgt_idx.front() + 1 ==
        static_cast<int>(comp.tgt_idx.size());
    if (!src_contig || !tgt_contig) continue;

    PartialPair pp;
    pp.source_group = {comp.src_idx.front(), comp.src_idx.back() + 1};
    pp.target_group = {comp.tgt_idx.front(), comp.tgt_idx.back() + 1};
    pp.source_span = {src_segments[pp.source_group.start].start,
                      src_segments[pp.source_group.end - 1].end};
    pp.target_span = {tgt_segments[pp.target_group.start].start,
                      tgt_segments[pp.target_group.end - 1].end};
    pp.source_tokens = slice_tokens(src, pp.source_span);
    pp.target_tokens = slice_tokens(tgt, pp.target_span);
    out.push_back(std::move(pp));
  }
  std::sort(out.begin(), out.end(),
            [](const PartialPair& a, const PartialPair& b) {
              return a.source_span.start < b.source_span.start;
            });
  return out;
}

std::vector<PartialPair> extract_partials(const ParallelPair& pair,
                                          const WordAlignment& wa,
                                          const SegmenterOptions& opts) {
  const auto src_segments = split_segments(pair.source);
  const auto tgt_segments = split_segments(pair.target);
  if (static_cast<int>(src_segments.size()) < opts.min_segments ||
      static_cast<int>(tgt_segments.size()) < opts.min_segments) {
    return {};
  }
  SegmentAlignmentMatrix m(src_segments, tgt_segments, wa, opts.theta,
                           opts.rate_denominator);
  const auto fwd = infer_directional(m, InferDirection::kSrcToTgt);
  const auto rev = infer_directional(m, InferDirection::kTgtToSrc);
  auto partials = combine_one_to_one(fwd, rev, pair.source, src_segments,
                                     pair.target, tgt_segments);
  for (auto& pp : partials) pp.origin_id = pair.id;
  return partials;
}

std::vector<std::vector<PartialPair>> extract_all_serial(
    const Corpus& corpus, const std::vector<WordAlignment>& alignments,
    const SegmenterOptions& opts) {
  if (alignments.size() != corpus.size()) {
    throw InternalError("alignment count does not match corpus size");
  }
  std::vector<std::vector<PartialPair>> out(corpus.size());
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    out[i] = extract_partials(corpus.pairs[i], alignments[i], opts);
  }
  return out;
}

std::vector<std::vector<PartialPair>> extract_all(
    const Corpus& corpus, const std::vector<WordAlignment>& alignments,
    const SegmenterOptions& opts, int threads) {
  if (alignments.size() != corpus.size()) {
    throw InternalError("alignment count does not match corpus size");
  }
  std::vector<std::vector<PartialPair>> out(corpus.size());
#ifdef _OPENMP
  const int n_threads = threads > 0 ? threads : omp_get_max_threads();
  #pragma omp parallel for schedule(static) num_threads(n_threads)
#endif
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    out[i] = extract_partials(corpus.pairs[i], alignments[i], opts);
  }
  return out;
}

}  // namespace segaug
