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

#ifndef SEGAUG_SEGMENTER_HPP
#define SEGAUG_SEGMENTER_HPP

#include <set>
#include <utility>
#include <vector>

#include "segaug/alignment.hpp"
#include "segaug/corpus_types.hpp"

namespace segaug {

// Half-open token index range.
struct Span {
  int start = 0;
  int end = 0;

  int size() const { return end - start; }
  friend bool operator==(const Span& a, const Span& b) {
    return a.start == b.start && a.end == b.end;
  }
};

// Cuts after every delimiter token, keeping the delimiter attached to the
// preceding segment. Segments containing only delimiter tokens are merged
// into the preceding segment (into the following one at the sentence
// start). The spans partition [0, n) in order.
std::vector<Span> split_segments(const Sentence& s);

// A sentence is long when it splits into at least `min_segments` segments.
bool is_long(const Sentence& s, int min_segments = 2);
bool pair_is_long(const ParallelPair& pair, int min_segments = 2);

enum class RateDenominator {
  kAlignedTokens,  // tokens of the segment carrying at least one link
  kAllTokens,      // segment length
};

// Correspondence-rate matrix between source and target segments. Rates are
// counted from both perspectives so that either direction stays in [0,1]:
// src rate (i,j) = |source tokens of s-seg i linked into t-seg j| / denom(i),
// tgt rate (i,j) = |target tokens of t-seg j linked into s-seg i| / denom(j).
// A segment with zero denominator has rate 0 and can never be inferred.
class SegmentAlignmentMatrix {
 public:
  SegmentAlignmentMatrix(std::vector<Span> src_segments,
                         std::vector<Span> tgt_segments,
                         const WordAlignment& wa, double theta,
                         RateDenominator denom = RateDenominator::kAlignedTokens);

  std::size_t source_segments() const { return src_segments_.size(); }
  std::size_t target_segments() const { return tgt_segments_.size(); }
  double theta() const { return theta_; }

  int src_link_count(int i, int j) const { return src_counts_[i][j]; }
  int tgt_link_count(int i, int j) const { return tgt_counts_[i][j]; }
  double src_rate(int i, int j) const;
  double tgt_rate(int i, int j) const;

  const std::vector<Span>& src_spans() const { return src_segments_; }
  const std::vector<Span>& tgt_spans() const { return tgt_segments_; }

 private:
  std::vector<Span> src_segments_;
  std::vector<Span> tgt_segments_;
  std::vector<std::vector<int>> src_counts_;
  std::vector<std::vector<int>> tgt_counts_;
  std::vector<int> src_denoms_;
  std::vector<int> tgt_denoms_;
  double theta_;
};

enum class InferDirection { kSrcToTgt, kTgtToSrc };

// {(i,j) : rate >= theta and at least one counted token}. Both directions
// are returned in (source segment, target segment) orientation.
std::set<std::pair<int, int>> infer_directional(
    const SegmentAlignmentMatrix& m, InferDirection dir);

// One-to-one aligned segment groups extracted from one long pair.
struct PartialPair {
  std::int64_t origin_id = 0;
  // Contiguous segment index ranges, half-open.
  Span source_group;
  Span target_group;
  // Concatenated token spans of the groups.
  Span source_span;  // token range in the origin source sentence
  Span target_span;
  std::vector<Token> source_tokens;
  std::vector<Token> target_tokens;
};

// Takes connected components of fwd ∪ rev over segment indices; a component
// becomes a PartialPair iff both its source and target indices are
// contiguous. Isolated segments and non-contiguous components are dropped.
// Output ordered by source start.
std::vector<PartialPair> combine_one_to_one(
    const std::set<std::pair<int, int>>& fwd,
    const std::set<std::pair<int, int>>& rev, const Sentence& src,
    const std::vector<Span>& src_segments, const Sentence& tgt,
    const std::vector<Span>& tgt_segments);

struct SegmenterOptions {
  double theta = 0.5;
  int min_segments = 2;
  RateDenominator rate_denominator = RateDenominator::kAlignedTokens;
};

// Whole §-pipeline for one pair: split, rate matrix, bidirectional
// inference, concatenation. Empty when either side is not long.
std::vector<PartialPair> extract_partials(const ParallelPair& pair,
                                          const WordAlignment& wa,
                                          const SegmenterOptions& opts = {});

// Corpus-level extraction; the OpenMP version fills per-pair slots so the
// result is identical to the serial reference for any thread count.
std::vector<std::vector<PartialPair>> extract_all(
    const Corpus& corpus, const std::vector<WordAlignment>& alignments,
    const SegmenterOptions& opts = {}, int threads = 0);
std::vector<std::vector<PartialPair>> extract_all_serial(
    const Corpus& corpus, const std::vector<WordAlignment>& alignments,
    const SegmenterOptions& opts = {});

}  // namespace segaug

#endif  // SEGAUG_SEGMENTER_HPP
