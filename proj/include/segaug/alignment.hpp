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

#ifndef SEGAUG_ALIGNMENT_HPP
#define SEGAUG_ALIGNMENT_HPP

#include <set>
#include <string>
#include <utility>
#include <vector>

namespace segaug {

// (source token index, target token index)
using AlignLink = std::pair<int, int>;

struct WordAlignment {
  std::set<AlignLink> links;

  bool empty() const { return links.empty(); }
  bool contains(int s, int t) const { return links.count({s, t}) > 0; }

  friend bool operator==(const WordAlignment& a, const WordAlignment& b) {
    return a.links == b.links;
  }
};

// Parses one Pharaoh line of whitespace-separated "s-t" items (0-based).
// Empty line -> empty alignment. Throws IoError naming the offending item
// and its 1-based position.
WordAlignment parse_pharaoh(const std::string& line);

// Links sorted by (s,t), "s-t" joined by single spaces.
// parse_pharaoh(format_pharaoh(a)) == a.
std::string format_pharaoh(const WordAlignment& a);

// One alignment per line; pairs with no links are blank lines.
std::vector<WordAlignment> read_pharaoh_file(const std::string& path);
void write_pharaoh_file(const std::vector<WordAlignment>& alignments,
                        const std::string& path);

enum class SymmetrizationHeuristic {
  kIntersection,
  kUnion,
  kGrowDiagFinal,
};

SymmetrizationHeuristic parse_heuristic(const std::string& name);
const char* heuristic_name(SymmetrizationHeuristic h);

// Merges two directional alignments given in the same (s,t) orientation.
// Grow-diag-final starts from the intersection, grows along the 8-
// neighborhood into the union while either endpoint is uncovered, then adds
// union links whose source or target word is still unaligned.
WordAlignment symmetrize(const WordAlignment& fwd, const WordAlignment& rev,
                         SymmetrizationHeuristic h);

}  // namespace segaug

#endif  // SEGAUG_ALIGNMENT_HPP
