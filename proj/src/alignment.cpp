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

#include "segaug/alignment.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "segaug/errors.hpp"

namespace segaug {

namespace {

bool parse_link_item(const std::string& item, int& s, int& t) {
  const auto dash = item.find('-');
  if (dash == std::string::npos || dash == 0 || dash + 1 == item.size()) {
    return false;
  }
  for (std::size_t i = 0; i < item.size(); ++i) {
    if (i == dash) continue;
    if (!std::isdigit(static_cast<unsigned char>(item[i]))) return false;
  }
  s = std::stoi(item.substr(0, dash));
  t = std::stoi(item.substr(dash + 1));
  return true;
}

}  // namespace

WordAlignment parse_pharaoh(const std::string& line) {
  WordAlignment a;
  std::istringstream in(line);
  std::string item;
  int position = 0;
  while (in >> item) {
    ++position;
    int s = 0, t = 0;
    if (!parse_link_item(item, s, t)) {
      std::ostringstream msg;
      msg << "malformed alignment link '" << item << "' at item " << position;
      throw IoError(msg.str());
    }
    a.links.insert({s, t});
  }
  return a;
}

std::string format_pharaoh(const WordAlignment& a) {
  std::string out;
  for (const auto& [s, t] : a.links) {  // std::set iterates in (s,t) order
    if (!out.empty()) out += ' ';
    out += std::to_string(s);
    out += '-';
    out += std::to_string(t);
  }
  return out;
}

std::vector<WordAlignment> read_pharaoh_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot open alignment file '" + path + "'");
  }
  std::vector<WordAlignment> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    try {
      out.push_back(parse_pharaoh(line));
    } catch (const IoError& e) {
      std::ostringstream msg;
      msg << path << ":" << line_no << ": " << e.what();
      throw IoError(msg.str());
    }
  }
  return out;
}

void write_pharaoh_file(const std::vector<WordAlignment>& alignments,
                        const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw IoError("cannot open '" + path + "' for writing");
  }
  for (const auto& a : alignments) {
    out << format_pharaoh(a) << '\n';
  }
  if (!out) throw IoError("write failure on '" + path + "'");
}

SymmetrizationHeuristic parse_heuristic(const std::string& name) {
  if (name == "intersection") return SymmetrizationHeuristic::kIntersection;
  if (name == "union") return SymmetrizationHeuristic::kUnion;
  if (name == "grow-diag-final")
    return SymmetrizationHeuristic::kGrowDiagFinal;
  throw ConfigError("unknown symmetrization heuristic '" + name + "'");
}

const char* heuristic_name(SymmetrizationHeuristic h) {
  switch (h) {
    case SymmetrizationHeuristic::kIntersection: return "intersection";
    case SymmetrizationHeuristic::kUnion: return "union";
    case SymmetrizationHeuristic::kGrowDiagFinal: return "grow-diag-final";
  }
  return "unknown";
}

namespace {

WordAlignment intersect(const WordAlignment& a, const WordAlignment& b) {
  WordAlignment out;
  std::set_intersection(a.links.begin(), a.links.end(), b.links.begin(),
                        b.links.end(),
                        std::inserter(out.links, out.links.begin()));
  return out;
}

WordAlignment unite(const WordAlignment& a, const WordAlignment& b) {
  WordAlignment out = a;
  out.links.insert(b.links.begin(), b.links.end());
  return out;
}

WordAlignment grow_diag_final(const WordAlignment& fwd,
                              const WordAlignment& rev) {
  const WordAlignment all = unite(fwd, rev);
  WordAlignment result = intersect(fwd, rev);

  std::set<int> src_covered, tgt_covered;
  for (const auto& [s, t] : result.links) {
    src_covered.insert(s);
    tgt_covered.insert(t);
  }

  // grow: repeatedly admit union links neighboring a current link while one
  // of their endpoints is still uncovered
  static const int kNeigh[8][2] = {{-1, -1}, {-1, 0}, {-1, 1}, {0, -1},
                                   {0, 1},   {1, -1}, {1, 0},  {1, 1}};
  bool grew = true;
  while (grew) {
    grew = false;
    // snapshot so the sweep order is well defined
    const std::set<AlignLink> current = result.links;
    for (const auto& [s, t] : current) {
      for (const auto& d : kNeigh) {
        const AlignLink cand{s + d[0], t + d[1]};
        if (!all.links.count(cand)) continue;
        if (result.links.count(cand)) continue;
        if (src_covered.count(cand.first) && tgt_covered.count(cand.second))
          continue;
        result.links.insert(cand);
        src_covered.insert(cand.first);
        tgt_covered.insert(cand.second);
        grew = true;
      }
    }
  }

  // final: any remaining union link with an unaligned source or target word
  for (const auto& link : all.links) {
    if (result.links.count(link)) continue;
    if (!src_covered.count(link.first) || !tgt_covered.count(link.second)) {
      result.links.insert(link);
      src_covered.insert(link.first);
      tgt_covered.insert(link.second);
    }
  }
  return result;
}

}  // namespace

WordAlignment symmetrize(const WordAlignment& fwd, const WordAlignment& rev,
                         SymmetrizationHeuristic h) {
  switch (h) {
    case SymmetrizationHeuristic::kIntersection: return intersect(fwd, rev);
    case SymmetrizationHeuristic::kUnion: return unite(fwd, rev);
    case SymmetrizationHeuristic::kGrowDiagFinal:
      return grow_diag_final(fwd, rev);
  }
  throw InternalError("unreachable symmetrization heuristic");
}

}  // namespace segaug
