// Copyright 2026 The eccmat authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ECCMAT_FORMATS_HPP
#define ECCMAT_FORMATS_HPP

#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include <eccmat/graph.hpp>

namespace eccmat {

// ---------------------------------------------------------------------------
// graph6 (the ASCII format used by nauty/geng).
// ---------------------------------------------------------------------------

inline std::string graph6_encode(const graph& g) {
  const int n = g.num_vertices();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back('~');
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  } else {
    throw graph_error("graph6_encode: graph too large");
  }
  int bits = 0, nbits = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      bits = (bits << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++nbits == 6) {
        out.push_back(static_cast<char>(bits + 63));
        bits = 0;
        nbits = 0;
      }
    }
  if (nbits > 0) out.push_back(static_cast<char>((bits << (6 - nbits)) + 63));
  return out;
}

inline graph graph6_decode(const std::string& s) {
  for (char ch : s)
    if (ch < 63 || ch > 126) throw graph_error("graph6_decode: invalid character");
  std::size_t pos = 0;
  long n;
  if (s.empty()) throw graph_error("graph6_decode: empty string");
  if (s[0] != '~') {
    n = s[0] - 63;
    pos = 1;
  } else {
    if (s.size() < 4 || s[1] == '~') throw graph_error("graph6_decode: unsupported size header");
    n = (static_cast<long>(s[1] - 63) << 12) | (static_cast<long>(s[2] - 63) << 6) | (s[3] - 63);
    pos = 4;
  }
  if (n <= 0) throw graph_error("graph6_decode: vertex count must be positive");
  const long nbits = n * (n - 1) / 2;
  if (static_cast<long>(s.size() - pos) != (nbits + 5) / 6)
    throw graph_error("graph6_decode: wrong length for " + std::to_string(n) + " vertices");
  graph g(static_cast<int>(n));
  long bit = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++bit) {
      int byte = s[pos + bit / 6] - 63;
      if ((byte >> (5 - bit % 6)) & 1) g.add_edge(i, j);
    }
  return g;
}

// ---------------------------------------------------------------------------
// Plain edge-list text: '#' comments, first data line is the vertex count,
// each following data line one "u v" pair (0-based).
// ---------------------------------------------------------------------------

inline graph read_edge_list(std::istream& in) {
  std::string line;
  int n = -1;
  std::vector<std::pair<int, int>> edges;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    if (n < 0) {
      if (ls >> n) {
        int extra;
        if (ls >> extra) throw graph_error("edge list: vertex-count line has trailing data");
      } else if (!line.empty() && line.find_first_not_of(" \t\r") != std::string::npos) {
        throw graph_error("edge list: line " + std::to_string(lineno) + " is not a vertex count");
      }
      continue;
    }
    int u, v;
    if (ls >> u) {
      if (!(ls >> v)) throw graph_error("edge list: line " + std::to_string(lineno) + " needs two endpoints");
      int extra;
      if (ls >> extra) throw graph_error("edge list: line " + std::to_string(lineno) + " has trailing data");
      edges.emplace_back(u, v);
    }
  }
  if (n < 0) throw graph_error("edge list: missing vertex count");
  return graph(n, edges);
}

inline graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  return read_edge_list(in);
}

inline nlohmann::json graph_to_json(const graph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (auto [u, v] : g.edge_list()) edges.push_back(nlohmann::json::array({u, v}));
  return nlohmann::json{{"n", g.num_vertices()}, {"edges", std::move(edges)}};
}

}  // namespace eccmat

#endif  // ECCMAT_FORMATS_HPP
