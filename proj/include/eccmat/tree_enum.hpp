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

#ifndef ECCMAT_TREE_ENUM_HPP
#define ECCMAT_TREE_ENUM_HPP

#include <cstdint>
#include <stdexcept>
#include <vector>

#include <eccmat/graph.hpp>

namespace eccmat {

/// Largest vertex count the exhaustive tree machinery is designed for.
constexpr int kMaxTreeEnumVertices = 16;

/// Edge set of one labeled tree, fixed-size so enumeration never allocates.
struct labeled_tree {
  int n = 0;
  int u[kMaxTreeEnumVertices - 1] = {};
  int v[kMaxTreeEnumVertices - 1] = {};
};

/// Number of labeled trees on n vertices: n^(n-2) (Cayley).
inline std::uint64_t labeled_tree_count(int n) {
  if (n < 1) throw std::invalid_argument("labeled_tree_count: n must be positive");
  if (n <= 2) return 1;
  std::uint64_t c = 1;
  for (int i = 0; i < n - 2; ++i) c *= static_cast<std::uint64_t>(n);
  return c;
}

namespace detail {

/// Linear-time Pruefer decode into a fixed edge buffer.
inline void decode_pruefer(const int* seq, int n, labeled_tree& out) {
  int degree[kMaxTreeEnumVertices];
  for (int i = 0; i < n; ++i) degree[i] = 1;
  for (int k = 0; k < n - 2; ++k) ++degree[seq[k]];

  out.n = n;
  int ptr = 0;
  while (degree[ptr] != 1) ++ptr;
  int leaf = ptr;
  for (int k = 0; k < n - 2; ++k) {
    const int s = seq[k];
    out.u[k] = leaf;
    out.v[k] = s;
    if (--degree[s] == 1 && s < ptr) {
      leaf = s;
    } else {
      ++ptr;
      while (degree[ptr] != 1) ++ptr;
      leaf = ptr;
    }
  }
  out.u[n - 2] = leaf;
  out.v[n - 2] = n - 1;
}

}  // namespace detail

inline graph tree_from_pruefer(const std::vector<int>& seq) {
  const int n = static_cast<int>(seq.size()) + 2;
  if (n > kMaxTreeEnumVertices) throw std::invalid_argument("tree_from_pruefer: sequence too long");
  for (int s : seq)
    if (s < 0 || s >= n) throw std::invalid_argument("tree_from_pruefer: symbol out of range");
  labeled_tree t;
  detail::decode_pruefer(seq.data(), n, t);
  graph g(n);
  for (int k = 0; k < n - 1; ++k) g.add_edge(t.u[k], t.v[k]);
  return g;
}

/// The enumeration is split into independent chunks (by the first Pruefer
/// symbol) so sweeps can run chunks on worker threads and still merge results
/// in a fixed order.
inline int num_tree_chunks(int n) { return n >= 3 ? n : 1; }

/// Visit every labeled tree on n vertices whose Pruefer sequence starts with
/// `chunk` (all trees when n <= 2, where chunk must be 0).  The visitor gets a
/// reference to a buffer that is reused between calls.
template <typename F>
void for_each_tree_in_chunk(int n, int chunk, F&& visit) {
  if (n < 2 || n > kMaxTreeEnumVertices)
    throw std::invalid_argument("for_each_tree_in_chunk: n out of range");
  if (chunk < 0 || chunk >= num_tree_chunks(n))
    throw std::invalid_argument("for_each_tree_in_chunk: bad chunk index");

  labeled_tree t;
  if (n == 2) {
    t.n = 2;
    t.u[0] = 0;
    t.v[0] = 1;
    visit(static_cast<const labeled_tree&>(t));
    return;
  }

  int seq[kMaxTreeEnumVertices - 2] = {};
  seq[0] = chunk;
  const int len = n - 2;
  for (;;) {
    detail::decode_pruefer(seq, n, t);
    visit(static_cast<const labeled_tree&>(t));
    // Odometer over seq[1..len-1], base n.
    int pos = len - 1;
    while (pos >= 1 && ++seq[pos] == n) seq[pos--] = 0;
    if (pos < 1) break;
  }
}

template <typename F>
void for_each_labeled_tree(int n, F&& visit) {
  for (int chunk = 0; chunk < num_tree_chunks(n); ++chunk)
    for_each_tree_in_chunk(n, chunk, visit);
}

}  // namespace eccmat

#endif  // ECCMAT_TREE_ENUM_HPP
