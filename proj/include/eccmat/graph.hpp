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

#ifndef ECCMAT_GRAPH_HPP
#define ECCMAT_GRAPH_HPP

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <eccmat/matrix.hpp>

namespace eccmat {

/// Raised for structurally invalid graphs (bad edges, disconnected input where
/// connectivity is required, preconditions of a family formula not met, ...).
class graph_error : public std::runtime_error {
 public:
  explicit graph_error(const std::string& what) : std::runtime_error(what) {}
};

/// Simple undirected graph on vertices 0..n-1.
class graph {
 public:
  explicit graph(int n) : n_(n), adj_(n) {
    if (n <= 0) throw graph_error("graph: vertex count must be positive");
  }

  graph(int n, const std::vector<std::pair<int, int>>& edges) : graph(n) {
    for (auto [u, v] : edges) add_edge(u, v);
  }

  int num_vertices() const { return n_; }

  int num_edges() const {
    int m = 0;
    for (const auto& nb : adj_) m += static_cast<int>(nb.size());
    return m / 2;
  }

  void add_edge(int u, int v) {
    if (u < 0 || u >= n_ || v < 0 || v >= n_)
      throw graph_error("graph: edge endpoint out of range: (" + std::to_string(u) + "," +
                        std::to_string(v) + ")");
    if (u == v) throw graph_error("graph: self-loop at vertex " + std::to_string(u));
    if (has_edge(u, v))
      throw graph_error("graph: duplicate edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
    adj_[u].insert(std::lower_bound(adj_[u].begin(), adj_[u].end(), v), v);
    adj_[v].insert(std::lower_bound(adj_[v].begin(), adj_[v].end(), u), u);
  }

  bool has_edge(int u, int v) const {
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
  }

  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }

  std::vector<int> degrees() const {
    std::vector<int> d(n_);
    for (int v = 0; v < n_; ++v) d[v] = degree(v);
    return d;
  }

  /// Edges as (u, v) with u < v, lexicographically sorted.
  std::vector<std::pair<int, int>> edge_list() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(num_edges());
    for (int u = 0; u < n_; ++u)
      for (int v : adj_[u])
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  imatrix adjacency_matrix() const {
    imatrix a(n_, n_);
    for (int u = 0; u < n_; ++u)
      for (int v : adj_[u]) a(u, v) = 1;
    return a;
  }

  bool is_connected() const {
    std::vector<bool> seen(n_, false);
    std::vector<int> stack{0};
    seen[0] = true;
    int count = 1;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int v : adj_[u])
        if (!seen[v]) {
          seen[v] = true;
          ++count;
          stack.push_back(v);
        }
    }
    return count == n_;
  }

  bool is_tree() const { return num_edges() == n_ - 1 && is_connected(); }

  /// Common degree if the graph is regular, -1 otherwise.
  int regularity() const {
    int d = degree(0);
    for (int v = 1; v < n_; ++v)
      if (degree(v) != d) return -1;
    return d;
  }

  bool has_dominating_vertex() const {
    for (int v = 0; v < n_; ++v)
      if (degree(v) == n_ - 1) return true;
    return false;
  }

 private:
  int n_;
  std::vector<std::vector<int>> adj_;
};

inline graph complement(const graph& g) {
  const int n = g.num_vertices();
  graph h(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!g.has_edge(u, v)) h.add_edge(u, v);
  return h;
}

inline graph disjoint_union(const graph& a, const graph& b) {
  const int na = a.num_vertices();
  graph g(na + b.num_vertices());
  for (auto [u, v] : a.edge_list()) g.add_edge(u, v);
  for (auto [u, v] : b.edge_list()) g.add_edge(na + u, na + v);
  return g;
}

/// Join: disjoint union plus every edge between the two parts.
inline graph join(const graph& a, const graph& b) {
  graph g = disjoint_union(a, b);
  const int na = a.num_vertices();
  for (int u = 0; u < na; ++u)
    for (int v = 0; v < b.num_vertices(); ++v) g.add_edge(u, na + v);
  return g;
}

// ---------------------------------------------------------------------------
// Named families.  Labelings are fixed so the matrix-level identities in
// closed_forms.hpp hold entrywise, not just up to isomorphism.
// ---------------------------------------------------------------------------

inline graph make_complete(int n) {
  graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

inline graph make_path(int n) {
  graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

inline graph make_cycle(int n) {
  if (n < 3) throw graph_error("make_cycle: need at least 3 vertices");
  graph g(n);
  for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

/// Star K_{1,n-1}: center is vertex 0.
inline graph make_star(int n) {
  if (n < 2) throw graph_error("make_star: need at least 2 vertices");
  graph g(n);
  for (int v = 1; v < n; ++v) g.add_edge(0, v);
  return g;
}

/// Wheel on rim_n + 1 vertices: cycle 0..rim_n-1 plus hub rim_n.
inline graph make_wheel(int rim_n) {
  if (rim_n < 3) throw graph_error("make_wheel: rim needs at least 3 vertices");
  graph g(rim_n + 1);
  for (int v = 0; v < rim_n; ++v) {
    g.add_edge(v, (v + 1) % rim_n);
    g.add_edge(v, rim_n);
  }
  return g;
}

/// Cocktail party graph on 2n vertices: K_{2n} minus the matching (i, i+n).
inline graph make_cocktail_party(int n) {
  if (n < 2) throw graph_error("make_cocktail_party: need n >= 2 (n = 1 is disconnected)");
  graph g(2 * n);
  for (int u = 0; u < 2 * n; ++u)
    for (int v = u + 1; v < 2 * n; ++v)
      if (v - u != n) g.add_edge(u, v);
  return g;
}

/// Complete multipartite graph; part i occupies a consecutive vertex block.
inline graph make_complete_multipartite(const std::vector<int>& parts) {
  if (parts.size() < 2) throw graph_error("make_complete_multipartite: need at least 2 parts");
  int n = 0;
  for (int p : parts) {
    if (p < 1) throw graph_error("make_complete_multipartite: part sizes must be positive");
    n += p;
  }
  graph g(n);
  int a_begin = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    int a_end = a_begin + parts[i];
    int b_begin = a_end;
    for (std::size_t j = i + 1; j < parts.size(); ++j) {
      int b_end = b_begin + parts[j];
      for (int u = a_begin; u < a_end; ++u)
        for (int v = b_begin; v < b_end; ++v) g.add_edge(u, v);
      b_begin = b_end;
    }
    a_begin = a_end;
  }
  return g;
}

inline graph make_complete_bipartite(int p, int q) { return make_complete_multipartite({p, q}); }

/// Barbell: two copies of K_n (vertices 0..n-1 and n..2n-1) joined by the
/// bridge (0, n).
inline graph make_barbell(int n) {
  if (n < 2) throw graph_error("make_barbell: need cliques on at least 2 vertices");
  graph g(2 * n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      g.add_edge(u, v);
      g.add_edge(n + u, n + v);
    }
  g.add_edge(0, n);
  return g;
}

/// Lollipop: K_m on 0..m-1 with a path on m..m+n-1 hung off vertex m-1.
inline graph make_lollipop(int m, int n) {
  if (m < 3) throw graph_error("make_lollipop: clique needs at least 3 vertices");
  if (n < 1) throw graph_error("make_lollipop: path needs at least 1 vertex");
  graph g(m + n);
  for (int u = 0; u < m; ++u)
    for (int v = u + 1; v < m; ++v) g.add_edge(u, v);
  g.add_edge(m - 1, m);
  for (int v = m; v + 1 < m + n; ++v) g.add_edge(v, v + 1);
  return g;
}

/// Corona K_n o H: hub i is vertex i; vertex k of the i-th copy of H is
/// n*(k+1) + i.  Every hub is joined to all vertices of its own copy.
inline graph make_corona_complete(int n, const graph& h) {
  if (n < 1) throw graph_error("make_corona_complete: need at least 1 hub");
  const int m = h.num_vertices();
  graph g(n * (m + 1));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < m; ++k) g.add_edge(i, n * (k + 1) + i);
    for (auto [k, l] : h.edge_list()) g.add_edge(n * (k + 1) + i, n * (l + 1) + i);
  }
  return g;
}

/// Cone over G: a fresh apex vertex (index n) adjacent to everything.
inline graph make_cone(const graph& g) {
  const int n = g.num_vertices();
  graph h(n + 1);
  for (auto [u, v] : g.edge_list()) h.add_edge(u, v);
  for (int v = 0; v < n; ++v) h.add_edge(v, n);
  return h;
}

// ---------------------------------------------------------------------------
// Brute-force isomorphism (desk scale).
// ---------------------------------------------------------------------------

namespace detail {

inline bool extend_isomorphism(const graph& a, const graph& b, std::vector<int>& map,
                               std::vector<bool>& used, int next) {
  const int n = a.num_vertices();
  if (next == n) return true;
  for (int cand = 0; cand < n; ++cand) {
    if (used[cand] || b.degree(cand) != a.degree(next)) continue;
    bool ok = true;
    for (int prev = 0; prev < next && ok; ++prev)
      if (a.has_edge(prev, next) != b.has_edge(map[prev], cand)) ok = false;
    if (!ok) continue;
    map[next] = cand;
    used[cand] = true;
    if (extend_isomorphism(a, b, map, used, next + 1)) return true;
    used[cand] = false;
  }
  return false;
}

}  // namespace detail

/// Exhaustive isomorphism test with degree pruning; intended for n <= 10.
inline bool is_isomorphic(const graph& a, const graph& b) {
  if (a.num_vertices() != b.num_vertices()) return false;
  if (a.num_edges() != b.num_edges()) return false;
  std::vector<int> da = a.degrees(), db = b.degrees();
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return false;
  std::vector<int> map(a.num_vertices(), -1);
  std::vector<bool> used(a.num_vertices(), false);
  return detail::extend_isomorphism(a, b, map, used, 0);
}

}  // namespace eccmat

#endif  // ECCMAT_GRAPH_HPP
