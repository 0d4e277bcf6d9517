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

#ifndef ECCMAT_METRIC_HPP
#define ECCMAT_METRIC_HPP

#include <algorithm>
#include <vector>

#include <eccmat/graph.hpp>
#include <eccmat/matrix.hpp>

namespace eccmat {

/// All-pairs shortest paths by BFS from every source.  Throws graph_error on
/// a disconnected graph (the metric notions below need finite distances).
inline imatrix distance_matrix(const graph& g) {
  const int n = g.num_vertices();
  imatrix d(n, n, -1);
  std::vector<int> queue(n);
  for (int s = 0; s < n; ++s) {
    d(s, s) = 0;
    int head = 0, tail = 0;
    queue[tail++] = s;
    while (head < tail) {
      int u = queue[head++];
      for (int v : g.neighbors(u))
        if (d(s, v) < 0) {
          d(s, v) = d(s, u) + 1;
          queue[tail++] = v;
        }
    }
    if (tail != n) throw graph_error("distance_matrix: graph is disconnected");
  }
  return d;
}

inline std::vector<std::int64_t> eccentricities(const imatrix& dist) {
  const int n = dist.rows();
  std::vector<std::int64_t> ecc(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) ecc[i] = std::max(ecc[i], dist(i, j));
  return ecc;
}

inline std::vector<std::int64_t> eccentricities(const graph& g) {
  return eccentricities(distance_matrix(g));
}

inline std::int64_t diameter(const graph& g) {
  auto ecc = eccentricities(g);
  return *std::max_element(ecc.begin(), ecc.end());
}

inline std::int64_t radius(const graph& g) {
  auto ecc = eccentricities(g);
  return *std::min_element(ecc.begin(), ecc.end());
}

/// Eccentricity matrix: keep d(u,v) exactly where it attains
/// min(ecc(u), ecc(v)), zero elsewhere.
inline imatrix ecc_matrix_from_distances(const imatrix& dist) {
  const int n = dist.rows();
  auto ecc = eccentricities(dist);
  imatrix e(n, n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && dist(i, j) == std::min(ecc[i], ecc[j])) e(i, j) = dist(i, j);
  return e;
}

inline imatrix ecc_matrix(const graph& g) { return ecc_matrix_from_distances(distance_matrix(g)); }

}  // namespace eccmat

#endif  // ECCMAT_METRIC_HPP
