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

#ifndef ECCMAT_CLOSED_FORMS_HPP
#define ECCMAT_CLOSED_FORMS_HPP

#include <cmath>
#include <numbers>
#include <utility>
#include <vector>

#include <eccmat/charpoly.hpp>
#include <eccmat/exact.hpp>
#include <eccmat/graph.hpp>
#include <eccmat/inertia.hpp>
#include <eccmat/jacobi.hpp>
#include <eccmat/matrix.hpp>
#include <eccmat/spectrum.hpp>

namespace eccmat {

namespace detail {

/// Append an exact line, merging with an existing equal value.
inline void add_line(std::vector<std::pair<exact_value, int>>& lines, const exact_value& v, int mult) {
  if (mult <= 0) return;
  for (auto& [w, m] : lines)
    if (w == v) {
      m += mult;
      return;
    }
  lines.emplace_back(v, mult);
}

inline spectrum to_spectrum(const std::vector<std::pair<exact_value, int>>& lines) {
  spectrum s;
  for (const auto& [v, m] : lines) s.add(v, m);
  return s;
}

/// 2 * adjacency matrix of the complement of g.
inline imatrix twice_complement_adjacency(const graph& g) {
  const int n = g.num_vertices();
  imatrix a(n, n, 0);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v && !g.has_edge(u, v)) a(u, v) = 2;
  return a;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Stars K_{1,n-1}.
// ---------------------------------------------------------------------------

/// Eccentricity matrix of the star on n vertices with the center first:
/// [[0, J], [J, 2(J - I)]].
inline imatrix star_ecc_matrix(int n) {
  if (n < 2) throw graph_error("star_ecc_matrix: need n >= 2");
  imatrix e(n, n, 2);
  for (int i = 0; i < n; ++i) e(i, i) = 0;
  for (int v = 1; v < n; ++v) e(0, v) = e(v, 0) = 1;
  return e;
}

/// Spectrum of the star's eccentricity matrix:
/// (n-2) +- sqrt(n^2 - 3n + 3), each simple, and -2 with multiplicity n-2.
inline spectrum star_ecc_spectrum(int n) {
  if (n < 2) throw graph_error("star_ecc_spectrum: need n >= 2");
  const std::int64_t nn = n;
  std::vector<std::pair<exact_value, int>> lines;
  detail::add_line(lines, exact_value(nn - 2, 1, nn * nn - 3 * nn + 3), 1);
  detail::add_line(lines, exact_value(nn - 2, -1, nn * nn - 3 * nn + 3), 1);
  detail::add_line(lines, exact_value::rational(-2), n - 2);
  return detail::to_spectrum(lines);
}

/// det of the star's eccentricity matrix: (-1)^(n-1) (n-1) 2^(n-2).
inline bigint star_ecc_det(int n) {
  if (n < 2) throw graph_error("star_ecc_det: need n >= 2");
  bigint d = bigint(n - 1) << (n - 2);
  return n % 2 == 0 ? -d : d;
}

// ---------------------------------------------------------------------------
// The bordered block [[0, 2J_{1,m}], [2J_{m,1}, 3J_m]] that recurs in the
// corona and barbell forms.
// ---------------------------------------------------------------------------

inline imatrix corona_block_matrix(int m) {
  if (m < 1) throw graph_error("corona_block_matrix: need m >= 1");
  imatrix a(m + 1, m + 1, 3);
  a(0, 0) = 0;
  for (int j = 1; j <= m; ++j) a(0, j) = a(j, 0) = 2;
  return a;
}

/// Spectrum of corona_block_matrix(m): 0 with multiplicity m-1 plus the two
/// roots (3m +- sqrt(9m^2 + 16m)) / 2 of x^2 - 3mx - 4m.
inline spectrum corona_block_spectrum(int m) {
  if (m < 1) throw graph_error("corona_block_spectrum: need m >= 1");
  const std::int64_t mm = m;
  std::vector<std::pair<exact_value, int>> lines;
  detail::add_line(lines, exact_value(3 * mm, 1, 9 * mm * mm + 16 * mm, 2), 1);
  detail::add_line(lines, exact_value(3 * mm, -1, 9 * mm * mm + 16 * mm, 2), 1);
  detail::add_line(lines, exact_value::rational(0), m - 1);
  return detail::to_spectrum(lines);
}

// ---------------------------------------------------------------------------
// Corona K_n o H for |H| = m.  The eccentricity matrix depends on H only
// through m, which is what makes cospectral pairs so easy to manufacture.
// ---------------------------------------------------------------------------

/// Eccentricity matrix of K_n o H under the labeling of
/// make_corona_complete: corona_block_matrix(m) (x) (J_n - I_n).
inline imatrix corona_ecc_matrix(int n, int m) {
  if (n < 2) throw graph_error("corona_ecc_matrix: need n >= 2 hubs");
  if (m < 1) throw graph_error("corona_ecc_matrix: need a nonempty attached graph");
  imatrix jmi(n, n, 1);
  for (int i = 0; i < n; ++i) jmi(i, i) = 0;
  return kron(corona_block_matrix(m), jmi);
}

/// Spectrum of the corona's eccentricity matrix.  With x1, x2 the roots of
/// x^2 - 3mx - 4m: 0 with multiplicity n(m-1), -x1 and -x2 each with
/// multiplicity n-1, and the simple values (n-1)x1 and (n-1)x2.
inline spectrum corona_ecc_spectrum(int n, int m) {
  if (n < 2) throw graph_error("corona_ecc_spectrum: need n >= 2 hubs");
  if (m < 1) throw graph_error("corona_ecc_spectrum: need a nonempty attached graph");
  const std::int64_t mm = m, r = 9 * mm * mm + 16 * mm;
  std::vector<std::pair<exact_value, int>> lines;
  detail::add_line(lines, exact_value((n - 1) * 3 * mm, n - 1, r, 2), 1);
  detail::add_line(lines, exact_value((n - 1) * 3 * mm, -(n - 1), r, 2), 1);
  detail::add_line(lines, exact_value(-3 * mm, -1, r, 2), n - 1);
  detail::add_line(lines, exact_value(-3 * mm, 1, r, 2), n - 1);
  detail::add_line(lines, exact_value::rational(0), n * (m - 1));
  return detail::to_spectrum(lines);
}

// ---------------------------------------------------------------------------
// Barbells: K_n -- K_n joined by a bridge.
// ---------------------------------------------------------------------------

/// Eccentricity matrix of the barbell under the labeling of make_barbell:
/// [[0, A], [A, 0]] with A = corona_block_matrix(n-1).
inline imatrix barbell_ecc_matrix(int n) {
  if (n < 2) throw graph_error("barbell_ecc_matrix: need cliques on at least 2 vertices");
  const imatrix a = corona_block_matrix(n - 1);
  imatrix e(2 * n, 2 * n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      e(i, n + j) = a(i, j);
      e(n + i, j) = a(i, j);
    }
  return e;
}

/// Spectrum of the barbell's eccentricity matrix: 0 with multiplicity
/// 2(n-2) plus +-(3(n-1) +- sqrt(9n^2 - 2n - 7))/2.
inline spectrum barbell_ecc_spectrum(int n) {
  if (n < 2) throw graph_error("barbell_ecc_spectrum: need cliques on at least 2 vertices");
  const std::int64_t nn = n, r = 9 * nn * nn - 2 * nn - 7;
  std::vector<std::pair<exact_value, int>> lines;
  detail::add_line(lines, exact_value(3 * (nn - 1), 1, r, 2), 1);
  detail::add_line(lines, exact_value(3 * (nn - 1), -1, r, 2), 1);
  detail::add_line(lines, exact_value(-3 * (nn - 1), -1, r, 2), 1);
  detail::add_line(lines, exact_value(-3 * (nn - 1), 1, r, 2), 1);
  detail::add_line(lines, exact_value::rational(0), 2 * (n - 2));
  return detail::to_spectrum(lines);
}

// ---------------------------------------------------------------------------
// Cocktail party graphs CP(n) = K_{2n} minus a perfect matching.
// ---------------------------------------------------------------------------

/// Eccentricity matrix of CP(n) under the labeling of make_cocktail_party:
/// [[0, 2I], [2I, 0]].
inline imatrix cocktail_ecc_matrix(int n) {
  if (n < 2) throw graph_error("cocktail_ecc_matrix: need n >= 2");
  imatrix e(2 * n, 2 * n, 0);
  for (int i = 0; i < n; ++i) e(i, n + i) = e(n + i, i) = 2;
  return e;
}

/// Spectrum of CP(n)'s eccentricity matrix: +-2, each with multiplicity n.
inline spectrum cocktail_ecc_spectrum(int n) {
  if (n < 2) throw graph_error("cocktail_ecc_spectrum: need n >= 2");
  std::vector<std::pair<exact_value, int>> lines;
  detail::add_line(lines, exact_value::rational(2), n);
  detail::add_line(lines, exact_value::rational(-2), n);
  return detail::to_spectrum(lines);
}

// ---------------------------------------------------------------------------
// Complete multipartite graphs with every part of size >= 2.
//
// A singleton part is a dominating vertex and breaks the derivation (its
// eccentricity is 1, not 2), so those inputs are rejected rather than given
// a wrong answer; K_{1,n-1} is covered by the star functions instead.
// ---------------------------------------------------------------------------

inline void require_multipartite_parts(const std::vector<int>& parts, const char* who) {
  if (parts.size() < 2) throw graph_error(std::string(who) + ": need at least 2 parts");
  for (int p : parts)
    if (p < 2)
      throw graph_error(std::string(who) +
                        ": every part must have size >= 2 (a singleton part is a dominating vertex)");
}

/// Eccentricity matrix of K_{n1,...,nk} under the labeling of
/// make_complete_multipartite: blockdiag(2(J_{ni} - I_{ni})).
inline imatrix multipartite_ecc_matrix(const std::vector<int>& parts) {
  require_multipartite_parts(parts, "multipartite_ecc_matrix");
  int n = 0;
  for (int p : parts) n += p;
  imatrix e(n, n, 0);
  int base = 0;
  for (int p : parts) {
    for (int i = 0; i < p; ++i)
      for (int j = 0; j < p; ++j)
        if (i != j) e(base + i, base + j) = 2;
    base += p;
  }
  return e;
}

/// Spectrum of K_{n1,...,nk}'s eccentricity matrix: 2(ni - 1) for each part
/// plus -2 with multiplicity n - k.
inline spectrum multipartite_ecc_spectrum(const std::vector<int>& parts) {
  require_multipartite_parts(parts, "multipartite_ecc_spectrum");
  int n = 0;
  std::vector<std::pair<exact_value, int>> lines;
  for (int p : parts) {
    n += p;
    detail::add_line(lines, exact_value::rational(2 * (p - 1)), 1);
  }
  detail::add_line(lines, exact_value::rational(-2), n - static_cast<int>(parts.size()));
  return detail::to_spectrum(lines);
}

// ---------------------------------------------------------------------------
// Cones G v K1 over an r-regular, non-complete G.
//
// Completeness is the only structural obstruction: as long as every vertex
// of G has a non-neighbor, all non-apex eccentricities are 2 and the matrix
// below is exact.  Regularity is what the spectrum formula needs.
// ---------------------------------------------------------------------------

/// Eccentricity matrix of G v K1 with the apex last:
/// [[2 A(complement(G)), J], [J^T, 0]].
inline imatrix cone_ecc_matrix(const graph& g) {
  const int n = g.num_vertices();
  if (g.regularity() < 0) throw graph_error("cone_ecc_matrix: base graph must be regular");
  if (g.regularity() == n - 1) throw graph_error("cone_ecc_matrix: base graph must not be complete");
  imatrix e(n + 1, n + 1, 0);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v && !g.has_edge(u, v)) e(u, v) = 2;
  for (int v = 0; v < n; ++v) e(v, n) = e(n, v) = 1;
  return e;
}

/// Spectrum of the cone's eccentricity matrix: the exact pair
/// (n-r-1) +- sqrt((n-r-1)^2 + n) plus -2(x + 1) for every adjacency
/// eigenvalue x of G except one copy of r.
inline spectrum cone_ecc_spectrum(const graph& g, const jacobi_options& opt = {}) {
  const int n = g.num_vertices();
  const int r = g.regularity();
  if (r < 0) throw graph_error("cone_ecc_spectrum: base graph must be regular");
  if (r == n - 1) throw graph_error("cone_ecc_spectrum: base graph must not be complete");

  std::vector<double> adj_ev = symmetric_eigenvalues(to_dmatrix(g.adjacency_matrix()), opt);
  // Drop one copy of the regularity eigenvalue (the largest).
  adj_ev.pop_back();

  const std::int64_t s = n - r - 1;
  spectrum out;
  out.add(exact_value(s, 1, s * s + n), 1);
  out.add(exact_value(s, -1, s * s + n), 1);
  for (double x : adj_ev) out.add(-2 * (x + 1), 1);
  return out;
}

// ---------------------------------------------------------------------------
// Wheels W = C_rim v K1, rim >= 4 (rim = 3 would be K_4).
// ---------------------------------------------------------------------------

inline imatrix wheel_ecc_matrix(int rim_n) {
  if (rim_n < 4) throw graph_error("wheel_ecc_matrix: need rim >= 4");
  return cone_ecc_matrix(make_cycle(rim_n));
}

/// Spectrum of the wheel's eccentricity matrix: the exact pair
/// (rim-3) +- sqrt((rim-3)^2 + rim) plus -2(2cos(2 pi i / rim) + 1) for
/// i = 1..rim-1 (the cycle eigenvalues with one copy of 2 removed).
inline spectrum wheel_ecc_spectrum(int rim_n) {
  if (rim_n < 4) throw graph_error("wheel_ecc_spectrum: need rim >= 4");
  const std::int64_t s = rim_n - 3;
  spectrum out;
  out.add(exact_value(s, 1, s * s + rim_n), 1);
  out.add(exact_value(s, -1, s * s + rim_n), 1);
  for (int i = 1; 2 * i <= rim_n; ++i) {
    const double x = 2 * std::cos(2 * std::numbers::pi * i / rim_n);
    out.add(-2 * (x + 1), 2 * i == rim_n ? 1 : 2);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Joins G1 v G2 where neither part has a dominating vertex.
// ---------------------------------------------------------------------------

/// Eccentricity matrix of G1 v G2 (parts labeled as in join()):
/// blockdiag(2 A(complement(G1)), 2 A(complement(G2))).
inline imatrix join_ecc_matrix(const graph& g1, const graph& g2) {
  if (g1.has_dominating_vertex() || g2.has_dominating_vertex())
    throw graph_error("join_ecc_matrix: neither part may contain a dominating vertex");
  const imatrix a = detail::twice_complement_adjacency(g1);
  const imatrix b = detail::twice_complement_adjacency(g2);
  const int n1 = a.rows(), n = n1 + b.rows();
  imatrix e(n, n, 0);
  for (int i = 0; i < n1; ++i)
    for (int j = 0; j < n1; ++j) e(i, j) = a(i, j);
  for (int i = 0; i < b.rows(); ++i)
    for (int j = 0; j < b.rows(); ++j) e(n1 + i, n1 + j) = b(i, j);
  return e;
}

/// Spectrum of the join's eccentricity matrix: the union of the spectra of
/// the two diagonal blocks (computed per block).
inline spectrum join_ecc_spectrum(const graph& g1, const graph& g2, const jacobi_options& opt = {}) {
  if (g1.has_dominating_vertex() || g2.has_dominating_vertex())
    throw graph_error("join_ecc_spectrum: neither part may contain a dominating vertex");
  spectrum out;
  for (const graph* g : {&g1, &g2})
    for (double x : symmetric_eigenvalues(to_dmatrix(detail::twice_complement_adjacency(*g)), opt))
      out.add(x, 1);
  return out;
}

// ---------------------------------------------------------------------------
// Exact inertia values for paths and lollipops.
// ---------------------------------------------------------------------------

/// Inertia of the path's eccentricity matrix: (2, 2, n-4) as
/// (positive, negative, zero); in particular the rank is 4 for every n >= 4.
inline inertia path_ecc_inertia(int n) {
  if (n < 4) throw graph_error("path_ecc_inertia: need n >= 4");
  return inertia{2, n - 4, 2};
}

/// Inertia of the lollipop's eccentricity matrix (clique m >= 3, path
/// n >= 2): positive and negative counts 2, zero count m+n-4.
inline inertia lollipop_ecc_inertia(int m, int n) {
  if (m < 3) throw graph_error("lollipop_ecc_inertia: need clique size >= 3");
  if (n < 2) throw graph_error("lollipop_ecc_inertia: need path length >= 2");
  return inertia{2, m + n - 4, 2};
}

}  // namespace eccmat

#endif  // ECCMAT_CLOSED_FORMS_HPP
