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

#ifndef ECCMAT_VERIFY_HPP
#define ECCMAT_VERIFY_HPP

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

#include <json.hpp>

#include <eccmat/charpoly.hpp>
#include <eccmat/closed_forms.hpp>
#include <eccmat/graph.hpp>
#include <eccmat/inertia.hpp>
#include <eccmat/jacobi.hpp>
#include <eccmat/matrix.hpp>
#include <eccmat/metric.hpp>
#include <eccmat/spectrum.hpp>
#include <eccmat/tree_enum.hpp>

namespace eccmat {

/// Outcome of checking one claim over a parameter range.  Timing is kept out
/// of the default serialization so identical runs produce identical bytes.
struct verification_report {
  struct failure {
    std::string instance;
    std::string observed;
    std::string expected;
  };

  std::string claim;
  std::string parameter_range;
  std::uint64_t instances_checked = 0;
  std::uint64_t failure_count = 0;
  std::vector<failure> failures;  // capped sample of the failures
  std::size_t max_recorded_failures = 25;
  double max_deviation = 0;
  double elapsed_seconds = 0;
  std::string notes;

  bool passed() const { return failure_count == 0; }

  void record_instance(double deviation = 0) {
    ++instances_checked;
    if (deviation > max_deviation) max_deviation = deviation;
  }

  void record_failure(std::string instance, std::string observed, std::string expected) {
    ++failure_count;
    if (failures.size() < max_recorded_failures)
      failures.push_back({std::move(instance), std::move(observed), std::move(expected)});
  }

  nlohmann::json to_json(bool include_timing = false) const {
    nlohmann::json fs = nlohmann::json::array();
    for (const auto& f : failures)
      fs.push_back({{"instance", f.instance}, {"observed", f.observed}, {"expected", f.expected}});
    nlohmann::json j{{"claim", claim},
                     {"parameter_range", parameter_range},
                     {"instances_checked", instances_checked},
                     {"failure_count", failure_count},
                     {"failures", std::move(fs)},
                     {"max_deviation", max_deviation},
                     {"notes", notes},
                     {"passed", passed()}};
    if (include_timing) j["elapsed_seconds"] = elapsed_seconds;
    return j;
  }
};

namespace detail {

class stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

inline std::vector<double> eigs(const imatrix& m, const jacobi_options& opt = {}) {
  return symmetric_eigenvalues(to_dmatrix(m), opt);
}

/// Largest entrywise gap between two equally sized value lists after sorting.
inline double max_abs_sorted_diff(std::vector<double> a, std::vector<double> b) {
  if (a.size() != b.size())
    throw std::invalid_argument("max_abs_sorted_diff: lists have different sizes");
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  double dev = 0;
  for (std::size_t i = 0; i < a.size(); ++i) dev = std::max(dev, std::abs(a[i] - b[i]));
  return dev;
}

inline std::int64_t rand_int(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  return lo + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

inline dmatrix random_symmetric(std::mt19937_64& rng, int n, int lo, int hi) {
  dmatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) m(i, j) = m(j, i) = static_cast<double>(rand_int(rng, lo, hi));
  return m;
}

/// Gaussian elimination with partial pivoting; a and b are consumed.
inline std::vector<double> solve_linear(dmatrix a, std::vector<double> b) {
  const int n = a.rows();
  for (int col = 0; col < n; ++col) {
    int piv = col;
    for (int r = col + 1; r < n; ++r)
      if (std::abs(a(r, col)) > std::abs(a(piv, col))) piv = r;
    if (std::abs(a(piv, col)) < 1e-12) throw std::runtime_error("solve_linear: matrix is singular");
    if (piv != col) {
      for (int c = col; c < n; ++c) std::swap(a(piv, c), a(col, c));
      std::swap(b[piv], b[col]);
    }
    for (int r = col + 1; r < n; ++r) {
      const double f = a(r, col) / a(col, col);
      if (f == 0) continue;
      for (int c = col; c < n; ++c) a(r, c) -= f * a(col, c);
      b[r] -= f * b[col];
    }
  }
  std::vector<double> x(n);
  for (int r = n - 1; r >= 0; --r) {
    double s = b[r];
    for (int c = r + 1; c < n; ++c) s -= a(r, c) * x[c];
    x[r] = s / a(r, r);
  }
  return x;
}

}  // namespace detail

/// Whether the support graph of a square matrix (nonzero off-diagonal entries
/// as edges, pattern symmetrized) is connected.
inline bool is_irreducible(const imatrix& m) {
  const int n = m.rows();
  if (n != m.cols()) throw std::invalid_argument("is_irreducible: matrix must be square");
  if (n == 1) return true;
  std::vector<bool> seen(n, false);
  std::vector<int> stack{0};
  seen[0] = true;
  int count = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int v = 0; v < n; ++v)
      if (!seen[v] && (m(u, v) != 0 || m(v, u) != 0)) {
        seen[v] = true;
        ++count;
        stack.push_back(v);
      }
  }
  return count == n;
}

// ---------------------------------------------------------------------------
// Exhaustive tree sweep: least-eigenvalue bounds and irreducibility, both
// checked in one enumeration pass.
// ---------------------------------------------------------------------------

struct tree_sweep_options {
  int n_min = 3;
  int n_max = 9;
  int jobs = 1;
  double tol = 1e-7;
  std::size_t max_recorded_failures = 25;
};

struct tree_sweep_result {
  verification_report conjecture;
  verification_report irreducibility;
  std::uint64_t trees = 0;
  std::uint64_t stars = 0;
  double least_eigenvalue_overall = 0;
  double largest_least_eigenvalue_nonstar = 0;
};

namespace detail {

struct sweep_stats {
  std::uint64_t trees = 0;
  std::uint64_t stars = 0;
  double least_overall = std::numeric_limits<double>::infinity();
  double star_deviation = 0;
  double nonstar_least_max = -std::numeric_limits<double>::infinity();
  std::uint64_t conjecture_failures = 0;
  std::uint64_t irreducibility_failures = 0;
  std::vector<verification_report::failure> conjecture_examples;
  std::vector<verification_report::failure> irreducibility_examples;
};

inline std::string tree_instance_string(const labeled_tree& t) {
  std::ostringstream os;
  os << "n=" << t.n << " edges=";
  for (int k = 0; k < t.n - 1; ++k) {
    if (k) os << ',';
    os << t.u[k] << '-' << t.v[k];
  }
  return os.str();
}

/// Hot kernel: eccentricity matrix, its least eigenvalue, support
/// connectivity, and star detection for one small tree.  Stack-only.
inline void sweep_one_tree(const labeled_tree& t, double tol, std::size_t example_cap,
                           sweep_stats& st) {
  const int n = t.n;
  std::uint32_t adj[kMaxTreeEnumVertices] = {};
  for (int k = 0; k < n - 1; ++k) {
    adj[t.u[k]] |= 1u << t.v[k];
    adj[t.v[k]] |= 1u << t.u[k];
  }

  bool star = false;
  for (int v = 0; v < n && !star; ++v)
    if (std::popcount(adj[v]) == n - 1) star = true;

  int dist[kMaxTreeEnumVertices][kMaxTreeEnumVertices];
  int ecc[kMaxTreeEnumVertices];
  for (int s = 0; s < n; ++s) {
    std::uint32_t visited = 1u << s;
    std::uint32_t frontier = visited;
    int d = 0;
    dist[s][s] = 0;
    while (frontier != 0) {
      std::uint32_t next = 0;
      for (std::uint32_t f = frontier; f != 0; f &= f - 1) next |= adj[std::countr_zero(f)];
      next &= ~visited;
      ++d;
      for (std::uint32_t f = next; f != 0; f &= f - 1) dist[s][std::countr_zero(f)] = d;
      visited |= next;
      frontier = next;
    }
    ecc[s] = d - 1;
  }

  double eps[kMaxTreeEnumVertices * kMaxTreeEnumVertices] = {};
  std::uint32_t support[kMaxTreeEnumVertices] = {};
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (dist[i][j] == std::min(ecc[i], ecc[j])) {
        eps[i * n + j] = eps[j * n + i] = static_cast<double>(dist[i][j]);
        support[i] |= 1u << j;
        support[j] |= 1u << i;
      }

  std::uint32_t seen = 1u, frontier = 1u;
  while (frontier != 0) {
    std::uint32_t next = 0;
    for (std::uint32_t f = frontier; f != 0; f &= f - 1) next |= support[std::countr_zero(f)];
    next &= ~seen;
    seen |= next;
    frontier = next;
  }
  const bool irreducible = seen == (n == 32 ? ~0u : (1u << n) - 1);

  double ev[kMaxTreeEnumVertices];
  jacobi_eigenvalues_inplace(eps, n, ev, 1e-12, 40);
  const double least = ev[0];

  ++st.trees;
  if (least < st.least_overall) st.least_overall = least;

  bool conjecture_ok = least <= -2 + tol;
  std::string why;
  if (!conjecture_ok) why = "least eigenvalue above -2";
  if (star) {
    ++st.stars;
    const double dev = std::abs(least + 2);
    if (dev > st.star_deviation) st.star_deviation = dev;
    if (dev > tol) {
      conjecture_ok = false;
      why = "star without least eigenvalue -2";
    }
  } else {
    if (least > st.nonstar_least_max) st.nonstar_least_max = least;
    if (least > -3 + tol) {
      conjecture_ok = false;
      why = "non-star with least eigenvalue above -3";
    }
  }
  if (!conjecture_ok) {
    ++st.conjecture_failures;
    if (st.conjecture_examples.size() < example_cap)
      st.conjecture_examples.push_back({tree_instance_string(t),
                                        "least eigenvalue " + std::to_string(least) + " (" + why + ")",
                                        star ? "-2 (star)" : "<= -3 (non-star)"});
  }
  if (!irreducible) {
    ++st.irreducibility_failures;
    if (st.irreducibility_examples.size() < example_cap)
      st.irreducibility_examples.push_back(
          {tree_instance_string(t), "eccentricity matrix support is disconnected", "irreducible"});
  }
}

}  // namespace detail

/// Enumerate every labeled tree for each n in [n_min, n_max] and check both
/// the least-eigenvalue claims and irreducibility.  Chunks may be distributed
/// over `jobs` threads; results are merged in a fixed order, so the reports
/// are identical regardless of the thread count.
inline tree_sweep_result verify_tree_theorems(const tree_sweep_options& opt = {}) {
  if (opt.n_min < 3) throw std::invalid_argument("verify_tree_theorems: claims start at n=3");
  if (opt.n_max < opt.n_min || opt.n_max > kMaxTreeEnumVertices)
    throw std::invalid_argument("verify_tree_theorems: bad n range");

  detail::stopwatch timer;

  std::vector<std::pair<int, int>> items;  // (n, chunk)
  for (int n = opt.n_min; n <= opt.n_max; ++n)
    for (int c = 0; c < num_tree_chunks(n); ++c) items.emplace_back(n, c);

  std::vector<detail::sweep_stats> stats(items.size());
  const int jobs = std::max(1, std::min<int>(opt.jobs, static_cast<int>(items.size())));
  auto run_items = [&](int tid) {
    for (std::size_t i = tid; i < items.size(); i += jobs)
      for_each_tree_in_chunk(items[i].first, items[i].second, [&](const labeled_tree& t) {
        detail::sweep_one_tree(t, opt.tol, opt.max_recorded_failures, stats[i]);
      });
  };
  if (jobs == 1) {
    run_items(0);
  } else {
    std::vector<std::thread> threads;
    threads.reserve(jobs);
    for (int tid = 0; tid < jobs; ++tid) threads.emplace_back(run_items, tid);
    for (auto& th : threads) th.join();
  }

  detail::sweep_stats total;
  for (const auto& st : stats) {
    total.trees += st.trees;
    total.stars += st.stars;
    total.least_overall = std::min(total.least_overall, st.least_overall);
    total.star_deviation = std::max(total.star_deviation, st.star_deviation);
    total.nonstar_least_max = std::max(total.nonstar_least_max, st.nonstar_least_max);
    total.conjecture_failures += st.conjecture_failures;
    total.irreducibility_failures += st.irreducibility_failures;
    for (const auto& f : st.conjecture_examples)
      if (total.conjecture_examples.size() < opt.max_recorded_failures)
        total.conjecture_examples.push_back(f);
    for (const auto& f : st.irreducibility_examples)
      if (total.irreducibility_examples.size() < opt.max_recorded_failures)
        total.irreducibility_examples.push_back(f);
  }

  const std::string range = "n=" + std::to_string(opt.n_min) + ".." + std::to_string(opt.n_max) +
                            ", all labeled trees";

  tree_sweep_result out;
  out.trees = total.trees;
  out.stars = total.stars;
  out.least_eigenvalue_overall = total.least_overall;
  out.largest_least_eigenvalue_nonstar = total.nonstar_least_max;
  out.conjecture.claim =
      "every tree on >= 3 vertices has least eccentricity eigenvalue <= -2, with equality "
      "exactly for stars and a value <= -3 otherwise";
  out.conjecture.parameter_range = range;
  out.conjecture.instances_checked = total.trees;
  out.conjecture.failure_count = total.conjecture_failures;
  out.conjecture.failures = total.conjecture_examples;
  out.conjecture.max_recorded_failures = opt.max_recorded_failures;
  out.conjecture.max_deviation = total.star_deviation;
  {
    std::ostringstream notes;
    notes.precision(17);
    notes << "stars=" << total.stars << "; least eigenvalue overall=" << total.least_overall
          << "; largest least-eigenvalue among non-stars=" << total.nonstar_least_max;
    out.conjecture.notes = notes.str();
  }
  out.conjecture.elapsed_seconds = timer.seconds();

  out.irreducibility.claim = "the eccentricity matrix of every tree on >= 3 vertices is irreducible";
  out.irreducibility.parameter_range = range;
  out.irreducibility.instances_checked = total.trees;
  out.irreducibility.failure_count = total.irreducibility_failures;
  out.irreducibility.failures = total.irreducibility_examples;
  out.irreducibility.max_recorded_failures = opt.max_recorded_failures;
  out.irreducibility.elapsed_seconds = timer.seconds();
  return out;
}

// ---------------------------------------------------------------------------
// Closed-form family cross-checks: construct the graph, take the definition
// route (BFS distances -> eccentricity matrix -> Jacobi), and compare against
// the closed-form matrix and spectrum.
// ---------------------------------------------------------------------------

namespace detail {

inline void check_family_instance(verification_report& rep, const std::string& instance,
                                  const graph& g, const imatrix& closed_matrix,
                                  const std::vector<double>& closed_eigs, double tol) {
  const imatrix e = ecc_matrix(g);
  double dev = 0;
  if (e != closed_matrix) {
    rep.record_failure(instance, "eccentricity matrix differs from the closed form",
                       "entrywise equality");
  } else {
    dev = max_abs_sorted_diff(eigs(e), closed_eigs);
    if (!(dev <= tol)) {
      std::ostringstream os;
      os.precision(17);
      os << "spectrum deviation " << dev;
      rep.record_failure(instance, os.str(), "<= " + std::to_string(tol));
    }
  }
  rep.record_instance(dev);
}

}  // namespace detail

/// Stars: closed-form matrix, spectrum, and determinant (the determinant is
/// cross-checked against the exact characteristic polynomial for n up to
/// det_n_max).
inline verification_report verify_star_family(int n_min = 3, int n_max = 30, int det_n_max = 20,
                                              double tol = 1e-8) {
  detail::stopwatch timer;
  verification_report rep;
  rep.claim = "star eccentricity matrices match their closed-form spectrum and determinant";
  rep.parameter_range = "n=" + std::to_string(n_min) + ".." + std::to_string(n_max) +
                        " (determinant up to n=" + std::to_string(det_n_max) + ")";
  for (int n = n_min; n <= n_max; ++n) {
    const std::string instance = "n=" + std::to_string(n);
    const imatrix e = ecc_matrix(make_star(n));
    double dev = 0;
    if (e != star_ecc_matrix(n)) {
      rep.record_failure(instance, "eccentricity matrix differs from the closed form",
                         "entrywise equality");
    } else {
      dev = detail::max_abs_sorted_diff(detail::eigs(e), star_ecc_spectrum(n).expand());
      if (!(dev <= tol))
        rep.record_failure(instance, "spectrum deviation " + std::to_string(dev),
                           "<= " + std::to_string(tol));
      if (n <= det_n_max) {
        const bigint det = determinant(e);
        if (det != star_ecc_det(n))
          rep.record_failure(instance, "determinant " + det.str(), star_ecc_det(n).str());
      }
    }
    rep.record_instance(dev);
  }
  rep.elapsed_seconds = timer.seconds();
  return rep;
}

/// Coronas K_n o H: the eccentricity matrix must depend on H only through
/// |H|, so several structurally different H of each order are checked against
/// the same closed form.
inline verification_report verify_corona_family(int n_min = 2, int n_max = 5, int m_min = 1,
                                                int m_max = 5, double tol = 1e-8) {
  detail::stopwatch timer;
  verification_report rep;
  rep.claim = "corona eccentricity matrices match the closed form for every attachment of a "
              "given order";
  rep.parameter_range = "hubs n=" + std::to_string(n_min) + ".." + std::to_string(n_max) +
                        ", attachment order m=" + std::to_string(m_min) + ".." + std::to_string(m_max);
  for (int n = n_min; n <= n_max; ++n)
    for (int m = m_min; m <= m_max; ++m) {
      std::vector<std::pair<std::string, graph>> variants;
      variants.emplace_back("edgeless", graph(m));
      if (m >= 2) variants.emplace_back("path", make_path(m));
      if (m >= 3) variants.emplace_back("complete", make_complete(m));
      const imatrix closed = corona_ecc_matrix(n, m);
      const std::vector<double> closed_eigs = corona_ecc_spectrum(n, m).expand();
      for (const auto& [name, h] : variants)
        detail::check_family_instance(
            rep, "n=" + std::to_string(n) + " m=" + std::to_string(m) + " H=" + name,
            make_corona_complete(n, h), closed, closed_eigs, tol);
    }
  rep.elapsed_seconds = timer.seconds();
  return rep;
}

inline verification_report verify_wheel_family(int rim_min = 4, int rim_max = 12, double tol = 1e-8) {
  detail::stopwatch timer;
  verification_report rep;
  rep.claim = "wheel eccentricity matrices match their closed-form spectrum";
  rep.parameter_range = "rim=" + std::to_string(rim_min) + ".." + std::to_string(rim_max);
  for (int rim = rim_min; rim <= rim_max; ++rim)
    detail::check_family_instance(rep, "rim=" + std::to_string(rim), make_wheel(rim),
                                  wheel_ecc_matrix(rim), wheel_ecc_spectrum(rim).expand(), tol);
  rep.elapsed_seconds = timer.seconds();
  return rep;
}

inline verification_report verify_barbell_family(int n_min = 2, int n_max = 10, double tol = 1e-8) {
  detail::stopwatch timer;
  verification_report rep;
  rep.claim = "barbell eccentricity matrices match their closed-form spectrum";
  rep.parameter_range = "clique n=" + std::to_string(n_min) + ".." + std::to_string(n_max);
  for (int n = n_min; n <= n_max; ++n)
    detail::check_family_instance(rep, "n=" + std::to_string(n), make_barbell(n),
                                  barbell_ecc_matrix(n), barbell_ecc_spectrum(n).expand(), tol);
  rep.elapsed_seconds = timer.seconds();
  return rep;
}

inline verification_report verify_cocktail_family(int n_min = 2, int n_max = 12, double tol = 1e-8) {
  detail::stopwatch timer;
  verification_report rep;
  rep.claim = "cocktail party eccentricity matrices match their closed-form spectrum";
  rep.parameter_range = "n=" + std::to_string(n_min) + ".." + std::to_string(n_max);
  for (int n = n_min; n <= n_max; ++n)
    detail::check_family_instance(rep, "n=" + std::to_string(n), make_cocktail_party(n),
                                  cocktail_ecc_matrix(n), cocktail_ecc_spectrum(n).expand(), tol);
  rep.elapsed_seconds = timer.seconds();
  return rep;
}

/// Complete multipartite graphs with all parts of size >= 2, sampled with a
/// fixed seed so runs are reproducible.
inline verification_report verify_multipartite_family(int trials = 10, int max_total = 12,
                                                      std::uint64_t seed = 42, double tol = 1e-8) {
  detail::stopwatch timer;
  verification_report rep;
  rep.claim = "complete multipartite eccentricity matrices match their closed-form spectrum";
  rep.parameter_range = std::to_string(trials) + " random partitions, total <= " +
                        std::to_string(max_total) + ", every part >= 2, seed=" + std::to_string(seed);
  std::mt19937_64 rng(seed);
  for (int trial = 0; trial < trials; ++trial) {
    std::vector<int> parts;
    for (;;) {
      parts.clear();
      const int k = static_cast<int>(detail::rand_int(rng, 2, 4));
      int total = 0;
      for (int i = 0; i < k; ++i) {
        parts.push_back(static_cast<int>(detail::rand_int(rng, 2, 4)));
        total += parts.back();
      }
      if (total <= max_total) break;
    }
    std::ostringstream name;
    name << "parts=(";
    for (std::size_t i = 0; i < parts.size(); ++i) name << (i ? "," : "") << parts[i];
    name << ")";
    detail::check_family_instance(rep, name.str(), make_complete_multipartite(parts),
                                  multipartite_ecc_matrix(parts),
                                  multipartite_ecc_spectrum(parts).expand(), tol);
  }
  rep.elapsed_seconds = timer.seconds();
  return rep;
}

/// Cones over a fixed roster of regular, non-complete graphs.
inline verification_report verify_cone_family(double tol = 1e-8) {
  detail::stopwatch timer;
  verification_report rep;
  rep.claim = "cone eccentricity matrices over regular non-complete graphs match their closed form";
  rep.parameter_range = "base in {C4, C5, C6, CP(2), CP(3)}";
  std::vector<std::pair<std::string, graph>> bases;
  bases.emplace_back("C4", make_cycle(4));
  bases.emplace_back("C5", make_cycle(5));
  bases.emplace_back("C6", make_cycle(6));
  bases.emplace_back("CP(2)", make_cocktail_party(2));
  bases.emplace_back("CP(3)", make_cocktail_party(3));
  for (const auto& [name, base] : bases)
    detail::check_family_instance(rep, "base=" + name, make_cone(base), cone_ecc_matrix(base),
                                  cone_ecc_spectrum(base).expand(), tol);
  rep.elapsed_seconds = timer.seconds();
  return rep;
}

/// Joins of parts without dominating vertices.
inline verification_report verify_join_family(double tol = 1e-8) {
  detail::stopwatch timer;
  verification_report rep;
  rep.claim = "join eccentricity matrices split into the two complement-adjacency blocks";
  rep.parameter_range = "5 fixed dominating-vertex-free pairs";
  std::vector<std::tuple<std::string, graph, graph>> pairs;
  pairs.emplace_back("P4 v P4", make_path(4), make_path(4));
  pairs.emplace_back("C4 v P5", make_cycle(4), make_path(5));
  pairs.emplace_back("C5 v C6", make_cycle(5), make_cycle(6));
  pairs.emplace_back("2K2 v C4", disjoint_union(make_complete(2), make_complete(2)), make_cycle(4));
  pairs.emplace_back("P6 v 2K3", make_path(6), disjoint_union(make_complete(3), make_complete(3)));
  for (const auto& [name, g1, g2] : pairs)
    detail::check_family_instance(rep, name, join(g1, g2), join_ecc_matrix(g1, g2),
                                  join_ecc_spectrum(g1, g2).expand(), tol);
  rep.elapsed_seconds = timer.seconds();
  return rep;
}

// ---------------------------------------------------------------------------
// Exact inertia checks (characteristic polynomial route, no floating point).
// ---------------------------------------------------------------------------

inline verification_report verify_path_inertia(int n_min = 4, int n_max = 40) {
  detail::stopwatch timer;
  verification_report rep;
  rep.claim = "path eccentricity matrices have inertia (2, 2, n-4), in particular rank 4";
  rep.parameter_range = "n=" + std::to_string(n_min) + ".." + std::to_string(n_max);
  for (int n = n_min; n <= n_max; ++n) {
    const inertia got = matrix_inertia(ecc_matrix(make_path(n)));
    const inertia want = path_ecc_inertia(n);
    if (got != want || got.rank() != 4)
      rep.record_failure("n=" + std::to_string(n),
                         "(+" + std::to_string(got.positive) + ", 0:" + std::to_string(got.zero) +
                             ", -" + std::to_string(got.negative) + ")",
                         "(+2, 0:" + std::to_string(n - 4) + ", -2)");
    rep.record_instance();
  }
  rep.elapsed_seconds = timer.seconds();
  return rep;
}

inline verification_report verify_lollipop_inertia(int m_min = 3, int m_max = 8, int n_min = 2,
                                                   int n_max = 8) {
  detail::stopwatch timer;
  verification_report rep;
  rep.claim = "lollipop eccentricity matrices have inertia (2, 2, m+n-4)";
  rep.parameter_range = "clique m=" + std::to_string(m_min) + ".." + std::to_string(m_max) +
                        ", path n=" + std::to_string(n_min) + ".." + std::to_string(n_max);
  for (int m = m_min; m <= m_max; ++m)
    for (int n = n_min; n <= n_max; ++n) {
      const inertia got = matrix_inertia(ecc_matrix(make_lollipop(m, n)));
      const inertia want = lollipop_ecc_inertia(m, n);
      if (got != want)
        rep.record_failure("m=" + std::to_string(m) + " n=" + std::to_string(n),
                           "(+" + std::to_string(got.positive) + ", 0:" + std::to_string(got.zero) +
                               ", -" + std::to_string(got.negative) + ")",
                           "(+2, 0:" + std::to_string(m + n - 4) + ", -2)");
      rep.record_instance();
    }
  rep.elapsed_seconds = timer.seconds();
  return rep;
}

// ---------------------------------------------------------------------------
// Cospectral, non-isomorphic corona pair.
// ---------------------------------------------------------------------------

inline verification_report verify_corona_cospectral(int n = 2, double tol = 1e-8) {
  detail::stopwatch timer;
  verification_report rep;
  rep.claim = "coronas over different attachments of equal order are eccentricity-cospectral "
              "but non-isomorphic";
  rep.parameter_range = "K_" + std::to_string(n) + " o P4 vs K_" + std::to_string(n) + " o K_{1,3}";
  const graph a = make_corona_complete(n, make_path(4));
  const graph b = make_corona_complete(n, make_star(4));
  const std::vector<double> ea = detail::eigs(ecc_matrix(a));
  const std::vector<double> eb = detail::eigs(ecc_matrix(b));
  const double dev = detail::max_abs_sorted_diff(ea, eb);
  const double dev_closed =
      std::max(detail::max_abs_sorted_diff(ea, corona_ecc_spectrum(n, 4).expand()),
               detail::max_abs_sorted_diff(eb, corona_ecc_spectrum(n, 4).expand()));
  if (!(dev <= tol))
    rep.record_failure("spectra", "deviation " + std::to_string(dev), "<= " + std::to_string(tol));
  if (!(dev_closed <= tol))
    rep.record_failure("closed form", "deviation " + std::to_string(dev_closed),
                       "<= " + std::to_string(tol));
  if (is_isomorphic(a, b))
    rep.record_failure("isomorphism", "graphs are isomorphic", "non-isomorphic");
  rep.record_instance(std::max(dev, dev_closed));
  rep.elapsed_seconds = timer.seconds();
  return rep;
}

// ---------------------------------------------------------------------------
// Randomized property suites for the linear-algebra lemmas.
// ---------------------------------------------------------------------------

/// [[B0, B1], [B1, B0]] has spectrum sigma(B0 + B1) together with
/// sigma(B0 - B1).
inline verification_report verify_block_lemma(int trials = 100, std::uint64_t seed = 42,
                                              double tol = 1e-8) {
  detail::stopwatch timer;
  verification_report rep;
  rep.claim = "spectrum of [[B0, B1], [B1, B0]] is sigma(B0+B1) union sigma(B0-B1)";
  rep.parameter_range = std::to_string(trials) + " random symmetric pairs, seed=" + std::to_string(seed);
  std::mt19937_64 rng(seed);
  for (int trial = 0; trial < trials; ++trial) {
    const int n = static_cast<int>(detail::rand_int(rng, 2, 6));
    const dmatrix b0 = detail::random_symmetric(rng, n, -4, 4);
    const dmatrix b1 = detail::random_symmetric(rng, n, -4, 4);
    dmatrix m(2 * n, 2 * n), sum(n, n), diff(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        m(i, j) = b0(i, j);
        m(n + i, n + j) = b0(i, j);
        m(i, n + j) = b1(i, j);
        m(n + i, j) = b1(i, j);
        sum(i, j) = b0(i, j) + b1(i, j);
        diff(i, j) = b0(i, j) - b1(i, j);
      }
    std::vector<double> expected = symmetric_eigenvalues(sum);
    for (double x : symmetric_eigenvalues(diff)) expected.push_back(x);
    const double dev = detail::max_abs_sorted_diff(symmetric_eigenvalues(m), expected);
    if (!(dev <= tol))
      rep.record_failure("trial " + std::to_string(trial) + " (n=" + std::to_string(n) + ")",
                         "deviation " + std::to_string(dev), "<= " + std::to_string(tol));
    rep.record_instance(dev);
  }
  rep.elapsed_seconds = timer.seconds();
  return rep;
}

/// sigma(A (x) B) consists of all pairwise eigenvalue products.
inline verification_report verify_kronecker_spectrum(int trials = 100, std::uint64_t seed = 42,
                                                     double tol = 1e-8) {
  detail::stopwatch timer;
  verification_report rep;
  rep.claim = "spectrum of a Kronecker product is the multiset of pairwise eigenvalue products";
  rep.parameter_range = std::to_string(trials) + " random symmetric pairs, seed=" + std::to_string(seed);
  std::mt19937_64 rng(seed);
  for (int trial = 0; trial < trials; ++trial) {
    const int na = static_cast<int>(detail::rand_int(rng, 2, 4));
    const int nb = static_cast<int>(detail::rand_int(rng, 2, 4));
    const dmatrix a = detail::random_symmetric(rng, na, -3, 3);
    const dmatrix b = detail::random_symmetric(rng, nb, -3, 3);
    std::vector<double> expected;
    for (double x : symmetric_eigenvalues(a))
      for (double y : symmetric_eigenvalues(b)) expected.push_back(x * y);
    const double dev = detail::max_abs_sorted_diff(symmetric_eigenvalues(kron(a, b)), expected);
    if (!(dev <= tol))
      rep.record_failure("trial " + std::to_string(trial) + " (" + std::to_string(na) + "x" +
                             std::to_string(nb) + ")",
                         "deviation " + std::to_string(dev), "<= " + std::to_string(tol));
    rep.record_instance(dev);
  }
  rep.elapsed_seconds = timer.seconds();
  return rep;
}

/// For B with constant row sums alpha and lambda outside the spectrum,
/// 1^T (lambda I - B)^{-1} 1 = n / (lambda - alpha).
inline verification_report verify_column_sum_lemma(int trials = 50, std::uint64_t seed = 42,
                                                   double tol = 1e-8) {
  detail::stopwatch timer;
  verification_report rep;
  rep.claim = "resolvent row-sum identity for matrices with constant row sums";
  rep.parameter_range = std::to_string(trials) + " random constant-row-sum matrices, seed=" +
                        std::to_string(seed);
  std::mt19937_64 rng(seed);
  for (int trial = 0; trial < trials; ++trial) {
    const int n = static_cast<int>(detail::rand_int(rng, 2, 8));
    const double alpha = static_cast<double>(detail::rand_int(rng, -3, 3));
    dmatrix b = detail::random_symmetric(rng, n, -4, 4);
    for (int i = 0; i < n; ++i) {
      double off = 0;
      for (int j = 0; j < n; ++j)
        if (j != i) off += b(i, j);
      b(i, i) = alpha - off;
    }
    double maxabs = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) maxabs = std::max(maxabs, std::abs(b(i, j)));
    const double lambda = maxabs * n + std::abs(alpha) + 3;  // beyond the spectral radius

    dmatrix shifted(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) shifted(i, j) = (i == j ? lambda : 0) - b(i, j);
    const std::vector<double> x = detail::solve_linear(shifted, std::vector<double>(n, 1.0));
    double sum = 0;
    for (double v : x) sum += v;
    const double dev = std::abs(sum - n / (lambda - alpha));
    if (!(dev <= tol))
      rep.record_failure("trial " + std::to_string(trial) + " (n=" + std::to_string(n) + ")",
                         "deviation " + std::to_string(dev), "<= " + std::to_string(tol));
    rep.record_instance(dev);
  }
  rep.elapsed_seconds = timer.seconds();
  return rep;
}

/// Cauchy interlacing: eigenvalues of a k x k principal submatrix interlace
/// those of the full matrix.
inline verification_report verify_interlacing(int trials = 200, std::uint64_t seed = 42,
                                              double tol = 1e-9) {
  detail::stopwatch timer;
  verification_report rep;
  rep.claim = "eigenvalues of principal submatrices interlace those of the full matrix";
  rep.parameter_range = std::to_string(trials) + " random symmetric matrices, seed=" +
                        std::to_string(seed);
  std::mt19937_64 rng(seed);
  for (int trial = 0; trial < trials; ++trial) {
    const int n = static_cast<int>(detail::rand_int(rng, 3, 10));
    const dmatrix m = detail::random_symmetric(rng, n, -4, 4);
    const int k = static_cast<int>(detail::rand_int(rng, 1, n - 1));
    std::vector<int> idx(n);
    for (int i = 0; i < n; ++i) idx[i] = i;
    for (int i = n - 1; i > 0; --i)
      std::swap(idx[i], idx[detail::rand_int(rng, 0, i)]);
    idx.resize(k);
    std::sort(idx.begin(), idx.end());

    const std::vector<double> lam = symmetric_eigenvalues(m);
    const std::vector<double> mu = symmetric_eigenvalues(principal_submatrix(m, idx));
    double worst = 0;
    for (int i = 0; i < k; ++i) {
      worst = std::max(worst, lam[i] - mu[i]);              // need lam[i] <= mu[i]
      worst = std::max(worst, mu[i] - lam[i + n - k]);      // need mu[i] <= lam[i+n-k]
    }
    if (!(worst <= tol))
      rep.record_failure("trial " + std::to_string(trial) + " (n=" + std::to_string(n) +
                             ", k=" + std::to_string(k) + ")",
                         "interlacing violated by " + std::to_string(worst),
                         "<= " + std::to_string(tol));
    rep.record_instance(std::max(worst, 0.0));
  }
  rep.elapsed_seconds = timer.seconds();
  return rep;
}

}  // namespace eccmat

#endif  // ECCMAT_VERIFY_HPP
