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

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>
#include <vector>

#include <eccmat/charpoly.hpp>
#include <eccmat/graph.hpp>
#include <eccmat/inertia.hpp>
#include <eccmat/jacobi.hpp>
#include <eccmat/matrix.hpp>
#include <eccmat/metric.hpp>
#include <eccmat/verify.hpp>

using namespace eccmat;

namespace {

// Independent determinant oracle: fraction-free Gaussian elimination
// (Bareiss).  Every intermediate quantity is an exact integer, so the result
// does not depend on the code under test.
bigint bareiss_det(std::vector<std::vector<bigint>> a) {
  const int n = static_cast<int>(a.size());
  if (n == 0) return 1;
  bigint prev = 1;
  int sign = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      int pivot = -1;
      for (int r = k + 1; r < n; ++r)
        if (a[r][k] != 0) {
          pivot = r;
          break;
        }
      if (pivot < 0) return 0;
      std::swap(a[k], a[pivot]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

bigint bareiss_det(const imatrix& m) {
  std::vector<std::vector<bigint>> a(m.rows(), std::vector<bigint>(m.cols()));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) a[i][j] = m(i, j);
  return bareiss_det(std::move(a));
}

// det(x0*I - A), exactly.
bigint charpoly_at(const imatrix& m, std::int64_t x0) {
  std::vector<std::vector<bigint>> a(m.rows(), std::vector<bigint>(m.cols()));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) a[i][j] = (i == j ? bigint(x0) - m(i, j) : -bigint(m(i, j)));
  return bareiss_det(std::move(a));
}

bigint eval_ascending(const std::vector<bigint>& coeffs, std::int64_t x0) {
  bigint acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x0 + *it;
  return acc;
}

imatrix random_int_matrix(std::mt19937_64& rng, int n, bool symmetric) {
  imatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = symmetric ? i : 0; j < n; ++j) {
      const std::int64_t v = static_cast<std::int64_t>(rng() % 9) - 4;
      m(i, j) = v;
      if (symmetric) m(j, i) = v;
    }
  return m;
}

}  // namespace

TEST_CASE("Jacobi solves small matrices with known spectra") {
  dmatrix a(2, 2);
  a(0, 0) = a(1, 1) = 2;
  a(0, 1) = a(1, 0) = 1;
  auto ev = symmetric_eigenvalues(a);
  REQUIRE(ev.size() == 2);
  CHECK(ev[0] == Catch::Approx(1.0));
  CHECK(ev[1] == Catch::Approx(3.0));

  dmatrix b(2, 2, 0.0);
  b(0, 1) = b(1, 0) = 7;
  ev = symmetric_eigenvalues(b);
  CHECK(ev[0] == Catch::Approx(-7.0));
  CHECK(ev[1] == Catch::Approx(7.0));

  const auto id = symmetric_spectrum(dmatrix::identity(5));
  REQUIRE(id.lines().size() == 1);
  CHECK(id.lines()[0].multiplicity == 5);
  CHECK(id.lines()[0].value == Catch::Approx(1.0));

  dmatrix one(1, 1, -3.5);
  CHECK(symmetric_eigenvalues(one) == std::vector<double>{-3.5});
}

TEST_CASE("Jacobi rejects non-symmetric input") {
  dmatrix a(2, 2, 0.0);
  a(0, 1) = 1;
  CHECK_THROWS_AS(symmetric_eigenvalues(a), std::invalid_argument);
}

TEST_CASE("Jacobi eigenvalues satisfy exact trace and charpoly identities") {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 6);
    const imatrix m = random_int_matrix(rng, n, /*symmetric=*/true);
    const auto ev = symmetric_eigenvalues(to_dmatrix(m));

    double tr = 0, fro2 = 0;
    for (double x : ev) {
      tr += x;
      fro2 += x * x;
    }
    CHECK(tr == Catch::Approx(static_cast<double>(trace(m))).margin(1e-9));
    const double f = frobenius_norm(m);
    CHECK(fro2 == Catch::Approx(f * f).margin(1e-8));

    // The eigenvalues are the roots of the (independently evaluated)
    // characteristic polynomial: |p(lambda)| must be tiny relative to the
    // scale of p near lambda.
    for (double lambda : ev) {
      const bigint below = charpoly_at(m, static_cast<std::int64_t>(std::floor(lambda)));
      const bigint above = charpoly_at(m, static_cast<std::int64_t>(std::floor(lambda)) + 1);
      // lambda lies in [floor, floor+1]; a sign change or a zero endpoint
      // certifies a root of the exact charpoly in the same unit interval.
      const bool bracketed = below == 0 || above == 0 || (below < 0) != (above < 0);
      if (!bracketed) {
        // Multiple roots in one interval can cancel the sign change; fall
        // back to checking the minimum over the interval is consistent with
        // a nearby root: |p| at the nearest integer is bounded by the
        // product of distances to all eigenvalues.
        double bound = 1;
        const double x = std::round(lambda);
        for (double mu : ev) bound *= std::abs(x - mu) + 1e-6;
        CHECK(std::abs(static_cast<double>(charpoly_at(m, static_cast<std::int64_t>(x)))) <=
              bound * (1 + 1e-6));
      }
    }
  }
}

TEST_CASE("characteristic polynomial of known matrices") {
  CHECK(charpoly(imatrix::identity(3)) == std::vector<bigint>{-1, 3, -3, 1});

  imatrix swap2(2, 2);
  swap2(0, 1) = swap2(1, 0) = 1;
  CHECK(charpoly(swap2) == std::vector<bigint>{-1, 0, 1});

  CHECK(charpoly(imatrix(3, 3)) == std::vector<bigint>{0, 0, 0, 1});
  CHECK(charpoly(imatrix(0, 0)) == std::vector<bigint>{1});

  imatrix a(2, 2);
  a(0, 0) = 1, a(0, 1) = 2, a(1, 0) = 3, a(1, 1) = 4;  // x^2 - 5x - 2
  CHECK(charpoly(a) == std::vector<bigint>{-2, -5, 1});
}

TEST_CASE("charpoly agrees with fraction-free evaluation at integer points") {
  std::mt19937_64 rng(202);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 7);
    const imatrix m = random_int_matrix(rng, n, /*symmetric=*/trial % 2 == 0);
    const auto p = charpoly(m);
    REQUIRE(p.size() == static_cast<std::size_t>(n) + 1);
    CHECK(p.back() == 1);
    for (std::int64_t x0 : {-3, -1, 0, 1, 2, 5}) CHECK(eval_ascending(p, x0) == charpoly_at(m, x0));
  }
}

TEST_CASE("determinant agrees with Bareiss elimination") {
  std::mt19937_64 rng(303);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 7);
    const imatrix m = random_int_matrix(rng, n, /*symmetric=*/trial % 3 == 0);
    CHECK(determinant(m) == bareiss_det(m));
  }
  CHECK(determinant(imatrix::identity(4)) == 1);
  CHECK(determinant(imatrix(3, 3)) == 0);
}

TEST_CASE("star determinant closed form matches direct elimination") {
  for (int n = 3; n <= 10; ++n) {
    const imatrix e = ecc_matrix(make_star(n));
    CHECK(star_ecc_det(n) == bareiss_det(e));
    CHECK(star_ecc_det(n) == determinant(e));
  }
  CHECK(star_ecc_det(3) == 4);
  CHECK(star_ecc_det(5) == 32);
  CHECK(star_ecc_det(6) == -80);
}

TEST_CASE("exact inertia matches Jacobi sign counts") {
  std::mt19937_64 rng(404);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 6);
    const imatrix m = random_int_matrix(rng, n, /*symmetric=*/true);
    const inertia in = matrix_inertia(m);

    // Small integer matrices have no nonzero eigenvalue anywhere near 1e-8,
    // so sign counting on the numeric spectrum is unambiguous.
    inertia numeric;
    for (double x : symmetric_eigenvalues(to_dmatrix(m))) {
      if (x > 1e-8)
        ++numeric.positive;
      else if (x < -1e-8)
        ++numeric.negative;
      else
        ++numeric.zero;
    }
    CHECK(in == numeric);
    CHECK(in.rank() == n - in.zero);
  }
}

TEST_CASE("inertia of diagonal and known matrices") {
  imatrix d(4, 4);
  d(0, 0) = 5, d(1, 1) = -2, d(2, 2) = 0, d(3, 3) = -7;
  CHECK(matrix_inertia(d) == inertia{1, 1, 2});

  CHECK(matrix_inertia(imatrix::identity(3)) == inertia{3, 0, 0});
  CHECK(matrix_inertia(imatrix(2, 2)) == inertia{0, 2, 0});

  CHECK(matrix_inertia(ecc_matrix(make_path(4))) == inertia{2, 0, 2});
  CHECK(matrix_inertia(ecc_matrix(make_path(10))) == inertia{2, 6, 2});
  CHECK(matrix_inertia(ecc_matrix(make_path(10))).rank() == 4);
  CHECK(matrix_inertia(ecc_matrix(make_lollipop(3, 2))) == inertia{2, 1, 2});
}

TEST_CASE("inertia rejects malformed input") {
  CHECK_THROWS_AS(inertia_from_charpoly({}), std::invalid_argument);
  CHECK_THROWS_AS(inertia_from_charpoly({bigint(1), bigint(0)}), std::invalid_argument);
  imatrix ns(2, 2);
  ns(0, 1) = 1;
  CHECK_THROWS_AS(matrix_inertia(ns), std::invalid_argument);
}

TEST_CASE("irreducibility test") {
  CHECK(is_irreducible(ecc_matrix(make_path(4))));
  CHECK(is_irreducible(ecc_matrix(make_star(6))));
  CHECK_FALSE(is_irreducible(ecc_matrix(make_complete_bipartite(2, 3))));
  CHECK_FALSE(is_irreducible(ecc_matrix(make_cycle(6))));
  CHECK(is_irreducible(imatrix(1, 1)));
}
