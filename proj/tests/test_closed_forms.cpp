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

#include <vector>

#include <eccmat/closed_forms.hpp>
#include <eccmat/graph.hpp>
#include <eccmat/inertia.hpp>
#include <eccmat/jacobi.hpp>
#include <eccmat/metric.hpp>

using namespace eccmat;

namespace {

// Largest gap between a closed-form spectrum and the Jacobi spectrum of the
// matrix the formula claims to describe.
double against_jacobi(const spectrum& predicted, const imatrix& m) {
  return max_spectrum_deviation(predicted, symmetric_spectrum(m));
}

void check_values(const spectrum& s, const std::vector<double>& expected, double margin = 1e-12) {
  const auto got = s.expand();
  REQUIRE(got.size() == expected.size());
  for (std::size_t i = 0; i < got.size(); ++i)
    CHECK(got[i] == Catch::Approx(expected[i]).margin(margin));
}

}  // namespace

TEST_CASE("star: matrix, spectrum, determinant") {
  for (int n = 2; n <= 9; ++n) {
    CHECK(star_ecc_matrix(n) == ecc_matrix(make_star(n)));
    CHECK(against_jacobi(star_ecc_spectrum(n), star_ecc_matrix(n)) < 1e-10);
  }

  // n = 5: eigenvalues 3 +- sqrt(13) and -2 (x3), det 32.
  check_values(star_ecc_spectrum(5),
               {-2, -2, -2, -0.6055512754639891, 6.605551275463989});
  const spectrum s5 = star_ecc_spectrum(5);
  const auto& lines = s5.lines();
  REQUIRE(lines.size() == 3);
  CHECK(lines[0].multiplicity == 3);
  REQUIRE(lines[2].exact.has_value());
  CHECK(lines[2].exact->to_string() == "(3 + sqrt(13))");
  CHECK(star_ecc_det(5) == 32);

  // K_2 degenerates to eigenvalues +-1 with no -2 line at all.
  check_values(star_ecc_spectrum(2), {-1, 1});
  const spectrum s2 = star_ecc_spectrum(2);
  CHECK(s2.lines().size() == 2);

  CHECK_THROWS_AS(star_ecc_matrix(1), graph_error);
  CHECK_THROWS_AS(star_ecc_spectrum(1), graph_error);
  CHECK_THROWS_AS(star_ecc_det(1), graph_error);
}

TEST_CASE("bordered block: matrix and spectrum") {
  const imatrix a = corona_block_matrix(2);
  CHECK(a(0, 0) == 0);
  CHECK(a(0, 1) == 2);
  CHECK(a(1, 1) == 3);
  CHECK(a(1, 2) == 3);
  CHECK(trace(a) == 6);

  // m = 2: 0 and 3 +- sqrt(17).
  check_values(corona_block_spectrum(2), {-1.1231056256176606, 0, 7.123105625617661});
  for (int m = 1; m <= 6; ++m)
    CHECK(against_jacobi(corona_block_spectrum(m), corona_block_matrix(m)) < 1e-10);
  CHECK_THROWS_AS(corona_block_matrix(0), graph_error);
}

TEST_CASE("corona: matrix equals the Kronecker form, spectrum is exact") {
  for (int n = 2; n <= 4; ++n)
    for (int m = 1; m <= 3; ++m) {
      CHECK(corona_ecc_matrix(n, m) == ecc_matrix(make_corona_complete(n, graph(m))));
      CHECK(against_jacobi(corona_ecc_spectrum(n, m), corona_ecc_matrix(n, m)) < 1e-10);
    }

  // The eccentricity matrix ignores the attached graph's own edges.
  CHECK(ecc_matrix(make_corona_complete(3, graph(2))) ==
        ecc_matrix(make_corona_complete(3, make_path(2))));
  CHECK(ecc_matrix(make_corona_complete(2, graph(3))) ==
        ecc_matrix(make_corona_complete(2, make_complete(3))));

  // n = 3, m = 1: roots of x^2 - 3x - 4 are 4 and -1, so the spectrum is
  // {-4 x2, -2, 1 x2, 8}.
  check_values(corona_ecc_spectrum(3, 1), {-4, -4, -2, 1, 1, 8});

  CHECK_THROWS_AS(corona_ecc_matrix(1, 2), graph_error);
  CHECK_THROWS_AS(corona_ecc_spectrum(2, 0), graph_error);
}

TEST_CASE("barbell: matrix and spectrum") {
  for (int n = 2; n <= 6; ++n) {
    CHECK(barbell_ecc_matrix(n) == ecc_matrix(make_barbell(n)));
    CHECK(against_jacobi(barbell_ecc_spectrum(n), barbell_ecc_matrix(n)) < 1e-10);
  }

  // n = 3: +-(6 +- sqrt(68))/2 = +-(3 +- sqrt(17)) plus two zeros.
  check_values(barbell_ecc_spectrum(3),
               {-7.123105625617661, -1.1231056256176606, 0, 0, 1.1231056256176606,
                7.123105625617661});

  CHECK_THROWS_AS(barbell_ecc_matrix(1), graph_error);
  CHECK_THROWS_AS(barbell_ecc_spectrum(1), graph_error);
}

TEST_CASE("cocktail party: matrix and spectrum") {
  for (int n = 2; n <= 6; ++n) {
    CHECK(cocktail_ecc_matrix(n) == ecc_matrix(make_cocktail_party(n)));
    CHECK(against_jacobi(cocktail_ecc_spectrum(n), cocktail_ecc_matrix(n)) < 1e-12);
  }
  check_values(cocktail_ecc_spectrum(3), {-2, -2, -2, 2, 2, 2});
  CHECK_THROWS_AS(cocktail_ecc_matrix(1), graph_error);
}

TEST_CASE("complete multipartite: matrix and spectrum") {
  const std::vector<std::vector<int>> cases = {{2, 2}, {2, 3}, {3, 3, 3}, {2, 2, 2, 2}, {4, 2, 3}};
  for (const auto& parts : cases) {
    CHECK(multipartite_ecc_matrix(parts) == ecc_matrix(make_complete_multipartite(parts)));
    CHECK(against_jacobi(multipartite_ecc_spectrum(parts), multipartite_ecc_matrix(parts)) < 1e-12);
  }
  check_values(multipartite_ecc_spectrum({3, 3, 3}), {-2, -2, -2, -2, -2, -2, 4, 4, 4});
  check_values(multipartite_ecc_spectrum({2, 3}), {-2, -2, -2, 2, 4});
}

TEST_CASE("multipartite formulas reject singleton parts") {
  CHECK_THROWS_AS(multipartite_ecc_matrix({1, 4}), graph_error);
  CHECK_THROWS_AS(multipartite_ecc_spectrum({1, 4}), graph_error);
  CHECK_THROWS_AS(multipartite_ecc_spectrum({2, 1, 2}), graph_error);

  // The rejection is not cosmetic: K_{1,4} is the star on 5 vertices, whose
  // eccentricity matrix is nonsingular, while the block-diagonal form would
  // predict a zero eigenvalue for the singleton part.
  CHECK(matrix_inertia(ecc_matrix(make_complete_multipartite({1, 4}))).zero == 0);
  CHECK(ecc_matrix(make_complete_multipartite({1, 4})) == ecc_matrix(make_star(5)));
}

TEST_CASE("cone: matrix and spectrum over regular non-complete bases") {
  const std::vector<graph> bases = {make_cycle(4), make_cycle(5), make_cycle(6),
                                    make_cocktail_party(2), make_cocktail_party(3),
                                    make_complete_bipartite(3, 3)};
  for (const graph& g : bases) {
    CHECK(cone_ecc_matrix(g) == ecc_matrix(make_cone(g)));
    CHECK(against_jacobi(cone_ecc_spectrum(g), cone_ecc_matrix(g)) < 1e-10);
  }

  CHECK_THROWS_AS(cone_ecc_matrix(make_complete(4)), graph_error);
  CHECK_THROWS_AS(cone_ecc_spectrum(make_complete(4)), graph_error);
  CHECK_THROWS_AS(cone_ecc_matrix(make_path(3)), graph_error);   // irregular
  CHECK_THROWS_AS(cone_ecc_spectrum(make_path(3)), graph_error);
}

TEST_CASE("wheel: matrix and spectrum") {
  for (int rim = 4; rim <= 9; ++rim) {
    CHECK(wheel_ecc_matrix(rim) == ecc_matrix(make_wheel(rim)));
    CHECK(wheel_ecc_matrix(rim) == cone_ecc_matrix(make_cycle(rim)));
    CHECK(against_jacobi(wheel_ecc_spectrum(rim), wheel_ecc_matrix(rim)) < 1e-10);
    CHECK(max_spectrum_deviation(wheel_ecc_spectrum(rim), cone_ecc_spectrum(make_cycle(rim))) <
          1e-10);
  }

  // rim = 5: 2 +- 3 = {5, -1} plus the golden-ratio pairs.
  check_values(wheel_ecc_spectrum(5),
               {-3.2360679774997898, -3.2360679774997898, -1, 1.2360679774997898,
                1.2360679774997898, 5});

  CHECK_THROWS_AS(wheel_ecc_matrix(3), graph_error);
  CHECK_THROWS_AS(wheel_ecc_spectrum(3), graph_error);
}

TEST_CASE("join: matrix and spectrum") {
  const std::vector<std::pair<graph, graph>> cases = {
      {make_path(4), make_path(4)},
      {make_cycle(4), make_path(5)},
      {make_cycle(5), make_cycle(6)},
      {disjoint_union(make_complete(2), make_complete(2)), make_cycle(4)}};
  for (const auto& [g1, g2] : cases) {
    CHECK(join_ecc_matrix(g1, g2) == ecc_matrix(join(g1, g2)));
    CHECK(against_jacobi(join_ecc_spectrum(g1, g2), join_ecc_matrix(g1, g2)) < 1e-10);
  }

  // P3's center dominates, so the join formula must refuse it.
  CHECK_THROWS_AS(join_ecc_matrix(make_path(3), make_path(4)), graph_error);
  CHECK_THROWS_AS(join_ecc_spectrum(make_path(4), make_star(4)), graph_error);
}

TEST_CASE("path inertia closed form") {
  for (int n = 4; n <= 12; ++n)
    CHECK(path_ecc_inertia(n) == matrix_inertia(ecc_matrix(make_path(n))));
  CHECK(path_ecc_inertia(10) == inertia{2, 6, 2});
  CHECK(path_ecc_inertia(10).rank() == 4);
  CHECK_THROWS_AS(path_ecc_inertia(3), graph_error);
}

TEST_CASE("lollipop inertia closed form") {
  for (int m = 3; m <= 6; ++m)
    for (int n = 2; n <= 5; ++n)
      CHECK(lollipop_ecc_inertia(m, n) == matrix_inertia(ecc_matrix(make_lollipop(m, n))));
  CHECK(lollipop_ecc_inertia(3, 2) == inertia{2, 1, 2});
  CHECK_THROWS_AS(lollipop_ecc_inertia(2, 3), graph_error);
  CHECK_THROWS_AS(lollipop_ecc_inertia(3, 1), graph_error);

  // A single-vertex tail genuinely breaks the formula (two clique vertices
  // share a row), which is why the precondition demands n >= 2.
  CHECK(matrix_inertia(ecc_matrix(make_lollipop(3, 1))) != inertia{2, 0, 2});
}

TEST_CASE("sentinel: the three descriptions of P4 agree") {
  const graph p4 = make_path(4);
  const graph b2 = make_barbell(2);
  const graph c21 = make_corona_complete(2, graph(1));
  CHECK(is_isomorphic(p4, b2));
  CHECK(is_isomorphic(p4, c21));

  const std::vector<double> expected = {-4, -1, 1, 4};
  check_values(barbell_ecc_spectrum(2), expected);
  check_values(corona_ecc_spectrum(2, 1), expected);
  CHECK(against_jacobi(barbell_ecc_spectrum(2), ecc_matrix(p4)) < 1e-12);
  CHECK(max_spectrum_deviation(barbell_ecc_spectrum(2), corona_ecc_spectrum(2, 1)) == 0.0);

  CHECK(matrix_inertia(ecc_matrix(p4)) == inertia{2, 0, 2});
  CHECK(determinant(ecc_matrix(p4)) == 16);
}
