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

#include <eccmat/exact.hpp>
#include <eccmat/spectrum.hpp>

using eccmat::exact_value;

TEST_CASE("surds are normalized to square-free radicands") {
  CHECK(exact_value(0, 1, 8) == exact_value(0, 2, 2));
  CHECK(exact_value(0, 1, 12) == exact_value(0, 2, 3));
  CHECK(exact_value(0, 3, 50) == exact_value(0, 15, 2));
  // A perfect-square radicand folds into the rational part: 2 + 2*sqrt(4) = 6.
  CHECK(exact_value(2, 2, 4) == exact_value::rational(6));
  CHECK(exact_value(2, 2, 4, 4) == exact_value::rational(3, 2));
}

TEST_CASE("rational normalization fixes signs and reduces") {
  CHECK(exact_value::rational(2, -4) == exact_value::rational(-1, 2));
  CHECK(exact_value::rational(-6, -4) == exact_value::rational(3, 2));
  CHECK(exact_value::rational(0, 7) == exact_value::rational(0));
  const exact_value v = exact_value::rational(-1, 2);
  CHECK(v.a == -1);
  CHECK(v.c == 2);
}

TEST_CASE("invalid components are rejected") {
  CHECK_THROWS_AS(exact_value(1, 1, 2, 0), std::invalid_argument);
  CHECK_THROWS_AS(exact_value(1, 1, -3), std::invalid_argument);
}

TEST_CASE("to_double") {
  CHECK(exact_value(3, 1, 13).to_double() == Catch::Approx(3 + std::sqrt(13.0)).epsilon(1e-15));
  CHECK(exact_value(5, -1, 31).to_double() == Catch::Approx(5 - std::sqrt(31.0)).epsilon(1e-15));
  CHECK(exact_value::rational(-2).to_double() == -2.0);
}

TEST_CASE("arithmetic on a shared radicand") {
  const exact_value phi(1, 1, 5, 2);       // (1 + sqrt 5)/2
  const exact_value phi_bar(1, -1, 5, 2);  // (1 - sqrt 5)/2
  CHECK(phi + phi_bar == exact_value::rational(1));
  CHECK(phi * phi_bar == exact_value::rational(-1));
  CHECK(-phi == exact_value(-1, -1, 5, 2));
  CHECK(3 * phi == exact_value(3, 3, 5, 2));
  CHECK(phi * exact_value::rational(2) == exact_value(1, 1, 5));
  CHECK_THROWS_AS(phi + exact_value(0, 1, 3), std::invalid_argument);
  CHECK_THROWS_AS(phi * exact_value(0, 1, 3), std::invalid_argument);
}

TEST_CASE("printing") {
  CHECK(exact_value::rational(-2).to_string() == "-2");
  CHECK(exact_value::rational(3, 2).to_string() == "3/2");
  CHECK(exact_value(3, 1, 13).to_string() == "(3 + sqrt(13))");
  CHECK(exact_value(3, -2, 5, 4).to_string() == "(3 - 2*sqrt(5))/4");
}

TEST_CASE("json serialization carries the normalized components") {
  const auto j = eccmat::exact_to_json(exact_value(0, 1, 8));
  CHECK(j["a"] == 0);
  CHECK(j["b"] == 2);
  CHECK(j["r"] == 2);
  CHECK(j["c"] == 1);
}

TEST_CASE("spectrum keeps lines sorted and expands multiplicities") {
  eccmat::spectrum s;
  s.add(exact_value::rational(-2), 3);
  s.add(exact_value(3, 1, 13), 1);
  s.add(exact_value(3, -1, 13), 1);
  CHECK(s.total_multiplicity() == 5);
  const auto xs = s.expand();
  REQUIRE(xs.size() == 5);
  CHECK(xs[0] == -2.0);
  CHECK(xs[2] == -2.0);
  CHECK(xs[3] == Catch::Approx(3 - std::sqrt(13.0)));
  CHECK(xs[4] == Catch::Approx(3 + std::sqrt(13.0)));
  CHECK(s.min_value() == -2.0);
}

TEST_CASE("spectrum::from_raw merges nearby values") {
  const eccmat::spectrum s =
      eccmat::spectrum::from_raw({1.0, 1.0 + 1e-12, 2.0, -3.0, -3.0 + 5e-13}, 1e-11);
  REQUIRE(s.lines().size() == 3);
  CHECK(s.lines()[0].multiplicity == 2);  // the -3 pair
  CHECK(s.lines()[1].multiplicity == 2);  // the 1 pair
  CHECK(s.lines()[2].multiplicity == 1);
  CHECK(s.lines()[0].value == Catch::Approx(-3.0));
}

TEST_CASE("max_spectrum_deviation compares expanded multisets") {
  eccmat::spectrum a, b;
  a.add(1.0, 2);
  a.add(-1.0, 1);
  b.add(1.0 + 1e-9, 1);
  b.add(1.0, 1);
  b.add(-1.0, 1);
  CHECK(eccmat::max_spectrum_deviation(a, b) == Catch::Approx(1e-9).margin(1e-12));
  eccmat::spectrum c;
  c.add(1.0, 1);
  CHECK_THROWS_AS(eccmat::max_spectrum_deviation(a, c), std::invalid_argument);
}
