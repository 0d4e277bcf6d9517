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

#ifndef ECCMAT_INERTIA_HPP
#define ECCMAT_INERTIA_HPP

#include <stdexcept>
#include <vector>

#include <json.hpp>

#include <eccmat/charpoly.hpp>
#include <eccmat/matrix.hpp>

namespace eccmat {

/// Signature of a symmetric matrix: eigenvalue counts by sign.
struct inertia {
  int positive = 0;
  int zero = 0;
  int negative = 0;

  int rank() const { return positive + negative; }
  bool operator==(const inertia&) const = default;
};

namespace detail {

/// Descartes sign variations over the nonzero coefficients.
inline int sign_variations(const std::vector<bigint>& coeffs) {
  int variations = 0;
  int last_sign = 0;
  for (const bigint& c : coeffs) {
    if (c == 0) continue;
    int s = c > 0 ? 1 : -1;
    if (last_sign != 0 && s != last_sign) ++variations;
    last_sign = s;
  }
  return variations;
}

}  // namespace detail

/// Exact inertia from an ascending characteristic polynomial whose roots are
/// all real (true for any symmetric matrix).  The zero count is the number of
/// leading zero coefficients; Descartes' rule is exact on the remaining
/// real-rooted polynomial, giving the positive count as the sign variations
/// of p(x) and the negative count as those of p(-x).
inline inertia inertia_from_charpoly(const std::vector<bigint>& ascending) {
  if (ascending.empty() || ascending.back() == 0)
    throw std::invalid_argument("inertia_from_charpoly: polynomial must be monic and nonempty");
  const int degree = static_cast<int>(ascending.size()) - 1;

  int zero = 0;
  while (zero < degree && ascending[zero] == 0) ++zero;

  std::vector<bigint> reduced(ascending.begin() + zero, ascending.end());
  int positive = detail::sign_variations(reduced);
  for (std::size_t k = 1; k < reduced.size(); k += 2) reduced[k] = -reduced[k];
  int negative = detail::sign_variations(reduced);

  if (positive + negative + zero != degree)
    throw std::logic_error("inertia_from_charpoly: sign variation counts are inconsistent; "
                           "the polynomial does not look real-rooted");
  return inertia{positive, zero, negative};
}

/// Exact inertia of a symmetric integer matrix.
inline inertia matrix_inertia(const imatrix& a) {
  if (!is_symmetric(a)) throw std::invalid_argument("matrix_inertia: matrix must be symmetric");
  return inertia_from_charpoly(charpoly(a));
}

inline nlohmann::json inertia_to_json(const inertia& in) {
  return nlohmann::json{
      {"positive", in.positive}, {"zero", in.zero}, {"negative", in.negative}, {"rank", in.rank()}};
}

}  // namespace eccmat

#endif  // ECCMAT_INERTIA_HPP
