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

#ifndef ECCMAT_CHARPOLY_HPP
#define ECCMAT_CHARPOLY_HPP

#include <stdexcept>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include <eccmat/matrix.hpp>

namespace eccmat {

using bigint = boost::multiprecision::cpp_int;

/// Characteristic polynomial det(xI - A) by the Berkowitz algorithm:
/// division-free, exact over arbitrary-precision integers.  Coefficients are
/// returned ascending (index k holds the coefficient of x^k), so the result
/// has length n+1 and a leading 1 at index n.
inline std::vector<bigint> charpoly(const imatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("charpoly: matrix must be square");
  const int n = a.rows();
  if (n == 0) return {bigint(1)};

  // Leading-first coefficient vector of the current principal submatrix.
  std::vector<bigint> coeff{bigint(1), bigint(-a(0, 0))};
  std::vector<bigint> toep, next, w, mw;

  for (int i = 1; i < n; ++i) {
    // Absorb row/column i.  With M the leading i x i block, R = A[i, 0..i-1]
    // and C = A[0..i-1, i], the new coefficient vector is the convolution of
    // (1, -A[i][i], -R C, -R M C, -R M^2 C, ...) with the previous one.
    toep.assign(i + 2, bigint(0));
    toep[0] = 1;
    toep[1] = -a(i, i);
    w.resize(i);
    for (int k = 0; k < i; ++k) w[k] = a(k, i);
    for (int k = 2; k <= i + 1; ++k) {
      bigint dot = 0;
      for (int j = 0; j < i; ++j) dot += a(i, j) * w[j];
      toep[k] = -dot;
      if (k <= i) {
        mw.assign(i, bigint(0));
        for (int r = 0; r < i; ++r)
          for (int c = 0; c < i; ++c) mw[r] += a(r, c) * w[c];
        w.swap(mw);
      }
    }

    next.assign(i + 2, bigint(0));
    for (int j = 0; j < static_cast<int>(coeff.size()); ++j)
      for (int k = 0; k + j < i + 2 && k < static_cast<int>(toep.size()); ++k)
        next[j + k] += toep[k] * coeff[j];
    coeff.swap(next);
  }

  std::vector<bigint> ascending(coeff.rbegin(), coeff.rend());
  return ascending;
}

/// det(A) recovered from the characteristic polynomial's constant term:
/// det(xI - A) at x = 0 is (-1)^n det(A).
inline bigint determinant_from_charpoly(const std::vector<bigint>& ascending) {
  const int n = static_cast<int>(ascending.size()) - 1;
  return n % 2 == 0 ? ascending[0] : -ascending[0];
}

inline bigint determinant(const imatrix& a) { return determinant_from_charpoly(charpoly(a)); }

}  // namespace eccmat

#endif  // ECCMAT_CHARPOLY_HPP
