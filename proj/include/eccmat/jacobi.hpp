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

#ifndef ECCMAT_JACOBI_HPP
#define ECCMAT_JACOBI_HPP

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include <eccmat/matrix.hpp>
#include <eccmat/spectrum.hpp>

namespace eccmat {

struct jacobi_options {
  /// Stop when the off-diagonal Frobenius norm falls below tol * ||A||_F.
  double tol = 1e-12;
  int max_sweeps = 60;
};

/// Cyclic Jacobi on a symmetric matrix stored row-major in `a` (clobbered).
/// Writes eigenvalues ascending into `ev`.  Returns sweeps used, or -1 if the
/// off-diagonal norm never dropped below the threshold.  No allocation, so it
/// is safe in tight loops with stack buffers.
inline int jacobi_eigenvalues_inplace(double* a, int n, double* ev, double rel_tol = 1e-12,
                                      int max_sweeps = 60) {
  double fro2 = 0;
  for (int i = 0; i < n * n; ++i) fro2 += a[i] * a[i];
  const double thresh2 = rel_tol * rel_tol * fro2;

  int sweep = 0;
  for (; sweep < max_sweeps; ++sweep) {
    double off2 = 0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) off2 += 2 * a[p * n + q] * a[p * n + q];
    if (off2 <= thresh2) break;

    for (int p = 0; p < n - 1; ++p)
      for (int q = p + 1; q < n; ++q) {
        const double apq = a[p * n + q];
        if (apq == 0) continue;
        const double theta = (a[q * n + q] - a[p * n + p]) / (2 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1));
        const double c = 1 / std::sqrt(t * t + 1);
        const double s = t * c;
        const double tau = s / (1 + c);

        const double app = a[p * n + p], aqq = a[q * n + q];
        a[p * n + p] = app - t * apq;
        a[q * n + q] = aqq + t * apq;
        a[p * n + q] = 0;
        a[q * n + p] = 0;
        for (int k = 0; k < n; ++k) {
          if (k == p || k == q) continue;
          const double akp = a[k * n + p], akq = a[k * n + q];
          a[k * n + p] = akp - s * (akq + tau * akp);
          a[k * n + q] = akq + s * (akp - tau * akq);
          a[p * n + k] = a[k * n + p];
          a[q * n + k] = a[k * n + q];
        }
      }
  }

  for (int i = 0; i < n; ++i) ev[i] = a[i * n + i];
  std::sort(ev, ev + n);
  return sweep < max_sweeps ? sweep : -1;
}

/// Eigenvalues of a symmetric matrix, ascending.
inline std::vector<double> symmetric_eigenvalues(const dmatrix& m, const jacobi_options& opt = {}) {
  if (!is_symmetric(m)) throw std::invalid_argument("symmetric_eigenvalues: matrix is not symmetric");
  const int n = m.rows();
  std::vector<double> work(m.data(), m.data() + static_cast<std::size_t>(n) * n);
  std::vector<double> ev(n);
  if (jacobi_eigenvalues_inplace(work.data(), n, ev.data(), opt.tol, opt.max_sweeps) < 0)
    throw std::runtime_error("symmetric_eigenvalues: Jacobi iteration did not converge");
  return ev;
}

/// Eigenvalues grouped into multiplicity classes; values closer than
/// 10 * tol * ||M||_F are merged into one line.
inline spectrum symmetric_spectrum(const dmatrix& m, const jacobi_options& opt = {}) {
  const double merge_tol = 10 * opt.tol * frobenius_norm(m);
  return spectrum::from_raw(symmetric_eigenvalues(m, opt), merge_tol);
}

inline spectrum symmetric_spectrum(const imatrix& m, const jacobi_options& opt = {}) {
  return symmetric_spectrum(to_dmatrix(m), opt);
}

}  // namespace eccmat

#endif  // ECCMAT_JACOBI_HPP
