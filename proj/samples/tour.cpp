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

// A short tour of the library: build a graph, take its eccentricity matrix,
// and look at the spectrum three different ways.

#include <iostream>

#include <eccmat/eccmat.hpp>

int main() {
  using namespace eccmat;

  // The 4-vertex path is simultaneously a barbell and a corona, which makes
  // it a handy cross-check for the closed forms.
  const graph p4 = make_path(4);
  const imatrix e = ecc_matrix(p4);

  std::cout << "eccentricity matrix of P4:\n" << matrix_to_csv(e);

  std::cout << "\nnumeric spectrum (Jacobi):\n";
  const spectrum numeric = symmetric_spectrum(e);
  for (const auto& line : numeric.lines())
    std::cout << "  " << line.value << "  x" << line.multiplicity << '\n';

  std::cout << "\nclosed form via the barbell B_{2,2}:\n";
  const spectrum closed = barbell_ecc_spectrum(2);
  for (const auto& line : closed.lines())
    std::cout << "  " << line.exact->to_string() << "  x" << line.multiplicity << '\n';

  const inertia in = matrix_inertia(e);
  std::cout << "\nexact inertia: " << in.positive << " positive, " << in.zero << " zero, "
            << in.negative << " negative (rank " << in.rank() << ")\n";

  std::cout << "\ndeterminant: " << determinant(e) << '\n';

  // Stars are the equality case of the least-eigenvalue bound for trees.
  std::cout << "\nleast eigenvalues of small stars:\n";
  for (int n = 3; n <= 6; ++n) {
    const auto ev = symmetric_eigenvalues(to_dmatrix(ecc_matrix(make_star(n))));
    std::cout << "  n=" << n << ": " << ev.front() << '\n';
  }
  return 0;
}
