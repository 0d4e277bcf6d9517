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

#ifndef ECCMAT_LINALG_HPP
#define ECCMAT_LINALG_HPP

// Numeric and exact linear algebra: Jacobi eigensolver, division-free
// characteristic polynomial, and inertia derived from it.

#include <eccmat/charpoly.hpp>
#include <eccmat/inertia.hpp>
#include <eccmat/jacobi.hpp>
#include <eccmat/matrix.hpp>
#include <eccmat/spectrum.hpp>

#endif  // ECCMAT_LINALG_HPP
