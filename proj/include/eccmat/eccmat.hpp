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

#ifndef ECCMAT_ECCMAT_HPP
#define ECCMAT_ECCMAT_HPP

// Umbrella header for the whole library.

#include <eccmat/closed_forms.hpp>
#include <eccmat/exact.hpp>
#include <eccmat/formats.hpp>
#include <eccmat/graph.hpp>
#include <eccmat/linalg.hpp>
#include <eccmat/metric.hpp>
#include <eccmat/tree_enum.hpp>
#include <eccmat/verify.hpp>

#endif  // ECCMAT_ECCMAT_HPP
