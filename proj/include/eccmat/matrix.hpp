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

#ifndef ECCMAT_MATRIX_HPP
#define ECCMAT_MATRIX_HPP

#include <cmath>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace eccmat {

/// Dense row-major matrix.
template <typename T>
class basic_matrix {
 public:
  basic_matrix() = default;
  basic_matrix(int rows, int cols, T init = T{})
      : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, init) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("matrix dimensions must be nonnegative");
  }

  static basic_matrix identity(int n) {
    basic_matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = T{1};
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  T& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
  const T& operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }

  T* data() { return data_.data(); }
  const T* data() const { return data_.data(); }

  bool operator==(const basic_matrix&) const = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<T> data_;
};

using imatrix = basic_matrix<std::int64_t>;
using dmatrix = basic_matrix<double>;

inline dmatrix to_dmatrix(const imatrix& m) {
  dmatrix out(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out(i, j) = static_cast<double>(m(i, j));
  return out;
}

template <typename T>
bool is_symmetric(const basic_matrix<T>& m) {
  if (m.rows() != m.cols()) return false;
  for (int i = 0; i < m.rows(); ++i)
    for (int j = i + 1; j < m.cols(); ++j)
      if (m(i, j) != m(j, i)) return false;
  return true;
}

template <typename T>
T trace(const basic_matrix<T>& m) {
  T t{};
  for (int i = 0; i < std::min(m.rows(), m.cols()); ++i) t += m(i, i);
  return t;
}

template <typename T>
double frobenius_norm(const basic_matrix<T>& m) {
  double s = 0;
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) {
      double v = static_cast<double>(m(i, j));
      s += v * v;
    }
  return std::sqrt(s);
}

/// Kronecker product: block matrix [a_ij * B].
template <typename T>
basic_matrix<T> kron(const basic_matrix<T>& a, const basic_matrix<T>& b) {
  basic_matrix<T> out(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      const T& f = a(i, j);
      for (int k = 0; k < b.rows(); ++k)
        for (int l = 0; l < b.cols(); ++l) out(i * b.rows() + k, j * b.cols() + l) = f * b(k, l);
    }
  return out;
}

/// Square submatrix with rows and columns both restricted to `index_set`.
template <typename T>
basic_matrix<T> principal_submatrix(const basic_matrix<T>& m, const std::vector<int>& index_set) {
  if (m.rows() != m.cols()) throw std::invalid_argument("principal_submatrix: matrix must be square");
  std::vector<bool> seen(m.rows(), false);
  for (int idx : index_set) {
    if (idx < 0 || idx >= m.rows())
      throw std::invalid_argument("principal_submatrix: index " + std::to_string(idx) + " out of range");
    if (seen[idx]) throw std::invalid_argument("principal_submatrix: duplicate index " + std::to_string(idx));
    seen[idx] = true;
  }
  const int k = static_cast<int>(index_set.size());
  basic_matrix<T> out(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) out(i, j) = m(index_set[i], index_set[j]);
  return out;
}

inline std::string matrix_to_csv(const imatrix& m) {
  std::ostringstream os;
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) {
      if (j) os << ',';
      os << m(i, j);
    }
    os << '\n';
  }
  return os.str();
}

inline nlohmann::json matrix_to_json(const imatrix& m) {
  nlohmann::json entries = nlohmann::json::array();
  for (int i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    entries.push_back(std::move(row));
  }
  return nlohmann::json{{"n", m.rows()}, {"entries", std::move(entries)}};
}

}  // namespace eccmat

#endif  // ECCMAT_MATRIX_HPP
