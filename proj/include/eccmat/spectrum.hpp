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

#ifndef ECCMAT_SPECTRUM_HPP
#define ECCMAT_SPECTRUM_HPP

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <vector>

#include <json.hpp>

#include <eccmat/exact.hpp>

namespace eccmat {

/// One eigenvalue with its multiplicity; `exact` is set when a closed form is known.
struct spectral_line {
  double value = 0;
  int multiplicity = 1;
  std::optional<exact_value> exact;
};

/// Multiset of eigenvalues kept sorted ascending by value.
class spectrum {
 public:
  spectrum() = default;

  void add(double value, int multiplicity = 1) {
    lines_.push_back({value, multiplicity, std::nullopt});
  }
  void add(const exact_value& v, int multiplicity = 1) {
    lines_.push_back({v.to_double(), multiplicity, v});
  }

  /// Group a raw eigenvalue list into lines, merging values closer than `merge_tol`.
  static spectrum from_raw(std::vector<double> values, double merge_tol) {
    std::sort(values.begin(), values.end());
    spectrum s;
    std::size_t i = 0;
    while (i < values.size()) {
      std::size_t j = i + 1;
      while (j < values.size() && values[j] - values[j - 1] <= merge_tol) ++j;
      double mean = 0;
      for (std::size_t k = i; k < j; ++k) mean += values[k];
      mean /= static_cast<double>(j - i);
      s.add(mean, static_cast<int>(j - i));
      i = j;
    }
    return s;
  }

  const std::vector<spectral_line>& lines() const& {
    sort_lines();
    return lines_;
  }
  // On a temporary the returned reference would dangle; bind the spectrum first.
  const std::vector<spectral_line>& lines() const&& = delete;

  int total_multiplicity() const {
    int t = 0;
    for (const auto& l : lines_) t += l.multiplicity;
    return t;
  }

  /// Eigenvalues repeated per multiplicity, ascending.
  std::vector<double> expand() const {
    sort_lines();
    std::vector<double> out;
    out.reserve(total_multiplicity());
    for (const auto& l : lines_)
      for (int k = 0; k < l.multiplicity; ++k) out.push_back(l.value);
    return out;
  }

  double min_value() const {
    if (lines_.empty()) throw std::logic_error("spectrum: empty");
    sort_lines();
    return lines_.front().value;
  }

  nlohmann::json to_json() const {
    sort_lines();
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& l : lines_) {
      nlohmann::json line{{"value", l.value}, {"mult", l.multiplicity}};
      if (l.exact) line["exact"] = exact_to_json(*l.exact);
      arr.push_back(std::move(line));
    }
    return arr;
  }

 private:
  void sort_lines() const {
    std::sort(lines_.begin(), lines_.end(),
              [](const spectral_line& x, const spectral_line& y) { return x.value < y.value; });
  }

  mutable std::vector<spectral_line> lines_;
};

/// Largest entrywise gap between two sorted eigenvalue multisets of equal size.
inline double max_spectrum_deviation(const spectrum& a, const spectrum& b) {
  std::vector<double> xs = a.expand();
  std::vector<double> ys = b.expand();
  if (xs.size() != ys.size())
    throw std::invalid_argument("max_spectrum_deviation: multiplicities do not match");
  double dev = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) dev = std::max(dev, std::abs(xs[i] - ys[i]));
  return dev;
}

}  // namespace eccmat

#endif  // ECCMAT_SPECTRUM_HPP
