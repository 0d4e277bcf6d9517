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

#ifndef ECCMAT_EXACT_HPP
#define ECCMAT_EXACT_HPP

#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

#include <json.hpp>

namespace eccmat {

/// Quadratic surd (a + b*sqrt(r)) / c in a canonical form:
/// r square-free and >= 2 when b != 0, r == 0 when b == 0,
/// c > 0, gcd(a, b, c) == 1.
struct exact_value {
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::int64_t r = 0;
  std::int64_t c = 1;

  exact_value() = default;
  exact_value(std::int64_t a_, std::int64_t b_, std::int64_t r_, std::int64_t c_ = 1)
      : a(a_), b(b_), r(r_), c(c_) {
    normalize();
  }
  /// Rational value a/c.
  static exact_value rational(std::int64_t a_, std::int64_t c_ = 1) { return exact_value(a_, 0, 0, c_); }

  double to_double() const {
    return (static_cast<double>(a) + static_cast<double>(b) * std::sqrt(static_cast<double>(r))) /
           static_cast<double>(c);
  }

  bool operator==(const exact_value&) const = default;

  exact_value operator-() const {
    exact_value v = *this;
    v.a = -v.a;
    v.b = -v.b;
    return v;
  }

  friend exact_value operator*(std::int64_t k, const exact_value& v) {
    return exact_value(k * v.a, k * v.b, v.r, v.c);
  }

  /// Sum of two surds over the same radicand (or with a rational operand).
  friend exact_value operator+(const exact_value& x, const exact_value& y) {
    if (x.b != 0 && y.b != 0 && x.r != y.r)
      throw std::invalid_argument("exact_value: cannot add surds with different radicands");
    std::int64_t r = x.b != 0 ? x.r : y.r;
    return exact_value(x.a * y.c + y.a * x.c, x.b * y.c + y.b * x.c, r, x.c * y.c);
  }

  friend exact_value operator*(const exact_value& x, const exact_value& y) {
    if (x.b != 0 && y.b != 0 && x.r != y.r)
      throw std::invalid_argument("exact_value: cannot multiply surds with different radicands");
    std::int64_t r = x.b != 0 ? x.r : y.r;
    // (a1 + b1*s)(a2 + b2*s) = a1*a2 + b1*b2*r + (a1*b2 + a2*b1)*s
    return exact_value(x.a * y.a + x.b * y.b * r, x.a * y.b + y.a * x.b, r, x.c * y.c);
  }

  std::string to_string() const {
    std::string s;
    if (b == 0) {
      s = std::to_string(a);
      if (c != 1) s += "/" + std::to_string(c);
      return s;
    }
    s = "(" + std::to_string(a);
    s += (b < 0 ? " - " : " + ");
    std::int64_t ab = b < 0 ? -b : b;
    if (ab != 1) s += std::to_string(ab) + "*";
    s += "sqrt(" + std::to_string(r) + "))";
    if (c != 1) s += "/" + std::to_string(c);
    return s;
  }

 private:
  void normalize() {
    if (c == 0) throw std::invalid_argument("exact_value: zero denominator");
    if (r < 0) throw std::invalid_argument("exact_value: negative radicand");
    if (b == 0 || r == 0) {
      b = 0;
      r = 0;
    } else {
      // Pull square factors out of r.
      std::int64_t sq = 1;
      for (std::int64_t p = 2; p * p <= r; ++p) {
        while (r % (p * p) == 0) {
          r /= p * p;
          sq *= p;
        }
      }
      b *= sq;
      if (r == 1) {  // perfect square: fold into the rational part
        a += b;
        b = 0;
        r = 0;
      }
    }
    if (c < 0) {
      a = -a;
      b = -b;
      c = -c;
    }
    std::int64_t g = std::gcd(std::gcd(a < 0 ? -a : a, b < 0 ? -b : b), c);
    if (g > 1) {
      a /= g;
      b /= g;
      c /= g;
    }
  }
};

inline nlohmann::json exact_to_json(const exact_value& v) {
  return nlohmann::json{{"a", v.a}, {"b", v.b}, {"r", v.r}, {"c", v.c}};
}

}  // namespace eccmat

#endif  // ECCMAT_EXACT_HPP
