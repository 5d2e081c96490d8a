// Copyright 2026 The balclust Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BALCLUST_RATIO_HPP_
#define BALCLUST_RATIO_HPP_

#include <cmath>
#include <compare>

namespace balclust {

// Quotient of two input weights, kept unevaluated. The numerator is 0 or an
// edge weight (heaviest outgoing edge), the denominator an edge weight or 1
// (lightest inner edge). Ordering uses cross-multiplication with the exact
// double products (hi + lo split via fma), so it never depends on rounding.
class Ratio {
 public:
  constexpr Ratio() = default;
  constexpr Ratio(double numerator, double denominator)
      : numerator_(numerator), denominator_(denominator) {}

  static constexpr Ratio Zero() { return Ratio(0.0, 1.0); }
  static constexpr Ratio One() { return Ratio(1.0, 1.0); }

  constexpr double numerator() const { return numerator_; }
  constexpr double denominator() const { return denominator_; }
  double value() const { return numerator_ / denominator_; }

  friend std::strong_ordering operator<=>(const Ratio& a, const Ratio& b) {
    return CompareProducts(a.numerator_, b.denominator_, b.numerator_,
                           a.denominator_);
  }
  friend bool operator==(const Ratio& a, const Ratio& b) {
    return (a <=> b) == std::strong_ordering::equal;
  }

  // Value equality above is what matters for the measure; this one also
  // requires the same representation.
  bool SameTerms(const Ratio& other) const {
    return numerator_ == other.numerator_ &&
           denominator_ == other.denominator_;
  }

 private:
  // Compares a*b against c*d exactly for finite non-negative doubles.
  static std::strong_ordering CompareProducts(double a, double b, double c,
                                              double d) {
    const double hi1 = a * b;
    const double hi2 = c * d;
    if (hi1 < hi2) return std::strong_ordering::less;
    if (hi1 > hi2) return std::strong_ordering::greater;
    const double lo1 = std::fma(a, b, -hi1);
    const double lo2 = std::fma(c, d, -hi2);
    if (lo1 < lo2) return std::strong_ordering::less;
    if (lo1 > lo2) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  double numerator_ = 0.0;
  double denominator_ = 1.0;
};

inline const Ratio& Max(const Ratio& a, const Ratio& b) {
  return a < b ? b : a;
}

}  // namespace balclust

#endif  // BALCLUST_RATIO_HPP_
