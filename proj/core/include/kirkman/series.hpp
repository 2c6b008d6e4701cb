// Copyright 2026 The Kirkman Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Truncated bivariate formal power series with exact rational coefficients.
//
// A BiSeries stores every coefficient x[a,b] with a <= max_a and b <= max_b
// (a dense rectangle) and stands for the series modulo all monomials outside
// that rectangle. Rectangular truncation is closed under multiplication: the
// coefficient (a,b) of a product only reads operand cells (i,j) with i <= a
// and j <= b, so every operation below is exact on the stored window.
//
// Variables are positional. The same type holds series in (z,w) and in (y,w).
//
// Errors are reported with standard exceptions:
//   std::out_of_range     index or rectangle outside the operand
//   std::invalid_argument rectangle mismatch, duplicate entries, bad padding
//   std::domain_error     non-invertible / unsupported / non-divisible input

#ifndef KIRKMAN_SERIES_HPP
#define KIRKMAN_SERIES_HPP

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "kirkman/rational.hpp"

namespace kirkman {

/// Truncation window: exponents 0..max_a in the first variable and 0..max_b
/// in the second.
struct Rect {
  std::size_t max_a = 0;
  std::size_t max_b = 0;

  bool contains(std::size_t a, std::size_t b) const {
    return a <= max_a && b <= max_b;
  }
  bool contains(const Rect& r) const {
    return r.max_a <= max_a && r.max_b <= max_b;
  }
  std::size_t cell_count() const { return (max_a + 1) * (max_b + 1); }

  friend bool operator==(const Rect&, const Rect&) = default;
  friend std::ostream& operator<<(std::ostream& os, const Rect& r) {
    return os << "(" << r.max_a << "," << r.max_b << ")";
  }
};

/// Coefficient at exponent (a,b); input to BiSeries::from_table.
struct SeriesTerm {
  std::size_t a = 0;
  std::size_t b = 0;
  Rational value;
};

class BiSeries {
 public:
  /// The zero series on `rect`.
  explicit BiSeries(Rect rect);

  static BiSeries zero(Rect rect) { return BiSeries(rect); }
  static BiSeries one(Rect rect);
  /// c * first^a * second^b; the exponent must lie inside `rect`.
  static BiSeries monomial(Rect rect, std::size_t a, std::size_t b,
                           const Rational& c = Rational(1));

  /// Builds a series from explicit terms, zero elsewhere. Throws
  /// std::out_of_range("index out of rectangle") for a term outside `rect`
  /// and std::invalid_argument for a repeated index.
  static BiSeries from_table(Rect rect, std::span<const SeriesTerm> entries);
  static BiSeries from_table(Rect rect, std::initializer_list<SeriesTerm> entries) {
    return from_table(rect, std::span<const SeriesTerm>(entries.begin(), entries.size()));
  }

  const Rect& rect() const { return rect_; }

  /// Checked lookup; throws std::out_of_range.
  const Rational& coeff_at(std::size_t a, std::size_t b) const;

  /// Unchecked access.
  const Rational& operator()(std::size_t a, std::size_t b) const {
    return coeff_[a * stride() + b];
  }
  Rational& operator()(std::size_t a, std::size_t b) {
    return coeff_[a * stride() + b];
  }

  /// Truncation to a sub-rectangle; throws std::out_of_range otherwise.
  BiSeries restrict(Rect r) const;

  /// Zero-padded copy on a larger rectangle. The padding cells are zeros, so
  /// the result is only meaningful when the true series vanishes there.
  BiSeries extend(Rect r) const;

  /// Exact cellwise comparison on `r`, which must lie inside both operands.
  bool equals_on(const BiSeries& other, Rect r) const;

  bool is_zero() const;

  friend bool operator==(const BiSeries&, const BiSeries&) = default;
  friend std::ostream& operator<<(std::ostream& os, const BiSeries& s);

 private:
  std::size_t stride() const { return rect_.max_b + 1; }

  Rect rect_;
  std::vector<Rational> coeff_;
};

BiSeries add(const BiSeries& x, const BiSeries& y);
BiSeries sub(const BiSeries& x, const BiSeries& y);
BiSeries scale(const BiSeries& x, const Rational& c);

/// Truncated Cauchy product on the common rectangle.
BiSeries mul(const BiSeries& x, const BiSeries& y);

/// k-fold truncated product by binary powering; pow(x, 0) is 1.
BiSeries pow(const BiSeries& x, unsigned k);

/// Multiplicative inverse on the rectangle, by the coefficient recurrence in
/// graded-lexicographic order. Throws std::domain_error("not invertible")
/// when x[0,0] is zero.
BiSeries reciprocal(const BiSeries& x);

/// Square root with constant term +1. Only radicands with x[0,0] == 1 are
/// accepted; anything else throws std::domain_error("unsupported radicand").
BiSeries sqrt(const BiSeries& x);

/// Multiplication by the first variable, truncated to the same rectangle.
BiSeries shift_a(const BiSeries& x);

/// Exact division by the first variable. The result lives on
/// (max_a - 1, max_b). Throws std::domain_error("not divisible by z") naming
/// the first nonzero cell in the a = 0 row.
BiSeries div_exact_z(const BiSeries& x);

/// Exact division by (first + second) down to `target`. Each result cell
/// telescopes along an anti-diagonal,
///   b[a,n] = sum_{k=0..n} (-1)^k x[a+1+k, n-k],
/// so `x` must cover (target.max_a + target.max_b + 1, target.max_b). The
/// a = 0 row of `x` is then checked against the quotient; a mismatch throws
/// std::domain_error("not divisible by z+w").
BiSeries div_exact_z_plus_w(const BiSeries& x, Rect target);

inline BiSeries operator+(const BiSeries& x, const BiSeries& y) { return add(x, y); }
inline BiSeries operator-(const BiSeries& x, const BiSeries& y) { return sub(x, y); }
inline BiSeries operator*(const BiSeries& x, const BiSeries& y) { return mul(x, y); }

}  // namespace kirkman

#endif  // KIRKMAN_SERIES_HPP
