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

#include "kirkman/series.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace kirkman {
namespace {

std::string cell_name(std::size_t a, std::size_t b) {
  std::ostringstream os;
  os << "(" << a << "," << b << ")";
  return os.str();
}

void require_same_rect(const BiSeries& x, const BiSeries& y, const char* op) {
  if (x.rect() != y.rect()) {
    std::ostringstream os;
    os << op << ": rectangle mismatch " << x.rect() << " vs " << y.rect();
    throw std::invalid_argument(os.str());
  }
}

// Visits every cell of `r` in graded-lexicographic order: by total degree
// a+b, then by ascending a. Every cell (i,j) <= (a,b) cellwise with
// (i,j) != (a,b) is visited before (a,b).
template <typename F>
void for_each_graded(const Rect& r, F&& f) {
  for (std::size_t d = 0; d <= r.max_a + r.max_b; ++d) {
    const std::size_t lo = d > r.max_b ? d - r.max_b : 0;
    const std::size_t hi = std::min(d, r.max_a);
    for (std::size_t a = lo; a <= hi; ++a) f(a, d - a);
  }
}

}  // namespace

BiSeries::BiSeries(Rect rect) : rect_(rect), coeff_(rect.cell_count()) {}

BiSeries BiSeries::one(Rect rect) {
  BiSeries s(rect);
  s(0, 0) = 1;
  return s;
}

BiSeries BiSeries::monomial(Rect rect, std::size_t a, std::size_t b,
                            const Rational& c) {
  if (!rect.contains(a, b)) {
    throw std::out_of_range("index out of rectangle: " + cell_name(a, b));
  }
  BiSeries s(rect);
  s(a, b) = c;
  return s;
}

BiSeries BiSeries::from_table(Rect rect, std::span<const SeriesTerm> entries) {
  BiSeries s(rect);
  std::vector<bool> seen(rect.cell_count(), false);
  for (const auto& e : entries) {
    if (!rect.contains(e.a, e.b)) {
      throw std::out_of_range("index out of rectangle: " + cell_name(e.a, e.b));
    }
    const std::size_t k = e.a * s.stride() + e.b;
    if (seen[k]) {
      throw std::invalid_argument("duplicate index " + cell_name(e.a, e.b));
    }
    seen[k] = true;
    s.coeff_[k] = e.value;
  }
  return s;
}

const Rational& BiSeries::coeff_at(std::size_t a, std::size_t b) const {
  if (!rect_.contains(a, b)) {
    throw std::out_of_range("index out of rectangle: " + cell_name(a, b));
  }
  return (*this)(a, b);
}

BiSeries BiSeries::restrict(Rect r) const {
  if (!rect_.contains(r)) {
    std::ostringstream os;
    os << "restrict: " << r << " not inside " << rect_;
    throw std::out_of_range(os.str());
  }
  BiSeries out(r);
  for (std::size_t a = 0; a <= r.max_a; ++a)
    for (std::size_t b = 0; b <= r.max_b; ++b) out(a, b) = (*this)(a, b);
  return out;
}

BiSeries BiSeries::extend(Rect r) const {
  if (!r.contains(rect_)) {
    std::ostringstream os;
    os << "extend: " << rect_ << " not inside " << r;
    throw std::out_of_range(os.str());
  }
  BiSeries out(r);
  for (std::size_t a = 0; a <= rect_.max_a; ++a)
    for (std::size_t b = 0; b <= rect_.max_b; ++b) out(a, b) = (*this)(a, b);
  return out;
}

bool BiSeries::equals_on(const BiSeries& other, Rect r) const {
  if (!rect_.contains(r) || !other.rect_.contains(r)) {
    std::ostringstream os;
    os << "equals_on: " << r << " not inside " << rect_ << " and "
       << other.rect_;
    throw std::out_of_range(os.str());
  }
  for (std::size_t a = 0; a <= r.max_a; ++a)
    for (std::size_t b = 0; b <= r.max_b; ++b)
      if ((*this)(a, b) != other(a, b)) return false;
  return true;
}

bool BiSeries::is_zero() const {
  return std::all_of(coeff_.begin(), coeff_.end(),
                     [](const Rational& c) { return c.is_zero(); });
}

std::ostream& operator<<(std::ostream& os, const BiSeries& s) {
  os << "BiSeries" << s.rect_ << "{";
  bool first = true;
  for (std::size_t a = 0; a <= s.rect_.max_a; ++a) {
    for (std::size_t b = 0; b <= s.rect_.max_b; ++b) {
      if (s(a, b).is_zero()) continue;
      if (!first) os << ", ";
      os << cell_name(a, b) << ":" << s(a, b);
      first = false;
    }
  }
  return os << "}";
}

BiSeries add(const BiSeries& x, const BiSeries& y) {
  require_same_rect(x, y, "add");
  BiSeries out = x;
  const Rect& r = x.rect();
  for (std::size_t a = 0; a <= r.max_a; ++a)
    for (std::size_t b = 0; b <= r.max_b; ++b) out(a, b) += y(a, b);
  return out;
}

BiSeries sub(const BiSeries& x, const BiSeries& y) {
  require_same_rect(x, y, "sub");
  BiSeries out = x;
  const Rect& r = x.rect();
  for (std::size_t a = 0; a <= r.max_a; ++a)
    for (std::size_t b = 0; b <= r.max_b; ++b) out(a, b) -= y(a, b);
  return out;
}

BiSeries scale(const BiSeries& x, const Rational& c) {
  BiSeries out = x;
  const Rect& r = x.rect();
  for (std::size_t a = 0; a <= r.max_a; ++a)
    for (std::size_t b = 0; b <= r.max_b; ++b) out(a, b) *= c;
  return out;
}

BiSeries mul(const BiSeries& x, const BiSeries& y) {
  require_same_rect(x, y, "mul");
  const Rect& r = x.rect();
  BiSeries out(r);
  for (std::size_t i = 0; i <= r.max_a; ++i) {
    for (std::size_t j = 0; j <= r.max_b; ++j) {
      const Rational& xij = x(i, j);
      if (xij.is_zero()) continue;
      for (std::size_t k = 0; i + k <= r.max_a; ++k)
        for (std::size_t l = 0; j + l <= r.max_b; ++l)
          out(i + k, j + l).add_product(xij, y(k, l));
    }
  }
  return out;
}

BiSeries pow(const BiSeries& x, unsigned k) {
  BiSeries result = BiSeries::one(x.rect());
  if (k == 0) return result;
  BiSeries base = x;
  bool have_result = false;
  while (true) {
    if (k & 1u) {
      result = have_result ? mul(result, base) : base;
      have_result = true;
    }
    k >>= 1u;
    if (k == 0) break;
    base = mul(base, base);
  }
  return result;
}

BiSeries reciprocal(const BiSeries& x) {
  const Rect& r = x.rect();
  if (x(0, 0).is_zero()) {
    throw std::domain_error("not invertible: constant term is zero");
  }
  const Rational inv0 = Rational(1) / x(0, 0);
  BiSeries out(r);
  for_each_graded(r, [&](std::size_t a, std::size_t b) {
    if (a == 0 && b == 0) {
      out(0, 0) = inv0;
      return;
    }
    // x[0,0] r[a,b] = -sum over (i,j) != (0,0) of x[i,j] r[a-i,b-j]
    Rational acc;
    for (std::size_t i = 0; i <= a; ++i)
      for (std::size_t j = 0; j <= b; ++j)
        if (i != 0 || j != 0) acc.add_product(x(i, j), out(a - i, b - j));
    out(a, b) = -(acc * inv0);
  });
  return out;
}

BiSeries sqrt(const BiSeries& x) {
  const Rect& r = x.rect();
  if (x(0, 0) != Rational(1)) {
    throw std::domain_error("unsupported radicand: constant term is " +
                            x(0, 0).to_string() + ", expected 1");
  }
  const Rational half(BigInt(1), BigInt(2));
  BiSeries out(r);
  for_each_graded(r, [&](std::size_t a, std::size_t b) {
    if (a == 0 && b == 0) {
      out(0, 0) = 1;
      return;
    }
    // x[a,b] = 2 s[a,b] + sum over interior pairs of s[i,j] s[a-i,b-j]
    Rational acc;
    for (std::size_t i = 0; i <= a; ++i) {
      for (std::size_t j = 0; j <= b; ++j) {
        if ((i == 0 && j == 0) || (i == a && j == b)) continue;
        acc.add_product(out(i, j), out(a - i, b - j));
      }
    }
    out(a, b) = (x(a, b) - acc) * half;
  });
  return out;
}

BiSeries shift_a(const BiSeries& x) {
  const Rect& r = x.rect();
  BiSeries out(r);
  for (std::size_t a = 1; a <= r.max_a; ++a)
    for (std::size_t b = 0; b <= r.max_b; ++b) out(a, b) = x(a - 1, b);
  return out;
}

BiSeries div_exact_z(const BiSeries& x) {
  const Rect& r = x.rect();
  if (r.max_a == 0) {
    throw std::invalid_argument(
        "div_exact_z: operand has no room for a quotient (max_a = 0)");
  }
  for (std::size_t b = 0; b <= r.max_b; ++b) {
    if (!x(0, b).is_zero()) {
      throw std::domain_error("not divisible by z: nonzero coefficient at " +
                              cell_name(0, b));
    }
  }
  BiSeries out(Rect{r.max_a - 1, r.max_b});
  for (std::size_t a = 0; a + 1 <= r.max_a; ++a)
    for (std::size_t b = 0; b <= r.max_b; ++b) out(a, b) = x(a + 1, b);
  return out;
}

BiSeries div_exact_z_plus_w(const BiSeries& x, Rect target) {
  const Rect need{target.max_a + target.max_b + 1, target.max_b};
  if (!x.rect().contains(need)) {
    std::ostringstream os;
    os << "div_exact_z_plus_w: insufficient padding, operand " << x.rect()
       << " must cover " << need << " for target " << target;
    throw std::invalid_argument(os.str());
  }
  BiSeries out(target);
  for (std::size_t a = 0; a <= target.max_a; ++a) {
    for (std::size_t n = 0; n <= target.max_b; ++n) {
      Rational acc;
      for (std::size_t k = 0; k <= n; ++k) {
        if (k % 2 == 0)
          acc += x(a + 1 + k, n - k);
        else
          acc -= x(a + 1 + k, n - k);
      }
      out(a, n) = acc;
    }
  }
  // Rows a >= 1 of (first + second) * out reproduce x by construction; only
  // the a = 0 row carries a divisibility condition.
  if (!x(0, 0).is_zero()) {
    throw std::domain_error("not divisible by z+w: residual at (0,0) is " +
                            x(0, 0).to_string());
  }
  for (std::size_t n = 1; n <= target.max_b; ++n) {
    if (x(0, n) != out(0, n - 1)) {
      throw std::domain_error("not divisible by z+w: residual at " +
                              cell_name(0, n) + " is " +
                              (x(0, n) - out(0, n - 1)).to_string());
    }
  }
  return out;
}

}  // namespace kirkman
