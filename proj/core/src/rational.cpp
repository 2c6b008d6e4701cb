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

#include "kirkman/rational.hpp"

#include <stdexcept>

namespace kirkman {

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

BigInt Rational::to_integer() const {
  if (!is_integer()) {
    throw std::domain_error("not an integer: " + to_string());
  }
  return value_.get_num();
}

std::string Rational::to_string() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  value_ /= o.value_;
  return *this;
}

void Rational::add_product(const Rational& x, const Rational& y) {
  if (x.is_zero() || y.is_zero()) return;
  // Integer fast path: every series in this library is integral in practice.
  if (is_integer() && x.is_integer() && y.is_integer()) {
    mpz_addmul(value_.get_num_mpz_t(), x.value_.get_num_mpz_t(),
               y.value_.get_num_mpz_t());
    return;
  }
  value_ += x.value_ * y.value_;
}

}  // namespace kirkman
