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

#include "kirkman/formulas.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace kirkman {
namespace {

// Small polynomials in (z,w) used by the constructions below.
BiSeries z_times_z_plus_w(Rect r) {
  BiSeries s(r);
  if (r.max_a >= 2) s(2, 0) = 1;
  if (r.max_a >= 1 && r.max_b >= 1) s(1, 1) = 1;
  return s;
}

BiSeries two_z_plus_w(Rect r) {
  BiSeries s(r);
  if (r.max_a >= 1) s(1, 0) = 2;
  if (r.max_b >= 1) s(0, 1) = 1;
  return s;
}

}  // namespace

BigInt binomial(std::int64_t a, std::int64_t b) {
  if (a < 0) throw std::domain_error("negative upper index unsupported");
  if (b < 0 || b > a) return 0;
  const std::int64_t k = std::min(b, a - b);
  BigInt result = 1;
  // After step i, result == C(a-k+i, i); each division is exact.
  for (std::int64_t i = 1; i <= k; ++i) {
    result *= static_cast<unsigned long>(a - k + i);
    mpz_divexact_ui(result.get_mpz_t(), result.get_mpz_t(),
                    static_cast<unsigned long>(i));
  }
  return result;
}

BigInt psi_power_coeff_closed(const KirkmanIndex& idx) {
  if (idx.p == 0) throw std::invalid_argument("psi power p must be >= 1");
  const auto p = static_cast<std::int64_t>(idx.p);
  const auto m = static_cast<std::int64_t>(idx.m);
  const auto n = static_cast<std::int64_t>(idx.n);
  const Rational value = Rational(BigInt(p), BigInt(m + p)) *
                         Rational(binomial(m + n + p - 1, n)) *
                         Rational(binomial(2 * m + n + 2 * p, m + n + 2 * p));
  if (!value.is_integer()) {
    throw std::logic_error("integrality violated at p=" + std::to_string(p) +
                           " m=" + std::to_string(m) +
                           " n=" + std::to_string(n) + ": " +
                           value.to_string());
  }
  return value.to_integer();
}

BiSeries psi_series_fixpoint(Rect window) {
  // With psi_k exact up to total degree k, the error psi - psi_k has
  // total-degree valuation > k. Both correction terms (2z+w) * error and
  // z(z+w) * (psi^2 - psi_k^2) raise that valuation by at least one, so
  // max_a + max_b iterations make every cell of the window exact.
  const BiSeries linear = two_z_plus_w(window);
  const BiSeries quad = z_times_z_plus_w(window);
  BiSeries psi = BiSeries::one(window);
  const std::size_t iterations = window.max_a + window.max_b;
  for (std::size_t k = 0; k < iterations; ++k) {
    BiSeries next = mul(linear, psi) + mul(quad, mul(psi, psi));
    next(0, 0) += 1;
    psi = std::move(next);
  }
  return psi;
}

BiSeries psi_series_closed_form(Rect window) {
  // Dividing by z costs one row and dividing by z+w costs max_b + 1 more.
  const Rect padded{window.max_a + window.max_b + 2, window.max_b};

  // (1-w)^2 - 4z
  BiSeries radicand(padded);
  radicand(0, 0) = 1;
  if (padded.max_b >= 1) radicand(0, 1) = -2;
  if (padded.max_b >= 2) radicand(0, 2) = 1;
  radicand(1, 0) = -4;

  const BiSeries root = sqrt(radicand);

  // 1 - w - 2z - root; its a = 0 row vanishes because root(0,w) = 1 - w.
  BiSeries numerator = scale(root, Rational(-1));
  numerator(0, 0) += 1;
  if (padded.max_b >= 1) numerator(0, 1) -= 1;
  numerator(1, 0) -= 2;

  const BiSeries over_2z = scale(div_exact_z(numerator),
                                 Rational(BigInt(1), BigInt(2)));
  return div_exact_z_plus_w(over_2z, window);
}

BiSeries psi_power_series(unsigned p, Rect window) {
  if (p == 0) throw std::invalid_argument("psi power p must be >= 1");
  return pow(psi_series_fixpoint(window), p);
}

BiSeries quadratic_residual(const BiSeries& psi) {
  const Rect& r = psi.rect();
  BiSeries linear = two_z_plus_w(r);
  linear(0, 0) = -1;
  BiSeries out = mul(z_times_z_plus_w(r), mul(psi, psi)) + mul(linear, psi);
  out(0, 0) += 1;
  return out;
}

}  // namespace kirkman
