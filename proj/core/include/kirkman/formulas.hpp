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

// The bivariate series
//
//   psi(z,w) = (1 - w - 2z - sqrt((1-w)^2 - 4z)) / (2 z (z+w)),
//
// the power-series root of z(z+w) psi^2 + (2z+w-1) psi + 1 = 0, and the
// closed form of its power coefficients
//
//   [z^m w^n] psi^p = p/(m+p) * C(m+n+p-1, n) * C(2m+n+2p, m+n+2p).

#ifndef KIRKMAN_FORMULAS_HPP
#define KIRKMAN_FORMULAS_HPP

#include <cstdint>

#include "kirkman/rational.hpp"
#include "kirkman/series.hpp"

namespace kirkman {

/// Coefficient index: [z^m w^n] psi^p with p >= 1.
struct KirkmanIndex {
  unsigned p = 1;
  std::size_t m = 0;
  std::size_t n = 0;

  friend bool operator==(const KirkmanIndex&, const KirkmanIndex&) = default;
};

/// C(a,b) for 0 <= b <= a, and 0 for b < 0 or b > a. Throws
/// std::domain_error("negative upper index unsupported") for a < 0.
BigInt binomial(std::int64_t a, std::int64_t b);

/// Closed-form [z^m w^n] psi^p. Throws std::invalid_argument for p == 0 and
/// std::logic_error("integrality violated") if the rational evaluation is not
/// an integer.
BigInt psi_power_coeff_closed(const KirkmanIndex& idx);

/// psi on `window` by iterating psi <- 1 + (2z+w) psi + z(z+w) psi^2 from 1.
BiSeries psi_series_fixpoint(Rect window);

/// psi on `window` from the radical expression, via sqrt and the two exact
/// divisions, working on the padded rectangle the divisions require.
BiSeries psi_series_closed_form(Rect window);

/// psi^p on `window`, powering the fixpoint series.
BiSeries psi_power_series(unsigned p, Rect window);

/// z(z+w) psi^2 + (2z+w-1) psi + 1 on psi's own rectangle. Zero for an exact
/// psi.
BiSeries quadratic_residual(const BiSeries& psi);

}  // namespace kirkman

#endif  // KIRKMAN_FORMULAS_HPP
