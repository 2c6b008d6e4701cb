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

// Lagrange inversion for y = z * phi(y), where the coefficients of phi are
// themselves series in a second variable w:
//
//   [z^k] y^p = (p/k) [y^(k-p)] phi(y)^k.
//
// With y = z * psi the kernel is phi(y) = (1+y)^2 / (1 - w(1+y)), and
//
//   [z^m w^n] psi^p = [z^(m+p) w^n] y^p = p/(m+p) [y^m w^n] phi(y)^(m+p).

#ifndef KIRKMAN_LAGRANGE_HPP
#define KIRKMAN_LAGRANGE_HPP

#include <string>

#include "kirkman/rational.hpp"
#include "kirkman/series.hpp"

namespace kirkman {

/// A kernel phi(y, w) with invertible constant term.
class LagrangeProblem {
 public:
  /// Throws std::invalid_argument when phi[0,0] is zero.
  LagrangeProblem(BiSeries phi, std::string description);

  const BiSeries& phi() const { return phi_; }
  const std::string& description() const { return description_; }

 private:
  BiSeries phi_;
  std::string description_;
};

/// phi = (1+y)^2 / (1 - w - w y) on `window` (first variable y, second w).
LagrangeProblem build_phi(Rect window);

/// p/(m+p) * [y^m w^n] phi^(m+p), computed by direct series powering.
/// Throws std::invalid_argument for p == 0 and std::logic_error on an
/// integrality violation.
BigInt lagrange_coeff(unsigned p, std::size_t m, std::size_t n);

/// phi(y) for a series y(z,w) with no constant term. phi is read as a
/// polynomial in its first variable; `phi` must cover y's rectangle, which is
/// enough because y^k has z-valuation k.
BiSeries substitute(const BiSeries& phi, const BiSeries& y);

/// y(z,w) on `window`, solving y = z * phi(y) by fixpoint iteration in the
/// (z,w) series ring.
BiSeries solve_y_fixpoint(Rect window);

/// y - z * phi(y) on y's rectangle.
BiSeries defining_residual(const BiSeries& phi, const BiSeries& y);

}  // namespace kirkman

#endif  // KIRKMAN_LAGRANGE_HPP
