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

#include "kirkman/lagrange.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace kirkman {

LagrangeProblem::LagrangeProblem(BiSeries phi, std::string description)
    : phi_(std::move(phi)), description_(std::move(description)) {
  if (phi_(0, 0).is_zero()) {
    throw std::invalid_argument("Lagrange kernel must have phi(0) != 0");
  }
}

LagrangeProblem build_phi(Rect window) {
  BiSeries one_plus_y_sq(window);
  one_plus_y_sq(0, 0) = 1;
  if (window.max_a >= 1) one_plus_y_sq(1, 0) = 2;
  if (window.max_a >= 2) one_plus_y_sq(2, 0) = 1;

  // 1 - w - w y
  BiSeries denom(window);
  denom(0, 0) = 1;
  if (window.max_b >= 1) {
    denom(0, 1) = -1;
    if (window.max_a >= 1) denom(1, 1) = -1;
  }
  return LagrangeProblem(mul(one_plus_y_sq, reciprocal(denom)),
                         "(1+y)^2 / (1 - w(1+y))");
}

BigInt lagrange_coeff(unsigned p, std::size_t m, std::size_t n) {
  if (p == 0) throw std::invalid_argument("psi power p must be >= 1");
  // [y^m w^n] never reads beyond (m, n).
  const LagrangeProblem problem = build_phi(Rect{m, n});
  const auto k = static_cast<unsigned>(m) + p;
  const BiSeries phi_k = pow(problem.phi(), k);
  const Rational value =
      Rational(BigInt(p), BigInt(static_cast<unsigned long>(k))) * phi_k(m, n);
  if (!value.is_integer()) {
    std::ostringstream os;
    os << "integrality violated in Lagrange route at p=" << p << " m=" << m
       << " n=" << n << ": " << value;
    throw std::logic_error(os.str());
  }
  return value.to_integer();
}

BiSeries substitute(const BiSeries& phi, const BiSeries& y) {
  const Rect& r = y.rect();
  if (!phi.rect().contains(r)) {
    std::ostringstream os;
    os << "substitute: kernel " << phi.rect() << " does not cover " << r;
    throw std::invalid_argument(os.str());
  }
  for (std::size_t b = 0; b <= r.max_b; ++b) {
    if (!y(0, b).is_zero()) {
      throw std::domain_error("substitute: y must have no z^0 terms");
    }
  }
  // Horner in the first variable of phi; row k of phi is the w-series
  // multiplying y^k. Rows beyond r.max_a cannot reach the window.
  auto row = [&](std::size_t k) {
    BiSeries s(r);
    for (std::size_t b = 0; b <= r.max_b; ++b) s(0, b) = phi(k, b);
    return s;
  };
  BiSeries acc = row(r.max_a);
  for (std::size_t k = r.max_a; k-- > 0;) acc = mul(acc, y) + row(k);
  return acc;
}

BiSeries solve_y_fixpoint(Rect window) {
  // If y_k is exact through z^k then phi(y_k) is too, so z * phi(y_k) is
  // exact through z^(k+1). Starting from y_0 = 0, max_a steps suffice.
  const BiSeries phi = build_phi(window).phi();
  BiSeries y(window);
  for (std::size_t k = 0; k < window.max_a; ++k) {
    y = shift_a(substitute(phi, y));
  }
  return y;
}

BiSeries defining_residual(const BiSeries& phi, const BiSeries& y) {
  return y - shift_a(substitute(phi, y));
}

}  // namespace kirkman
