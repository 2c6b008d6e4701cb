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

#include <stdexcept>

#include <gtest/gtest.h>

#include "kirkman/formulas.hpp"

namespace kirkman {
namespace {

TEST(BuildPhiTest, Examples) {
  const LagrangeProblem problem = build_phi(Rect{3, 3});
  EXPECT_EQ(problem.phi()(0, 0), Rational(1));
  // [y^1 w^1] of (1+2y+y^2)(1+w+wy+...) = 2*1 + 1*1
  EXPECT_EQ(problem.phi()(1, 1), Rational(3));
  EXPECT_FALSE(problem.description().empty());

  const BiSeries small = build_phi(Rect{1, 2}).phi();
  for (std::size_t n = 0; n <= 2; ++n) EXPECT_EQ(small(0, n), Rational(1));
}

TEST(BuildPhiTest, KernelWithZeroConstantIsRejected) {
  EXPECT_THROW(LagrangeProblem(BiSeries::monomial(Rect{1, 1}, 1, 0), "y"), std::invalid_argument);
}

TEST(LagrangeCoeffTest, Examples) {
  EXPECT_EQ(lagrange_coeff(1, 0, 5), 1);
  EXPECT_EQ(lagrange_coeff(1, 1, 1), 5);
  EXPECT_EQ(lagrange_coeff(2, 0, 1), 2);
  EXPECT_THROW(lagrange_coeff(0, 1, 1), std::invalid_argument);
}

TEST(LagrangeCoeffTest, PhiSquaredFirstRow) {
  // phi^2 = (1+y)^4 / (1 - w(1+y))^2 has [y^1 w^n] = (n+1)(n+4).
  const BiSeries phi2 = pow(build_phi(Rect{1, 10}).phi(), 2);
  for (long n = 0; n <= 10; ++n) EXPECT_EQ(phi2(1, n), Rational((n + 1) * (n + 4)));
}

TEST(LagrangeCoeffTest, MatchesClosedForm) {
  for (unsigned p = 1; p <= 4; ++p)
    for (std::size_t m = 0; m <= 7; ++m)
      for (std::size_t n = 0; n <= 7; ++n)
        ASSERT_EQ(lagrange_coeff(p, m, n), psi_power_coeff_closed({p, m, n}))
            << "p=" << p << " m=" << m << " n=" << n;
}

TEST(LagrangeCoeffTest, IntermediateFactorization) {
  // [y^m w^n] phi^(m+p) = C(m+n+p-1, n) * [y^m] (1+y)^(2m+n+2p).
  for (unsigned p = 1; p <= 3; ++p) {
    for (std::size_t m = 0; m <= 5; ++m) {
      for (std::size_t n = 0; n <= 5; ++n) {
        const auto mi = static_cast<std::int64_t>(m);
        const auto ni = static_cast<std::int64_t>(n);
        const std::int64_t pi = p;
        const BiSeries phi_k = pow(build_phi(Rect{m, n}).phi(), static_cast<unsigned>(m) + p);

        BiSeries one_plus_y(Rect{m, 0});
        one_plus_y(0, 0) = 1;
        if (m >= 1) one_plus_y(1, 0) = 1;
        const Rational y_coeff =
            pow(one_plus_y, static_cast<unsigned>(2 * mi + ni + 2 * pi))(m, 0);
        EXPECT_EQ(y_coeff, Rational(binomial(2 * mi + ni + 2 * pi, mi)));
        EXPECT_EQ(binomial(2 * mi + ni + 2 * pi, mi),
                  binomial(2 * mi + ni + 2 * pi, mi + ni + 2 * pi));
        EXPECT_EQ(phi_k(m, n), Rational(binomial(mi + ni + pi - 1, ni)) * y_coeff);
      }
    }
  }
}

TEST(SolveYTest, Examples) {
  const BiSeries y = solve_y_fixpoint(Rect{5, 5});
  for (std::size_t n = 0; n <= 5; ++n) EXPECT_TRUE(y(0, n).is_zero());
  EXPECT_EQ(y(1, 0), Rational(1));
  EXPECT_EQ(div_exact_z(y), psi_series_fixpoint(Rect{4, 5}));
  EXPECT_TRUE(solve_y_fixpoint(Rect{0, 3}).is_zero());
}

TEST(SolveYTest, DefiningEquationResidualVanishes) {
  for (const Rect r : {Rect{1, 0}, Rect{4, 2}, Rect{6, 6}}) {
    const BiSeries y = solve_y_fixpoint(r);
    EXPECT_TRUE(defining_residual(build_phi(r).phi(), y).is_zero()) << r;
  }
  BiSeries wrong = solve_y_fixpoint(Rect{3, 3});
  wrong(2, 1) += 1;
  EXPECT_FALSE(defining_residual(build_phi(Rect{3, 3}).phi(), wrong).is_zero());
}

TEST(SolveYTest, YOverZIsPsiOnSeveralWindows) {
  for (const Rect r : {Rect{1, 4}, Rect{3, 0}, Rect{8, 8}}) {
    EXPECT_EQ(div_exact_z(solve_y_fixpoint(r)), psi_series_fixpoint(Rect{r.max_a - 1, r.max_b}))
        << r;
  }
}

TEST(SubstituteTest, Preconditions) {
  const BiSeries phi = build_phi(Rect{2, 2}).phi();
  EXPECT_THROW(substitute(phi, BiSeries::one(Rect{2, 2})), std::domain_error);
  EXPECT_THROW(substitute(phi, BiSeries::zero(Rect{3, 2})), std::invalid_argument);
  // phi(0) is the y^0 row.
  const BiSeries at_zero = substitute(phi, BiSeries::zero(Rect{2, 2}));
  for (std::size_t n = 0; n <= 2; ++n) EXPECT_EQ(at_zero(0, n), Rational(1));
}

}  // namespace
}  // namespace kirkman
