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

#include "kirkman/verifier.hpp"

#include <stdexcept>

#include <gtest/gtest.h>

#include "kirkman/series.hpp"
#include "support/test_support.hpp"

namespace kirkman {
namespace {

CoeffSource CorruptAt(KirkmanIndex target, long delta = 1) {
  return [target, delta](const KirkmanIndex& idx) {
    BigInt v = psi_power_coeff_closed(idx);
    if (idx == target) v += delta;
    return v;
  };
}

TEST(ConvolutionLhsTest, Examples) {
  EXPECT_EQ(convolution_lhs({1, 1, 0, 0}), 1);
  EXPECT_EQ(convolution_lhs({1, 1, 1, 0}), 4);
  // 1*5 + 2*2 + 4*1 + 14*1
  EXPECT_EQ(convolution_lhs({2, 1, 1, 1}), 27);
  EXPECT_THROW(convolution_lhs({0, 1, 1, 1}), std::invalid_argument);
}

TEST(ConvolutionLhsTest, IsATruncatedProductCell) {
  const Rect window{6, 6};
  for (unsigned r = 1; r <= 3; ++r) {
    for (unsigned s = 1; s <= 3; ++s) {
      const BiSeries prod = mul(psi_power_series(r, window), psi_power_series(s, window));
      for (std::size_t M = 0; M <= 6; ++M)
        for (std::size_t N = 0; N <= 6; ++N)
          ASSERT_EQ(Rational(convolution_lhs({r, s, M, N})), prod(M, N));
    }
  }
}

TEST(SeriesIdentityTest, PsiPowersMultiply) {
  const Rect window{7, 7};
  for (unsigned r = 1; r <= 3; ++r)
    for (unsigned s = 1; s <= 3; ++s)
      EXPECT_EQ(mul(psi_power_series(r, window), psi_power_series(s, window)),
                psi_power_series(r + s, window));
}

TEST(VerifyGeneralizedTest, Examples) {
  const VerifyReport trivial = verify_generalized(1, 1, 0, 0);
  EXPECT_TRUE(trivial.passed());
  EXPECT_EQ(trivial.checked_count, 1u);

  const VerifyReport kirkman = verify_generalized(1, 1, 10, 10);
  EXPECT_TRUE(kirkman.passed());
  EXPECT_EQ(kirkman.checked_count, 121u);
  EXPECT_EQ(kirkman.cells.size(), 121u);

  const VerifyReport general = verify_generalized(3, 2, 8, 8);
  EXPECT_TRUE(general.passed());
  EXPECT_EQ(general.checked_count, 81u);

  EXPECT_THROW(verify_generalized(0, 2, 1, 1), std::invalid_argument);
}

TEST(VerifyGeneralizedTest, CellsInLexicographicOrder) {
  const VerifyReport rep = verify_generalized(2, 2, 2, 3);
  ASSERT_EQ(rep.cells.size(), 12u);
  std::size_t k = 0;
  for (std::size_t M = 0; M <= 2; ++M) {
    for (std::size_t N = 0; N <= 3; ++N, ++k) {
      EXPECT_EQ(rep.cells[k].M, M);
      EXPECT_EQ(rep.cells[k].N, N);
      EXPECT_EQ(rep.cells[k].lhs, rep.cells[k].rhs);
      EXPECT_TRUE(rep.cells[k].ok);
    }
  }
}

TEST(VerifyGeneralizedTest, SymmetricInRAndS) {
  for (unsigned r = 1; r <= 3; ++r) {
    for (unsigned s = 1; s <= 3; ++s) {
      const auto a = verify_generalized(r, s, 5, 5);
      const auto b = verify_generalized(s, r, 5, 5);
      EXPECT_EQ(a.passed(), b.passed());
      for (std::size_t i = 0; i < a.cells.size(); ++i) EXPECT_EQ(a.cells[i].lhs, b.cells[i].lhs);
    }
  }
  // The symmetry also holds for failing sweeps: the corrupted p=1 cell enters
  // both orders at the same (M,N).
  const auto source = CorruptAt({1, 2, 1});
  const auto a = verify_generalized(1, 2, 4, 4, source);
  const auto b = verify_generalized(2, 1, 4, 4, source);
  EXPECT_FALSE(a.passed());
  EXPECT_EQ(a.passed(), b.passed());
}

TEST(VerifyGeneralizedTest, CorruptedCoefficientGivesFirstCounterexample) {
  // [z^1 w^2] psi is first read by the cell (M,N) = (1,2).
  const VerifyReport rep = verify_generalized(1, 1, 5, 5, CorruptAt({1, 1, 2}, 7));
  ASSERT_FALSE(rep.passed());
  const Counterexample& ce = *rep.first_counterexample;
  EXPECT_EQ(ce.params.r, 1u);
  EXPECT_EQ(ce.params.s, 1u);
  EXPECT_EQ(ce.params.M, 1u);
  EXPECT_EQ(ce.params.N, 2u);
  EXPECT_EQ(ce.rhs, psi_power_coeff_closed({2, 1, 2}));
  EXPECT_EQ(ce.lhs, ce.rhs + 14);  // the corrupted cell appears twice
  EXPECT_EQ(rep.checked_count, 6u + 3u);
  EXPECT_FALSE(rep.cells.back().ok);
  EXPECT_EQ(rep.cells.size(), rep.checked_count);
}

TEST(VerifyCayleyTest, Examples) {
  EXPECT_TRUE(verify_cayley(0).passed());
  const VerifyReport fifty = verify_cayley(50);
  EXPECT_TRUE(fifty.passed());
  EXPECT_EQ(fifty.checked_count, 51u);
  const VerifyReport big = verify_cayley(200);
  EXPECT_TRUE(big.passed());
  // [z^200] psi^2 is far beyond machine words.
  EXPECT_GT(big.cells.back().rhs.get_str().size(), 100u);
  EXPECT_EQ(psi_power_coeff_closed({1, 200, 0}),
            BigInt("2033592067105127216499843751957105398238588299975968520869635628291476098"
                   "784958149743016344175635371340189325038186120"));
}

TEST(CrossCheckTest, Examples) {
  const auto single = cross_check_methods(1, 0, 0);
  ASSERT_EQ(single.size(), 1u);
  EXPECT_TRUE(single[0].agree);
  EXPECT_EQ(single[0].value_closed, 1);
  EXPECT_EQ(single[0].value_series, 1);
  EXPECT_EQ(single[0].value_lagrange, 1);
  ASSERT_TRUE(single[0].value_radical.has_value());
  EXPECT_EQ(*single[0].value_radical, 1);

  const auto p2 = cross_check_methods(2, 5, 5);
  ASSERT_EQ(p2.size(), 36u);
  for (const auto& rep : p2) {
    EXPECT_TRUE(rep.agree);
    EXPECT_FALSE(rep.value_radical.has_value());
    EXPECT_TRUE(rep.disagreeing_routes().empty());
  }

  const auto catalan = cross_check_methods(1, 4, 0);
  const long expected[] = {1, 2, 5, 14, 42};
  ASSERT_EQ(catalan.size(), 5u);
  for (std::size_t m = 0; m <= 4; ++m) {
    EXPECT_EQ(catalan[m].value_closed, expected[m]);
    EXPECT_EQ(catalan[m].value_series, expected[m]);
    EXPECT_EQ(catalan[m].value_lagrange, expected[m]);
    EXPECT_EQ(*catalan[m].value_radical, expected[m]);
  }
}

TEST(CrossCheckTest, CorruptedClosedRouteIsNamed) {
  const auto reports = cross_check_methods(2, 3, 3, CorruptAt({2, 2, 1}));
  std::size_t bad = 0;
  for (const auto& rep : reports) {
    if (rep.agree) continue;
    ++bad;
    EXPECT_EQ(rep.index, (KirkmanIndex{2, 2, 1}));
    EXPECT_EQ(rep.disagreeing_routes(), std::vector<std::string>{"closed"});
  }
  EXPECT_EQ(bad, 1u);
}

TEST(CoeffReportTest, DisagreeingRoutesWithoutMajority) {
  CoeffReport rep;
  rep.value_closed = 1;
  rep.value_series = 2;
  rep.value_lagrange = 3;
  rep.agree = false;
  EXPECT_EQ(rep.disagreeing_routes(),
            (std::vector<std::string>{"closed", "series", "lagrange"}));
  rep.value_radical = BigInt(2);
  rep.value_lagrange = 2;
  EXPECT_EQ(rep.disagreeing_routes(), std::vector<std::string>{"closed"});
}

}  // namespace
}  // namespace kirkman
