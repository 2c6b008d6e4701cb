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

// Exhaustive checks of the convolution identity
//
//   sum_{m<=M, n<=N} [z^m w^n] psi^r * [z^(M-m) w^(N-n)] psi^s
//       = [z^M w^N] psi^(r+s)
//
// with every coefficient taken from the closed form, plus cross-checks of the
// three independent coefficient routes.

#ifndef KIRKMAN_VERIFIER_HPP
#define KIRKMAN_VERIFIER_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "kirkman/formulas.hpp"
#include "kirkman/rational.hpp"

namespace kirkman {

/// Supplies [z^m w^n] psi^p. Defaults to psi_power_coeff_closed wherever a
/// source is accepted; tests substitute corrupted sources.
using CoeffSource = std::function<BigInt(const KirkmanIndex&)>;

struct IdentityParams {
  unsigned r = 1;
  unsigned s = 1;
  std::size_t M = 0;
  std::size_t N = 0;

  unsigned p() const { return r + s; }
};

struct Counterexample {
  IdentityParams params;
  BigInt lhs;
  BigInt rhs;
};

/// One checked (M,N) cell of a sweep.
struct SweepCell {
  std::size_t M = 0;
  std::size_t N = 0;
  BigInt lhs;
  BigInt rhs;
  bool ok = true;
};

struct VerifyReport {
  std::string params_range;
  std::size_t checked_count = 0;
  std::optional<Counterexample> first_counterexample;
  /// Every checked cell in lexicographic (M,N) order; the last one is the
  /// counterexample when the sweep failed.
  std::vector<SweepCell> cells;

  bool passed() const { return !first_counterexample.has_value(); }
};

BigInt convolution_lhs(const IdentityParams& params,
                       const CoeffSource& source = {});

/// Checks every 0 <= M <= max_M, 0 <= N <= max_N and stops at the first
/// failure in lexicographic (M,N) order. Throws std::invalid_argument when r
/// or s is zero.
VerifyReport verify_generalized(unsigned r, unsigned s, std::size_t max_M,
                                std::size_t max_N,
                                const CoeffSource& source = {});

/// The N = 0 slice with r = s = 1.
VerifyReport verify_cayley(std::size_t max_M, const CoeffSource& source = {});

struct CoeffReport {
  KirkmanIndex index;
  BigInt value_closed;
  BigInt value_series;
  BigInt value_lagrange;
  /// Present only for p = 1.
  std::optional<BigInt> value_radical;
  bool agree = true;

  /// Names of the routes whose value differs from the majority value, or
  /// all routes when there is no strict majority. Empty when they agree.
  std::vector<std::string> disagreeing_routes() const;
};

/// One report per cell of (max_m, max_n), m outer, n inner. Route (a) is
/// `closed_source` (the closed form by default), (b) the powered fixpoint
/// series, (c) Lagrange inversion, and for p = 1 also the radical series.
std::vector<CoeffReport> cross_check_methods(unsigned p, std::size_t max_m,
                                             std::size_t max_n,
                                             const CoeffSource& closed_source = {});

}  // namespace kirkman

#endif  // KIRKMAN_VERIFIER_HPP
