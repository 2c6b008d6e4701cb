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

#include <sstream>
#include <stdexcept>
#include <utility>

#include "kirkman/lagrange.hpp"
#include "kirkman/series.hpp"

namespace kirkman {
namespace {

BigInt lookup(const CoeffSource& source, const KirkmanIndex& idx) {
  return source ? source(idx) : psi_power_coeff_closed(idx);
}

// Coefficients of psi^p on (max_m, max_n), row-major.
class CoeffTable {
 public:
  CoeffTable(const CoeffSource& source, unsigned p, std::size_t max_m,
             std::size_t max_n)
      : stride_(max_n + 1) {
    values_.reserve((max_m + 1) * stride_);
    for (std::size_t m = 0; m <= max_m; ++m)
      for (std::size_t n = 0; n <= max_n; ++n)
        values_.push_back(lookup(source, KirkmanIndex{p, m, n}));
  }

  const BigInt& at(std::size_t m, std::size_t n) const {
    return values_[m * stride_ + n];
  }

 private:
  std::size_t stride_;
  std::vector<BigInt> values_;
};

BigInt convolve(const CoeffTable& left, const CoeffTable& right, std::size_t M,
                std::size_t N) {
  BigInt sum = 0;
  for (std::size_t m = 0; m <= M; ++m)
    for (std::size_t n = 0; n <= N; ++n)
      mpz_addmul(sum.get_mpz_t(), left.at(m, n).get_mpz_t(),
                 right.at(M - m, N - n).get_mpz_t());
  return sum;
}

void require_positive(unsigned r, unsigned s) {
  if (r == 0 || s == 0) {
    throw std::invalid_argument("identity exponents r and s must be >= 1");
  }
}

}  // namespace

BigInt convolution_lhs(const IdentityParams& params,
                       const CoeffSource& source) {
  require_positive(params.r, params.s);
  const CoeffTable left(source, params.r, params.M, params.N);
  const CoeffTable right(source, params.s, params.M, params.N);
  return convolve(left, right, params.M, params.N);
}

VerifyReport verify_generalized(unsigned r, unsigned s, std::size_t max_M,
                                std::size_t max_N, const CoeffSource& source) {
  require_positive(r, s);
  VerifyReport report;
  {
    std::ostringstream os;
    os << "r=" << r << " s=" << s << " 0<=M<=" << max_M << " 0<=N<=" << max_N;
    report.params_range = os.str();
  }
  const CoeffTable left(source, r, max_M, max_N);
  const CoeffTable right(source, s, max_M, max_N);
  for (std::size_t M = 0; M <= max_M; ++M) {
    for (std::size_t N = 0; N <= max_N; ++N) {
      SweepCell cell{M, N, convolve(left, right, M, N),
                     lookup(source, KirkmanIndex{r + s, M, N}), true};
      cell.ok = cell.lhs == cell.rhs;
      ++report.checked_count;
      if (!cell.ok) {
        report.first_counterexample =
            Counterexample{IdentityParams{r, s, M, N}, cell.lhs, cell.rhs};
      }
      report.cells.push_back(std::move(cell));
      if (report.first_counterexample) return report;
    }
  }
  return report;
}

VerifyReport verify_cayley(std::size_t max_M, const CoeffSource& source) {
  VerifyReport report = verify_generalized(1, 1, max_M, 0, source);
  report.params_range = "r=1 s=1 0<=M<=" + std::to_string(max_M) + " N=0";
  return report;
}

std::vector<std::string> CoeffReport::disagreeing_routes() const {
  std::vector<std::pair<std::string, const BigInt*>> routes = {
      {"closed", &value_closed},
      {"series", &value_series},
      {"lagrange", &value_lagrange}};
  if (value_radical) routes.emplace_back("radical", &*value_radical);

  const BigInt* majority = nullptr;
  for (const auto& [name, v] : routes) {
    std::size_t votes = 0;
    for (const auto& other : routes) votes += (*other.second == *v) ? 1 : 0;
    if (2 * votes > routes.size()) {
      majority = v;
      break;
    }
  }
  std::vector<std::string> out;
  for (const auto& [name, v] : routes) {
    if (majority == nullptr || *v != *majority) out.push_back(name);
  }
  return out;
}

std::vector<CoeffReport> cross_check_methods(unsigned p, std::size_t max_m,
                                             std::size_t max_n,
                                             const CoeffSource& closed_source) {
  if (p == 0) throw std::invalid_argument("psi power p must be >= 1");
  const Rect window{max_m, max_n};
  const BiSeries series = psi_power_series(p, window);
  std::optional<BiSeries> radical;
  if (p == 1) radical = psi_series_closed_form(window);

  std::vector<CoeffReport> reports;
  reports.reserve(window.cell_count());
  for (std::size_t m = 0; m <= max_m; ++m) {
    for (std::size_t n = 0; n <= max_n; ++n) {
      CoeffReport rep;
      rep.index = KirkmanIndex{p, m, n};
      rep.value_closed = lookup(closed_source, rep.index);
      rep.value_series = series(m, n).to_integer();
      rep.value_lagrange = lagrange_coeff(p, m, n);
      if (radical) rep.value_radical = (*radical)(m, n).to_integer();
      rep.agree = rep.value_closed == rep.value_series &&
                  rep.value_closed == rep.value_lagrange &&
                  (!rep.value_radical || rep.value_closed == *rep.value_radical);
      reports.push_back(std::move(rep));
    }
  }
  return reports;
}

}  // namespace kirkman
