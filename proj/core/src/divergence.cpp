#include <algorithm>

#include "famart/checkers.hpp"
#include "famart/errors.hpp"
#include "famart/spaces.hpp"

namespace famart::checkers {

std::vector<DivergenceRow> divergence_study(const Rational& p, const std::vector<unsigned>& horizons) {
  if (!p.is_positive() || p >= Rational(1, 2)) {
    throw InvalidInput("coin bias p = " + p.str() + " must satisfy 0 < p < 1/2");
  }
  const Rational q = Rational(1) - p;
  const Rational half(1, 2);
  std::vector<DivergenceRow> rows;
  for (unsigned n : horizons) {
    const auto biased = spaces::binomial_pmf(n, p);
    const auto fair = spaces::binomial_pmf(n, half);
    DivergenceRow row;
    row.n = n;
    Rational l1;
    for (unsigned h = 0; h <= n; ++h) {
      l1 += abs(biased[h] - fair[h]);
      // per-path likelihood ratio dP0/dQ0 on paths with h heads
      const Rational ratio = pow(Rational(2), n) * pow(p, h) * pow(q, n - h);
      if (h == 0 || ratio < row.min_likelihood_ratio) row.min_likelihood_ratio = ratio;
      if (h == 0 || ratio > row.max_likelihood_ratio) row.max_likelihood_ratio = ratio;
    }
    row.total_variation = l1 * half;
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace famart::checkers
