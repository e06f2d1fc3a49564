#include "famart/linear_system.hpp"

#include "famart/errors.hpp"

namespace famart::lp {

AffineSolution solve_linear_system(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
  const std::size_t m = a.size();
  if (b.size() != m) throw InvalidInput("right-hand side length differs from the row count");
  const std::size_t n = m == 0 ? 0 : a.front().size();
  for (const auto& row : a) {
    if (row.size() != n) throw InvalidInput("ragged coefficient matrix");
  }

  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    std::size_t p = r;
    while (p < m && a[p][c].is_zero()) ++p;
    if (p == m) continue;
    std::swap(a[p], a[r]);
    std::swap(b[p], b[r]);
    const Rational inv = Rational(1) / a[r][c];
    for (std::size_t j = c; j < n; ++j) a[r][j] *= inv;
    b[r] *= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r || a[i][c].is_zero()) continue;
      const Rational f = a[i][c];
      for (std::size_t j = c; j < n; ++j) a[i][j] -= f * a[r][j];
      b[i] -= f * b[r];
    }
    pivot_col.push_back(c);
    ++r;
  }

  AffineSolution out;
  out.rank = r;
  for (std::size_t i = r; i < m; ++i) {
    if (!b[i].is_zero()) return out;
  }
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < r; ++i) x[pivot_col[i]] = b[i];
  out.particular = std::move(x);
  out.nullity = n - r;
  return out;
}

}  // namespace famart::lp
