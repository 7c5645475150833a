#include "rubbertaut/linear_solve.hpp"

#include "rubbertaut/errors.hpp"

namespace rubbertaut {

LinearSolution solve_linear(std::vector<std::vector<Rational>> a, std::vector<Rational> b, int cols) {
  if (a.size() != b.size()) throw InvalidArgument("row count mismatch between matrix and right-hand side");
  for (const auto& row : a)
    if (static_cast<int>(row.size()) != cols) throw InvalidArgument("ragged matrix");
  const int rows = static_cast<int>(a.size());
  std::vector<int> pivot_col;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = r;
    while (p < rows && a[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    std::swap(b[p], b[r]);
    const Rational inv = Rational(1) / a[r][c];
    for (int k = c; k < cols; ++k) a[r][k] *= inv;
    b[r] *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || a[i][c].is_zero()) continue;
      const Rational f = a[i][c];
      for (int k = c; k < cols; ++k) a[i][k] -= f * a[r][k];
      b[i] -= f * b[r];
    }
    pivot_col.push_back(c);
    ++r;
  }
  LinearSolution sol;
  sol.rank = r;
  sol.consistent = true;
  for (int i = r; i < rows; ++i)
    if (!b[i].is_zero()) sol.consistent = false;
  sol.particular.assign(static_cast<size_t>(cols), Rational());
  for (int i = 0; i < r; ++i) sol.particular[pivot_col[i]] = b[i];
  std::vector<bool> is_pivot(static_cast<size_t>(cols), false);
  for (int c : pivot_col) is_pivot[c] = true;
  for (int f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> v(static_cast<size_t>(cols));
    v[f] = 1;
    for (int i = 0; i < r; ++i) v[pivot_col[i]] = -a[i][f];
    sol.nullspace.push_back(std::move(v));
  }
  return sol;
}

}  // namespace rubbertaut
