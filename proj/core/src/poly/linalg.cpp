#include "eidsobs/poly/linalg.hpp"

#include <utility>

namespace eidsobs {

std::vector<std::size_t> RationalMatrix::row_reduce() {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
    std::size_t p = row;
    while (p < rows_ && (*this)(p, col) == 0) ++p;
    if (p == rows_) continue;
    if (p != row)
      for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(p, c), (*this)(row, c));
    Rational inv = 1 / (*this)(row, col);
    for (std::size_t c = col; c < cols_; ++c) (*this)(row, c) *= inv;
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r == row || (*this)(r, col) == 0) continue;
      Rational f = (*this)(r, col);
      for (std::size_t c = col; c < cols_; ++c) (*this)(r, c) -= f * (*this)(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::size_t rank(RationalMatrix m) { return m.row_reduce().size(); }

std::vector<std::vector<Rational>> left_kernel(const RationalMatrix& m) {
  // Left kernel of m = right kernel of m^T.
  RationalMatrix t(m.cols(), m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) t(c, r) = m(r, c);
  auto pivots = t.row_reduce();
  std::vector<bool> is_pivot(t.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t f = 0; f < t.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> v(t.cols(), 0);
    v[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -t(i, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<std::vector<Rational>> solve(const RationalMatrix& a, const std::vector<Rational>& b,
                                           std::vector<std::size_t>* free_columns) {
  RationalMatrix aug(a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
    aug(r, a.cols()) = b[r];
  }
  auto pivots = aug.row_reduce();
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
  std::vector<Rational> x(a.cols(), 0);
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug(i, a.cols());
  if (free_columns) {
    free_columns->clear();
    std::vector<bool> is_pivot(a.cols(), false);
    for (auto p : pivots) is_pivot[p] = true;
    for (std::size_t c = 0; c < a.cols(); ++c)
      if (!is_pivot[c]) free_columns->push_back(c);
  }
  return x;
}

}  // namespace eidsobs
