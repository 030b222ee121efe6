#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "eidsobs/poly/polynomial.hpp"

namespace eidsobs {

/// Dense row-major matrix over Q, sized for the small systems that show up
/// here (linearisations, weight systems, generator interreduction).
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  /// In-place reduced row echelon form; returns the pivot columns.
  std::vector<std::size_t> row_reduce();

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> data_;
};

std::size_t rank(RationalMatrix m);

/// Basis of {v : v * m = 0} (left kernel).
std::vector<std::vector<Rational>> left_kernel(const RationalMatrix& m);

/// Solves a * x = b. Returns one solution (free variables set to 0) or
/// nullopt when inconsistent. `free_columns` receives the free variables.
std::optional<std::vector<Rational>> solve(const RationalMatrix& a, const std::vector<Rational>& b,
                                           std::vector<std::size_t>* free_columns = nullptr);

}  // namespace eidsobs
