#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "eidsobs/poly/polynomial.hpp"

namespace eidsobs {

/// Finitely generated ideal of Q[x_1..x_N]. Zero generators are dropped and
/// exact duplicates removed; an empty generator list is the zero ideal.
class Ideal {
 public:
  Ideal() = default;
  Ideal(VarContext ctx, std::vector<Polynomial> generators);

  static Ideal unit(const VarContext& ctx);
  /// The maximal ideal of the origin, (x_1, ..., x_N).
  static Ideal maximal(const VarContext& ctx);

  const VarContext& context() const { return ctx_; }
  const std::vector<Polynomial>& generators() const { return gens_; }
  std::size_t size() const { return gens_.size(); }
  bool is_zero() const { return gens_.empty(); }
  /// True when some generator is a non-zero constant.
  bool has_unit_generator() const;

  /// Q-linear interreduction of the generators (row echelon over their
  /// monomial support). Generates the same ideal.
  Ideal linearly_reduced() const;

  std::string to_string() const;

 private:
  VarContext ctx_;
  std::vector<Polynomial> gens_;
};

/// Rectangular matrix of polynomials over a shared context.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(VarContext ctx, std::size_t rows, std::size_t cols);
  PolyMatrix(VarContext ctx, std::vector<std::vector<Polynomial>> rows);

  const VarContext& context() const { return ctx_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Polynomial& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Polynomial& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }
  const std::vector<Polynomial>& entries() const { return entries_; }

  PolyMatrix transposed() const;
  /// Appends a row (length must equal cols()).
  void append_row(std::vector<Polynomial> row);

  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b);

 private:
  VarContext ctx_;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Polynomial> entries_;
};

Polynomial determinant(const PolyMatrix& square);

/// All s x s minors; row index sets in lexicographic order, and for each row
/// set the column index sets in lexicographic order. Zero minors are dropped
/// by the Ideal constructor.
Ideal minors(const PolyMatrix& m, std::size_t size);

/// Rows are the generators, columns the variables.
PolyMatrix jacobian(const VarContext& ctx, const std::vector<Polynomial>& gens);

Ideal ideal_sum(const Ideal& a, const Ideal& b);

/// Ideal generated by the products of the generators.
Ideal ideal_product(const Ideal& a, const Ideal& b);

}  // namespace eidsobs
