#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "eidsobs/groebner/standard_basis.hpp"
#include "eidsobs/poly/generic.hpp"

namespace eidsobs {

/// X = F^{-1}(M^t_{m,n}) for an m x n polynomial matrix F on C^N: the locus
/// where rank F < t, cut out by the t x t minors.
class EidsDescriptor {
 public:
  EidsDescriptor() = default;
  /// Throws OutOfRange unless 1 <= t <= min(m, n), InvalidArgument when F is
  /// empty or lives in another context, NotAGerm when rank F(0) >= t.
  EidsDescriptor(PolyMatrix matrix, std::size_t t);

  const VarContext& context() const { return matrix_.context(); }
  const PolyMatrix& matrix() const { return matrix_; }
  std::size_t N() const { return context().size(); }
  std::size_t m() const { return matrix_.rows(); }
  std::size_t n() const { return matrix_.cols(); }
  std::size_t t() const { return t_; }

  /// (m - i + 1)(n - i + 1), the codimension of M^i_{m,n}.
  std::size_t expected_codim(std::size_t i) const { return (m() - i + 1) * (n() - i + 1); }
  std::size_t codim() const { return expected_codim(t_); }
  /// N - codim, or -1 when the codimension exceeds N.
  int expected_dimension() const;

  /// N <= (m-t+2)(n-t+2): isolated singularity range.
  bool in_ids_range() const { return N() <= (m() - t_ + 2) * (n() - t_ + 2); }
  /// N < (m-t+2)(n-t+2): smoothable range.
  bool in_smoothable_range() const { return N() < (m() - t_ + 2) * (n() - t_ + 2); }
  /// N <= (m-t+3)(n-t+3): at most three strata.
  bool in_three_strata_range() const { return N() <= (m() - t_ + 3) * (n() - t_ + 3); }

  /// The ideal of X (t-minors).
  Ideal ideal() const { return minors(matrix_, t_); }

  std::string to_string() const;

 private:
  PolyMatrix matrix_;
  std::size_t t_ = 1;
};

/// rank over Q of a constant-coefficient evaluation of F at the origin.
std::size_t rank_at_origin(const PolyMatrix& f);

}  // namespace eidsobs
