#include "eidsobs/eids/descriptor.hpp"

#include <sstream>

#include "eidsobs/error.hpp"
#include "eidsobs/poly/linalg.hpp"

namespace eidsobs {

EidsDescriptor::EidsDescriptor(PolyMatrix matrix, std::size_t t) : matrix_(std::move(matrix)), t_(t) {
  if (matrix_.rows() == 0 || matrix_.cols() == 0)
    throw Error(ErrorCode::InvalidArgument, "empty matrix");
  if (matrix_.context().size() == 0) throw Error(ErrorCode::InvalidArgument, "no variables");
  if (t < 1 || t > std::min(m(), n()))
    throw Error(ErrorCode::OutOfRange, "rank bound t=" + std::to_string(t) + " outside 1.." +
                                          std::to_string(std::min(m(), n())));
  if (rank_at_origin(matrix_) >= t)
    throw Error(ErrorCode::NotAGerm, "rank F(0) >= t: the origin is not on X");
}

int EidsDescriptor::expected_dimension() const {
  return codim() > N() ? -1 : static_cast<int>(N() - codim());
}

std::string EidsDescriptor::to_string() const {
  std::ostringstream os;
  os << "(" << m() << "," << n() << "," << t_ << ") in C^" << N() << ": [";
  for (std::size_t r = 0; r < m(); ++r) {
    os << (r ? "; " : "");
    for (std::size_t c = 0; c < n(); ++c) os << (c ? ", " : "") << matrix_(r, c);
  }
  os << "]";
  return os.str();
}

std::size_t rank_at_origin(const PolyMatrix& f) {
  RationalMatrix a(f.rows(), f.cols());
  for (std::size_t r = 0; r < f.rows(); ++r)
    for (std::size_t c = 0; c < f.cols(); ++c) a(r, c) = f(r, c).constant_term();
  return rank(a);
}

}  // namespace eidsobs
