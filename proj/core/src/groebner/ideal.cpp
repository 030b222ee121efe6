#include "eidsobs/groebner/ideal.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "eidsobs/error.hpp"
#include "eidsobs/poly/linalg.hpp"

namespace eidsobs {

Ideal::Ideal(VarContext ctx, std::vector<Polynomial> generators) : ctx_(std::move(ctx)) {
  for (auto& g : generators) {
    if (g.is_zero()) continue;
    if (!(g.context() == ctx_))
      throw Error(ErrorCode::InvalidArgument, "ideal generators must share the context");
    if (std::find(gens_.begin(), gens_.end(), g) != gens_.end()) continue;
    gens_.push_back(std::move(g));
  }
}

Ideal Ideal::unit(const VarContext& ctx) {
  return Ideal(ctx, {Polynomial::constant(ctx, 1)});
}

Ideal Ideal::maximal(const VarContext& ctx) {
  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < ctx.size(); ++i) gens.push_back(Polynomial::variable(ctx, i));
  return Ideal(ctx, std::move(gens));
}

bool Ideal::has_unit_generator() const {
  return std::any_of(gens_.begin(), gens_.end(),
                     [](const Polynomial& g) { return g.is_constant() && !g.is_zero(); });
}

Ideal Ideal::linearly_reduced() const {
  if (gens_.size() < 2) return *this;
  // Column per distinct monomial, ordered descending in degrevlex so the
  // echelon form eliminates leading terms first.
  const MonomialOrder ord = MonomialOrder::global();
  std::vector<Monomial> monos;
  for (const auto& g : gens_)
    for (const auto& t : g.terms()) monos.push_back(t.monomial);
  std::sort(monos.begin(), monos.end(),
            [&](const Monomial& a, const Monomial& b) { return ord.greater(a, b); });
  monos.erase(std::unique(monos.begin(), monos.end()), monos.end());
  if (monos.size() > 20000) return *this;
  auto column = [&](const Monomial& m) {
    auto it = std::lower_bound(monos.begin(), monos.end(), m,
                               [&](const Monomial& a, const Monomial& b) { return ord.greater(a, b); });
    return static_cast<std::size_t>(it - monos.begin());
  };
  RationalMatrix mat(gens_.size(), monos.size());
  for (std::size_t r = 0; r < gens_.size(); ++r)
    for (const auto& t : gens_[r].terms()) mat(r, column(t.monomial)) = t.coeff;
  auto pivots = mat.row_reduce();
  std::vector<Polynomial> out;
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    std::vector<Term> terms;
    for (std::size_t c = 0; c < monos.size(); ++c)
      if (mat(r, c) != 0) terms.push_back({monos[c], mat(r, c)});
    Polynomial p = Polynomial::from_terms(ctx_, std::move(terms));
    p.make_primitive();
    out.push_back(std::move(p));
  }
  return Ideal(ctx_, std::move(out));
}

std::string Ideal::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < gens_.size(); ++i) os << (i ? ", " : "") << gens_[i];
  os << ')';
  return os.str();
}

PolyMatrix::PolyMatrix(VarContext ctx, std::size_t rows, std::size_t cols)
    : ctx_(std::move(ctx)), rows_(rows), cols_(cols), entries_(rows * cols, Polynomial(ctx_)) {}

PolyMatrix::PolyMatrix(VarContext ctx, std::vector<std::vector<Polynomial>> rows)
    : ctx_(std::move(ctx)), rows_(rows.size()), cols_(rows.empty() ? 0 : rows[0].size()) {
  for (auto& row : rows) {
    if (row.size() != cols_) throw Error(ErrorCode::InvalidArgument, "matrix rows differ in length");
    for (auto& e : row) {
      if (!e.is_zero() && !(e.context() == ctx_))
        throw Error(ErrorCode::InvalidArgument, "matrix entries must share the context");
      entries_.push_back(e.is_zero() ? Polynomial(ctx_) : std::move(e));
    }
  }
}

PolyMatrix PolyMatrix::transposed() const {
  PolyMatrix t(ctx_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

void PolyMatrix::append_row(std::vector<Polynomial> row) {
  if (rows_ > 0 && row.size() != cols_)
    throw Error(ErrorCode::InvalidArgument, "row length mismatch");
  if (rows_ == 0) cols_ = row.size();
  for (auto& e : row) entries_.push_back(e.is_zero() ? Polynomial(ctx_) : std::move(e));
  ++rows_;
}

bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

namespace {

// Laplace expansion along rows with memoisation on the remaining column set.
class DeterminantEvaluator {
 public:
  DeterminantEvaluator(const PolyMatrix& m, const std::vector<std::size_t>& rows)
      : m_(m), rows_(rows) {}

  Polynomial det(const std::vector<std::size_t>& cols) {
    std::uint32_t mask = 0;
    for (auto c : cols) mask |= 1u << c;
    return eval(0, mask, cols.size());
  }

 private:
  Polynomial eval(std::size_t depth, std::uint32_t mask, std::size_t k) {
    if (k == 0) return Polynomial::constant(m_.context(), 1);
    auto key = (std::uint64_t(depth) << 32) | mask;
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    Polynomial sum(m_.context());
    int sign = 1;
    for (std::size_t c = 0; c < 32; ++c) {
      if (!(mask & (1u << c))) continue;
      const Polynomial& e = m_(rows_[depth], c);
      if (!e.is_zero()) {
        Polynomial sub = eval(depth + 1, mask & ~(1u << c), k - 1);
        if (!sub.is_zero()) {
          Polynomial prod = e * sub;
          if (sign > 0) sum += prod; else sum -= prod;
        }
      }
      sign = -sign;
    }
    memo_.emplace(key, sum);
    return sum;
  }

  const PolyMatrix& m_;
  const std::vector<std::size_t>& rows_;
  std::map<std::uint64_t, Polynomial> memo_;
};

void combinations(std::size_t n, std::size_t k, std::vector<std::vector<std::size_t>>& out) {
  std::vector<std::size_t> cur(k);
  for (std::size_t i = 0; i < k; ++i) cur[i] = i;
  if (k > n) return;
  for (;;) {
    out.push_back(cur);
    std::size_t i = k;
    while (i > 0 && cur[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++cur[i - 1];
    for (std::size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
}

}  // namespace

Polynomial determinant(const PolyMatrix& square) {
  if (square.rows() != square.cols())
    throw Error(ErrorCode::InvalidArgument, "determinant of a non-square matrix");
  std::vector<std::size_t> rows(square.rows()), cols(square.cols());
  for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = cols[i] = i;
  DeterminantEvaluator ev(square, rows);
  return ev.det(cols);
}

Ideal minors(const PolyMatrix& m, std::size_t size) {
  if (size < 1 || size > std::min(m.rows(), m.cols()))
    throw Error(ErrorCode::OutOfRange, "minor size " + std::to_string(size) + " out of range");
  if (m.cols() > 32) throw Error(ErrorCode::ResourceLimit, "too many matrix columns");
  std::vector<std::vector<std::size_t>> row_sets, col_sets;
  combinations(m.rows(), size, row_sets);
  combinations(m.cols(), size, col_sets);
  std::vector<Polynomial> out;
  for (const auto& rs : row_sets) {
    DeterminantEvaluator ev(m, rs);
    for (const auto& cs : col_sets) out.push_back(ev.det(cs));
  }
  return Ideal(m.context(), std::move(out));
}

PolyMatrix jacobian(const VarContext& ctx, const std::vector<Polynomial>& gens) {
  PolyMatrix j(ctx, gens.size(), ctx.size());
  for (std::size_t r = 0; r < gens.size(); ++r)
    for (std::size_t c = 0; c < ctx.size(); ++c) j(r, c) = partial_derivative(gens[r], c);
  return j;
}

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
  if (!(a.context() == b.context()))
    throw Error(ErrorCode::InvalidArgument, "ideal sum of different contexts");
  std::vector<Polynomial> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return Ideal(a.context(), std::move(gens));
}

Ideal ideal_product(const Ideal& a, const Ideal& b) {
  std::vector<Polynomial> gens;
  for (const auto& f : a.generators())
    for (const auto& g : b.generators()) gens.push_back(f * g);
  return Ideal(a.context(), std::move(gens));
}

}  // namespace eidsobs
