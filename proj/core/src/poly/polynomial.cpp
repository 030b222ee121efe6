#include "eidsobs/poly/polynomial.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <sstream>

#include "eidsobs/error.hpp"

namespace eidsobs {

Polynomial Polynomial::constant(const VarContext& ctx, const Rational& c,
                                MonomialOrder order) {
  Polynomial p(ctx, order);
  if (c != 0) p.terms_.push_back({Monomial(), c});
  return p;
}

Polynomial Polynomial::variable(const VarContext& ctx, std::size_t i,
                                MonomialOrder order) {
  if (i >= ctx.size()) throw Error(ErrorCode::OutOfRange, "variable index out of range");
  return monomial(ctx, Monomial::variable(i), 1, order);
}

Polynomial Polynomial::monomial(const VarContext& ctx, const Monomial& m,
                                const Rational& c, MonomialOrder order) {
  Polynomial p(ctx, order);
  if (c != 0) p.terms_.push_back({m, c});
  return p;
}

Polynomial Polynomial::from_terms(const VarContext& ctx, std::vector<Term> terms,
                                  MonomialOrder order) {
  Polynomial p(ctx, order);
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
    return order.greater(a.monomial, b.monomial);
  });
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().monomial == t.monomial) {
      p.terms_.back().coeff += t.coeff;
      if (p.terms_.back().coeff == 0) p.terms_.pop_back();
    } else if (t.coeff != 0) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one());
}

unsigned Polynomial::total_degree() const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.monomial.degree());
  return d;
}

unsigned Polynomial::lowest_degree() const {
  unsigned d = ~0u;
  for (const auto& t : terms_) d = std::min(d, t.monomial.degree());
  return terms_.empty() ? 0 : d;
}

Polynomial Polynomial::homogeneous_part(unsigned d) const {
  Polynomial p(ctx_, order_);
  for (const auto& t : terms_)
    if (t.monomial.degree() == d) p.terms_.push_back(t);
  return p;
}

void Polynomial::truncate_from_degree(unsigned d) {
  std::erase_if(terms_, [d](const Term& t) { return t.monomial.degree() >= d; });
}

Rational Polynomial::constant_term() const { return coefficient(Monomial()); }

Rational Polynomial::coefficient(const Monomial& m) const {
  for (const auto& t : terms_)
    if (t.monomial == m) return t.coeff;
  return 0;
}

bool Polynomial::involves(std::size_t var) const {
  return std::any_of(terms_.begin(), terms_.end(),
                     [var](const Term& t) { return t.monomial[var] != 0; });
}

Polynomial Polynomial::with_order(MonomialOrder order) const {
  if (order == order_) return *this;
  Polynomial p(ctx_, order);
  p.terms_ = terms_;
  std::sort(p.terms_.begin(), p.terms_.end(), [&](const Term& a, const Term& b) {
    return order.greater(a.monomial, b.monomial);
  });
  return p;
}

void Polynomial::make_monic() {
  if (terms_.empty() || terms_[0].coeff == 1) return;
  Rational inv = 1 / terms_[0].coeff;
  for (auto& t : terms_) t.coeff *= inv;
}

void Polynomial::make_primitive() {
  if (terms_.empty()) return;
  Integer den_lcm = 1, num_gcd = 0;
  for (const auto& t : terms_) {
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coeff.get_den_mpz_t());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coeff.get_num_mpz_t());
  }
  Rational scale(den_lcm, num_gcd);
  if (terms_[0].coeff < 0) scale = -scale;
  if (scale == 1) return;
  for (auto& t : terms_) t.coeff *= scale;
}

void Polynomial::check_compatible(const Polynomial& g) const {
  if (ctx_.size() != g.ctx_.size() || !(ctx_ == g.ctx_))
    throw Error(ErrorCode::InvalidArgument, "polynomials live in different variable contexts");
}

// this += c * m * g  (m == nullptr means m = 1)
void Polynomial::add_scaled(const Rational& c, const Monomial* m, const Polynomial& g) {
  if (g.terms_.empty() || c == 0) return;
  if (ctx_.size() == 0 && terms_.empty()) {
    ctx_ = g.ctx_;
    order_ = g.order_;
  } else {
    check_compatible(g);
  }
  const Polynomial* src = &g;
  Polynomial reordered;
  if (!(g.order_ == order_)) {
    reordered = g.with_order(order_);
    src = &reordered;
  }
  std::vector<Term> out;
  out.reserve(terms_.size() + src->terms_.size());
  auto a = terms_.begin();
  auto b = src->terms_.begin();
  while (a != terms_.end() || b != src->terms_.end()) {
    if (b == src->terms_.end()) {
      out.push_back(std::move(*a++));
      continue;
    }
    Monomial mb = m ? b->monomial * *m : b->monomial;
    int cmp = a == terms_.end() ? -1 : order_.compare(a->monomial, mb);
    if (cmp > 0) {
      out.push_back(std::move(*a++));
    } else if (cmp < 0) {
      out.push_back({mb, c * b->coeff});
      ++b;
    } else {
      a->coeff += c * b->coeff;
      if (a->coeff != 0) out.push_back(std::move(*a));
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
}

Polynomial& Polynomial::operator+=(const Polynomial& g) {
  add_scaled(1, nullptr, g);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& g) {
  add_scaled(-1, nullptr, g);
  return *this;
}

void Polynomial::sub_mul(const Rational& c, const Monomial& m, const Polynomial& g) {
  add_scaled(-c, &m, g);
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& t : terms_) t.coeff *= c;
  }
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& g) {
  *this = *this * g;
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (auto& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) {
    const VarContext& ctx = a.ctx_.size() ? a.ctx_ : b.ctx_;
    return Polynomial(ctx, a.order_);
  }
  a.check_compatible(b);
  // Accumulate products in a hash-free map keyed by the exponent vector, then
  // sort once.
  std::vector<Term> acc;
  acc.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) acc.push_back({s.monomial * t.monomial, s.coeff * t.coeff});
  return Polynomial::from_terms(a.ctx_, std::move(acc), a.order_);
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  if (a.terms_.empty()) return true;
  if (!(a.ctx_ == b.ctx_)) return false;
  const Polynomial& bb = b.order_ == a.order_ ? b : b.with_order(a.order_);
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (!(a.terms_[i].monomial == bb.terms_[i].monomial) ||
        a.terms_[i].coeff != bb.terms_[i].coeff)
      return false;
  return true;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = constant(ctx_, 1, order_);
  Polynomial base = *this;
  while (e) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e) base *= base;
  }
  return result;
}

std::string format_rational(const Rational& q) {
  return q.get_str();
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    Rational c = t.coeff;
    bool negative = c < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    bool unit = c == 1;
    bool wrote = false;
    if (!unit || t.monomial.is_one()) {
      os << c.get_str();
      wrote = true;
    }
    for (std::size_t i = 0; i < ctx_.size(); ++i) {
      unsigned e = t.monomial[i];
      if (!e) continue;
      if (wrote) os << '*';
      os << ctx_.name(i);
      if (e > 1) os << '^' << e;
      wrote = true;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Polynomial& f) {
  return os << f.to_string();
}

Polynomial partial_derivative(const Polynomial& f, std::size_t i) {
  if (i >= f.context().size())
    throw Error(ErrorCode::OutOfRange, "derivative variable index out of range");
  std::vector<Term> terms;
  for (const auto& t : f.terms()) {
    unsigned e = t.monomial[i];
    if (!e) continue;
    Monomial m = t.monomial;
    m.set(i, e - 1);
    terms.push_back({m, t.coeff * e});
  }
  return Polynomial::from_terms(f.context(), std::move(terms), f.order());
}

namespace {

Monomial drop_variable(const Monomial& m, std::size_t i, std::size_t n) {
  Monomial r;
  for (std::size_t j = 0, k = 0; j < n; ++j) {
    if (j == i) continue;
    r.set(k++, m[j]);
  }
  return r;
}

}  // namespace

Polynomial substitute(const Polynomial& f, std::size_t i, const Polynomial& g) {
  const VarContext& ctx = f.context();
  if (i >= ctx.size()) throw Error(ErrorCode::OutOfRange, "substitution index out of range");
  VarContext rest = ctx.without(i);
  Polynomial gg(rest, f.order());
  if (g.context() == ctx) {
    if (g.involves(i))
      throw Error(ErrorCode::InvalidArgument,
                  "substituted polynomial involves the eliminated variable");
    gg = change_context(g, rest).with_order(f.order());
  } else if (g.context() == rest) {
    gg = g.with_order(f.order());
  } else if (!g.is_zero()) {
    throw Error(ErrorCode::InvalidArgument, "substitution polynomial has the wrong context");
  }
  std::vector<Polynomial> powers{Polynomial::constant(rest, 1, f.order())};
  Polynomial result(rest, f.order());
  for (const auto& t : f.terms()) {
    unsigned e = t.monomial[i];
    while (powers.size() <= e) powers.push_back(powers.back() * gg);
    Monomial rest_mono = drop_variable(t.monomial, i, ctx.size());
    result.sub_mul(-t.coeff, rest_mono, powers[e]);
  }
  return result;
}

Rational evaluate(const Polynomial& f, std::span<const Rational> point) {
  const std::size_t n = f.context().size();
  if (point.size() != n) throw Error(ErrorCode::InvalidArgument, "point has wrong dimension");
  Rational sum = 0;
  for (const auto& t : f.terms()) {
    Rational v = t.coeff;
    for (std::size_t i = 0; i < n; ++i) {
      for (unsigned e = 0; e < t.monomial[i]; ++e) v *= point[i];
    }
    sum += v;
  }
  return sum;
}

Polynomial change_context(const Polynomial& f, const VarContext& target) {
  const VarContext& src = f.context();
  std::vector<std::size_t> map(src.size(), target.size());
  for (std::size_t i = 0; i < src.size(); ++i) map[i] = target.index_of(src.name(i));
  std::vector<Term> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms()) {
    Monomial m;
    for (std::size_t i = 0; i < src.size(); ++i) {
      if (!t.monomial[i]) continue;
      if (map[i] >= target.size())
        throw Error(ErrorCode::UnknownVariable,
                    "variable '" + src.name(i) + "' missing from target context");
      m.set(map[i], t.monomial[i]);
    }
    terms.push_back({m, t.coeff});
  }
  return Polynomial::from_terms(target, std::move(terms), f.order());
}

std::vector<Rational> linear_part(const Polynomial& f) {
  std::vector<Rational> lin(f.context().size(), 0);
  for (const auto& t : f.terms()) {
    if (t.monomial.degree() != 1) continue;
    for (std::size_t i = 0; i < lin.size(); ++i)
      if (t.monomial[i]) lin[i] = t.coeff;
  }
  return lin;
}

}  // namespace eidsobs
