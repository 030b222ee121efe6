#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "eidsobs/poly/monomial.hpp"

namespace eidsobs {

using Rational = mpq_class;
using Integer = mpz_class;

struct Term {
  Monomial monomial;
  Rational coeff;
};

/// Exact multivariate polynomial over Q.
///
/// Terms are kept sorted in descending order under the polynomial's active
/// monomial order; no stored coefficient is zero, so the zero polynomial has
/// no terms. Arithmetic between polynomials with different active orders
/// yields a result in the left operand's order.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(VarContext ctx, MonomialOrder order = MonomialOrder::global())
      : ctx_(std::move(ctx)), order_(order) {}

  static Polynomial constant(const VarContext& ctx, const Rational& c,
                             MonomialOrder order = MonomialOrder::global());
  static Polynomial variable(const VarContext& ctx, std::size_t i,
                             MonomialOrder order = MonomialOrder::global());
  static Polynomial monomial(const VarContext& ctx, const Monomial& m,
                             const Rational& c = 1,
                             MonomialOrder order = MonomialOrder::global());
  /// Builds from unsorted terms; duplicates are combined and zeros dropped.
  static Polynomial from_terms(const VarContext& ctx, std::vector<Term> terms,
                               MonomialOrder order = MonomialOrder::global());

  const VarContext& context() const { return ctx_; }
  MonomialOrder order() const { return order_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Leading term under the active order. Requires !is_zero().
  const Term& leading() const { return terms_.front(); }
  const Monomial& leading_monomial() const { return terms_.front().monomial; }
  const Rational& leading_coeff() const { return terms_.front().coeff; }

  unsigned total_degree() const;
  /// Smallest total degree of a term (the order at the origin).
  unsigned lowest_degree() const;
  /// Sum of the terms of total degree exactly `d`.
  Polynomial homogeneous_part(unsigned d) const;
  /// Drops every term of total degree >= `d`.
  void truncate_from_degree(unsigned d);
  Rational constant_term() const;
  Rational coefficient(const Monomial& m) const;

  bool involves(std::size_t var) const;

  /// Same polynomial with terms re-sorted under `order`.
  Polynomial with_order(MonomialOrder order) const;
  void make_monic();
  /// Scales to an integer polynomial with coprime coefficients and positive
  /// leading coefficient.
  void make_primitive();

  Polynomial& operator+=(const Polynomial& g);
  Polynomial& operator-=(const Polynomial& g);
  Polynomial& operator*=(const Polynomial& g);
  Polynomial& operator*=(const Rational& c);
  Polynomial operator-() const;

  /// this -= c * m * g, the workhorse of reduction.
  void sub_mul(const Rational& c, const Monomial& m, const Polynomial& g);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }

  /// Structural equality (same context, same terms); the active order is
  /// ignored.
  friend bool operator==(const Polynomial& a, const Polynomial& b);

  Polynomial pow(unsigned e) const;

  std::string to_string() const;

 private:
  void check_compatible(const Polynomial& g) const;
  void add_scaled(const Rational& c, const Monomial* m, const Polynomial& g);

  VarContext ctx_;
  MonomialOrder order_;
  std::vector<Term> terms_;
};

std::ostream& operator<<(std::ostream& os, const Polynomial& f);

std::string format_rational(const Rational& q);

/// Exact formal derivative with respect to variable `i`.
Polynomial partial_derivative(const Polynomial& f, std::size_t i);

/// Replaces variable `i` by `g`, a polynomial in the context without `i`.
/// The result lives in that (N-1)-variable context.
Polynomial substitute(const Polynomial& f, std::size_t i, const Polynomial& g);

/// Evaluates at a rational point of length N.
Rational evaluate(const Polynomial& f, std::span<const Rational> point);

/// Re-expresses `f` in `target`, matching variables by name. Every variable
/// occurring in `f` must exist in `target`.
Polynomial change_context(const Polynomial& f, const VarContext& target);

/// Linear part (coefficients of x_1..x_N).
std::vector<Rational> linear_part(const Polynomial& f);

}  // namespace eidsobs
