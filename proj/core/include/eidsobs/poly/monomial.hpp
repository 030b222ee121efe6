#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace eidsobs {

/// Upper bound on the number of ring variables. Essential smoothings and
/// elimination tricks add at most two auxiliary variables to the input.
inline constexpr std::size_t kMaxVars = 16;

/// Ordered list of variable names naming the coordinates of C^N.
///
/// Cheap to copy: the name list is shared and immutable.
class VarContext {
 public:
  VarContext() = default;
  explicit VarContext(std::vector<std::string> names);
  VarContext(std::initializer_list<std::string> names)
      : VarContext(std::vector<std::string>(names)) {}

  std::size_t size() const { return names_ ? names_->size() : 0; }
  const std::string& name(std::size_t i) const { return (*names_)[i]; }
  const std::vector<std::string>& names() const;

  /// Index of `name`, or size() when absent.
  std::size_t index_of(std::string_view name) const;
  bool contains(std::string_view name) const { return index_of(name) < size(); }

  /// Context with variable `i` removed.
  VarContext without(std::size_t i) const;
  /// Context with `name` appended (made unique by suffixing underscores).
  VarContext with_appended(std::string name) const;

  friend bool operator==(const VarContext& a, const VarContext& b);

 private:
  std::shared_ptr<const std::vector<std::string>> names_;
};

bool is_valid_identifier(std::string_view name);

/// Exponent vector of a monic monomial. Entries past the context size are 0.
class Monomial {
 public:
  using Exponent = std::uint16_t;

  Monomial() = default;
  Monomial(std::initializer_list<unsigned> exps);
  explicit Monomial(std::span<const unsigned> exps);

  static Monomial variable(std::size_t i, unsigned power = 1);

  unsigned operator[](std::size_t i) const { return exp_[i]; }
  void set(std::size_t i, unsigned e);
  unsigned degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }

  bool divides(const Monomial& other) const;
  /// Requires divides(other); returns other / *this.
  Monomial quotient_of(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;
  bool coprime(const Monomial& other) const;

  Monomial& operator*=(const Monomial& other);
  friend Monomial operator*(Monomial a, const Monomial& b) { return a *= b; }
  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.degree_ == b.degree_ && a.exp_ == b.exp_;
  }

  /// Lexicographic comparison of exponent vectors, used only as a canonical
  /// tie-breaker and for container keys.
  friend bool lex_less(const Monomial& a, const Monomial& b) {
    return a.exp_ < b.exp_;
  }

  std::size_t hash() const;

 private:
  std::array<Exponent, kMaxVars> exp_{};
  unsigned degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

/// Term orders. GlobalDegRevLex is a well-order (every monomial >= 1);
/// LocalNegDegRevLex realises the local ring at the origin (1 > x_i).
/// Elimination is a global block order used to eliminate the first
/// `block` variables.
class MonomialOrder {
 public:
  enum class Kind { GlobalDegRevLex, LocalNegDegRevLex, Elimination };

  constexpr MonomialOrder() = default;
  static constexpr MonomialOrder global() { return MonomialOrder(Kind::GlobalDegRevLex, 0); }
  static constexpr MonomialOrder local() { return MonomialOrder(Kind::LocalNegDegRevLex, 0); }
  static constexpr MonomialOrder elimination(std::size_t block) {
    return MonomialOrder(Kind::Elimination, block);
  }

  Kind kind() const { return kind_; }
  std::size_t block() const { return block_; }
  bool is_global() const { return kind_ != Kind::LocalNegDegRevLex; }

  /// Three-way comparison: negative when a < b, positive when a > b.
  int compare(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const {
    return compare(a, b) > 0;
  }

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  constexpr MonomialOrder(Kind kind, std::size_t block)
      : kind_(kind), block_(block) {}

  Kind kind_ = Kind::GlobalDegRevLex;
  std::size_t block_ = 0;
};

std::string to_string(MonomialOrder::Kind kind);

}  // namespace eidsobs
