#include "eidsobs/poly/monomial.hpp"

#include <algorithm>
#include <cctype>

#include "eidsobs/error.hpp"

namespace eidsobs {

bool is_valid_identifier(std::string_view name) {
  if (name.empty() || !std::isalpha(static_cast<unsigned char>(name[0])))
    return false;
  return std::all_of(name.begin() + 1, name.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

VarContext::VarContext(std::vector<std::string> names) {
  if (names.empty())
    throw Error(ErrorCode::InvalidArgument, "variable context must not be empty");
  if (names.size() > kMaxVars)
    throw Error(ErrorCode::ResourceLimit,
                "at most " + std::to_string(kMaxVars) + " variables supported");
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (!is_valid_identifier(names[i]))
      throw Error(ErrorCode::InvalidArgument, "invalid variable name '" + names[i] + "'");
    for (std::size_t j = 0; j < i; ++j)
      if (names[j] == names[i])
        throw Error(ErrorCode::InvalidArgument, "duplicate variable name '" + names[i] + "'");
  }
  names_ = std::make_shared<const std::vector<std::string>>(std::move(names));
}

const std::vector<std::string>& VarContext::names() const {
  static const std::vector<std::string> empty;
  return names_ ? *names_ : empty;
}

std::size_t VarContext::index_of(std::string_view name) const {
  const auto& ns = names();
  auto it = std::find(ns.begin(), ns.end(), name);
  return static_cast<std::size_t>(it - ns.begin());
}

VarContext VarContext::without(std::size_t i) const {
  std::vector<std::string> rest = names();
  if (i >= rest.size())
    throw Error(ErrorCode::OutOfRange, "variable index out of range");
  rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
  return VarContext(std::move(rest));
}

VarContext VarContext::with_appended(std::string name) const {
  std::vector<std::string> all = names();
  while (std::find(all.begin(), all.end(), name) != all.end()) name += '_';
  all.push_back(std::move(name));
  return VarContext(std::move(all));
}

bool operator==(const VarContext& a, const VarContext& b) {
  return a.names_ == b.names_ || a.names() == b.names();
}

Monomial::Monomial(std::initializer_list<unsigned> exps)
    : Monomial(std::span<const unsigned>(exps.begin(), exps.size())) {}

Monomial::Monomial(std::span<const unsigned> exps) {
  if (exps.size() > kMaxVars)
    throw Error(ErrorCode::OutOfRange, "too many exponents");
  for (std::size_t i = 0; i < exps.size(); ++i) set(i, exps[i]);
}

Monomial Monomial::variable(std::size_t i, unsigned power) {
  Monomial m;
  m.set(i, power);
  return m;
}

void Monomial::set(std::size_t i, unsigned e) {
  if (e > 0xFFFFu) throw Error(ErrorCode::ResourceLimit, "exponent overflow");
  degree_ = degree_ - exp_[i] + e;
  exp_[i] = static_cast<Exponent>(e);
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (exp_[i] > other.exp_[i]) return false;
  return true;
}

Monomial Monomial::quotient_of(const Monomial& other) const {
  Monomial q;
  for (std::size_t i = 0; i < kMaxVars; ++i)
    q.exp_[i] = static_cast<Exponent>(other.exp_[i] - exp_[i]);
  q.degree_ = other.degree_ - degree_;
  return q;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial l;
  unsigned d = 0;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    l.exp_[i] = std::max(exp_[i], other.exp_[i]);
    d += l.exp_[i];
  }
  l.degree_ = d;
  return l;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (exp_[i] != 0 && other.exp_[i] != 0) return false;
  return true;
}

Monomial& Monomial::operator*=(const Monomial& other) {
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    unsigned e = unsigned(exp_[i]) + other.exp_[i];
    if (e > 0xFFFFu) throw Error(ErrorCode::ResourceLimit, "exponent overflow");
    exp_[i] = static_cast<Exponent>(e);
  }
  degree_ += other.degree_;
  return *this;
}

std::size_t Monomial::hash() const {
  std::size_t h = 1469598103934665603ull;
  for (auto e : exp_) h = (h ^ e) * 1099511628211ull;
  return h;
}

namespace {

// Reverse lexicographic tie-break on a range of variables: the monomial with
// the smaller exponent in the last differing variable is the larger one.
int revlex(const Monomial& a, const Monomial& b, std::size_t begin, std::size_t end) {
  for (std::size_t i = end; i-- > begin;) {
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

unsigned block_degree(const Monomial& m, std::size_t begin, std::size_t end) {
  unsigned d = 0;
  for (std::size_t i = begin; i < end; ++i) d += m[i];
  return d;
}

}  // namespace

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  switch (kind_) {
    case Kind::GlobalDegRevLex:
      if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
      return revlex(a, b, 0, kMaxVars);
    case Kind::LocalNegDegRevLex:
      if (a.degree() != b.degree()) return a.degree() < b.degree() ? 1 : -1;
      return revlex(a, b, 0, kMaxVars);
    case Kind::Elimination: {
      unsigned da = block_degree(a, 0, block_), db = block_degree(b, 0, block_);
      if (da != db) return da > db ? 1 : -1;
      if (int c = revlex(a, b, 0, block_)) return c;
      unsigned ra = a.degree() - da, rb = b.degree() - db;
      if (ra != rb) return ra > rb ? 1 : -1;
      return revlex(a, b, block_, kMaxVars);
    }
  }
  return 0;
}

std::string to_string(MonomialOrder::Kind kind) {
  switch (kind) {
    case MonomialOrder::Kind::GlobalDegRevLex: return "dp";
    case MonomialOrder::Kind::LocalNegDegRevLex: return "ds";
    case MonomialOrder::Kind::Elimination: return "elim";
  }
  return "?";
}

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::UnknownVariable: return "UnknownVariable";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::ResourceLimit: return "ResourceLimit";
    case ErrorCode::IdealIsUnit: return "IdealIsUnit";
    case ErrorCode::NonIsolated: return "NonIsolated";
    case ErrorCode::NotAGerm: return "NotAGerm";
    case ErrorCode::NonIntegerResult: return "NonIntegerResult";
    case ErrorCode::NotICIS: return "NotICIS";
    case ErrorCode::GenericityExhausted: return "GenericityExhausted";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotSmoothable: return "NotSmoothable";
    case ErrorCode::RegimeMismatch: return "RegimeMismatch";
    case ErrorCode::MissingInput: return "MissingInput";
    case ErrorCode::ZeroForm: return "ZeroForm";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

}  // namespace eidsobs
