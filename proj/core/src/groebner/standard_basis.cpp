#include "eidsobs/groebner/standard_basis.hpp"

#include <algorithm>
#include <limits>

#include "eidsobs/error.hpp"

namespace eidsobs {

void Limits::check_deadline() const {
  if (deadline && std::chrono::steady_clock::now() > *deadline)
    throw Error(ErrorCode::ResourceLimit, "time budget exceeded");
}

void Limits::charge(std::uint64_t units) const {
  if (work_used) {
    *work_used += units;
    if (max_work && *work_used > max_work) throw Error(ErrorCode::ResourceLimit, "work budget exceeded");
  }
  check_deadline();
}

Limits Limits::with_work_budget(std::uint64_t units) const {
  Limits out = *this;
  out.max_work = units;
  out.work_used = std::make_shared<std::uint64_t>(0);
  return out;
}

Limits Limits::with_timeout(std::chrono::milliseconds budget) const {
  Limits out = *this;
  out.deadline = std::chrono::steady_clock::now() + budget;
  return out;
}

namespace {

constexpr std::size_t kInput = std::numeric_limits<std::size_t>::max();

struct Element {
  Polynomial poly;
  unsigned ecart = 0;
  unsigned sugar = 0;
  bool redundant = false;  // leading monomial divisible by a later element
};

struct Pair {
  std::size_t i;
  std::size_t j;  // kInput: `i` indexes the input generators
  Monomial lcm;
  unsigned sugar;
};

unsigned ecart_of(const Polynomial& f) {
  return f.is_zero() ? 0 : f.total_degree() - f.leading_monomial().degree();
}

class Engine {
 public:
  Engine(VarContext ctx, MonomialOrder order, const Limits& limits)
      : ctx_(std::move(ctx)), order_(order), limits_(limits), local_(!order.is_global()) {}

  StandardBasis run(const std::vector<Polynomial>& gens) {
    for (const auto& g : gens) {
      Polynomial f = g.with_order(order_);
      if (f.is_zero()) continue;
      f.make_primitive();
      inputs_.push_back(std::move(f));
      pairs_.push_back({inputs_.size() - 1, kInput, Monomial(), inputs_.back().total_degree()});
    }
    while (!pairs_.empty()) {
      limits_.check_deadline();
      Pair p = pop_best_pair();
      Polynomial h = p.j == kInput ? inputs_[p.i] : spoly(p);
      if (h.is_zero()) continue;
      if (trunc_) h.truncate_from_degree(*trunc_);
      h = local_ ? mora_normal_form(std::move(h)) : top_reduce(std::move(h));
      if (h.is_zero()) continue;
      h.make_primitive();
      if (h.leading_monomial().is_one()) {
        elements_.clear();
        pairs_.clear();
        elements_.push_back({std::move(h), 0, 0});
        break;
      }
      if (h.total_degree() > limits_.max_degree)
        throw Error(ErrorCode::ResourceLimit,
                    "basis degree exceeds max-degree " + std::to_string(limits_.max_degree));
      unsigned sugar = std::max(p.sugar, h.total_degree());
      insert(std::move(h), sugar);
      if (live_count() > limits_.max_basis)
        throw Error(ErrorCode::ResourceLimit,
                    "basis size exceeds max-basis " + std::to_string(limits_.max_basis));
      if (local_) update_highest_corner();
    }
    return finish();
  }

 private:
  std::size_t live_count() const {
    return static_cast<std::size_t>(std::count_if(elements_.begin(), elements_.end(), [](const Element& e) {
      return !e.redundant;
    }));
  }

  Pair pop_best_pair() {
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs_.size(); ++k) {
      const Pair& a = pairs_[k];
      const Pair& b = pairs_[best];
      if (a.sugar != b.sugar) {
        if (a.sugar < b.sugar) best = k;
        continue;
      }
      // Inputs first, then the smaller lcm in degrevlex.
      bool ai = a.j == kInput, bi = b.j == kInput;
      if (ai != bi) {
        if (ai) best = k;
        continue;
      }
      if (!ai && MonomialOrder::global().compare(a.lcm, b.lcm) < 0) best = k;
    }
    Pair p = pairs_[best];
    pairs_.erase(pairs_.begin() + static_cast<std::ptrdiff_t>(best));
    return p;
  }

  // Fraction-free elimination of term `i` of h by g (both primitive):
  // h := a*h - b*m*g, then content removal. Keeps coefficients integral.
  static void cancel_term(Polynomial& h, std::size_t i, const Polynomial& g) {
    const Monomial m = g.leading_monomial().quotient_of(h.terms()[i].monomial);
    Integer a = g.leading_coeff().get_num(), b = h.terms()[i].coeff.get_num(), d;
    mpz_gcd(d.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    a /= d;
    b /= d;
    if (a != 1) h *= Rational(a);
    h.sub_mul(Rational(b), m, g);
    h.make_primitive();
  }

  Polynomial spoly(const Pair& p) const {
    const Polynomial& f = elements_[p.i].poly;
    const Polynomial& g = elements_[p.j].poly;
    const Integer a = f.leading_coeff().get_num(), b = g.leading_coeff().get_num();
    Integer d;
    mpz_gcd(d.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    Polynomial s(ctx_, order_);
    s.sub_mul(Rational(-b / d), f.leading_monomial().quotient_of(p.lcm), f);
    s.sub_mul(Rational(a / d), g.leading_monomial().quotient_of(p.lcm), g);
    s.make_primitive();
    return s;
  }

  // Global top reduction; the reducer with the fewest terms wins.
  Polynomial top_reduce(Polynomial h) const {
    while (!h.is_zero()) {
      const Element* best = nullptr;
      for (const auto& e : elements_) {
        if (!e.poly.leading_monomial().divides(h.leading_monomial())) continue;
        if (!best || e.poly.size() < best->poly.size()) best = &e;
      }
      if (!best) break;
      limits_.charge(h.size());
      cancel_term(h, 0, best->poly);
      if (h.total_degree() > limits_.max_degree)
        throw Error(ErrorCode::ResourceLimit, "intermediate degree exceeds max-degree");
    }
    return h;
  }

  // Mora's normal form: reducers are chosen by smallest ecart (ties by
  // index); whenever the chosen reducer has larger ecart than h, h itself
  // joins the reducer set.
  Polynomial mora_normal_form(Polynomial h) {
    std::vector<Element> extra;
    std::size_t steps = 0;
    while (!h.is_zero()) {
      if (++steps % 256 == 0) limits_.check_deadline();
      limits_.charge(h.size());
      const Monomial& lm = h.leading_monomial();
      const Polynomial* best = nullptr;
      unsigned best_ecart = 0;
      auto consider = [&](const Element& e) {
        if (!e.poly.leading_monomial().divides(lm)) return;
        if (!best || e.ecart < best_ecart) {
          best = &e.poly;
          best_ecart = e.ecart;
        }
      };
      for (const auto& e : elements_) consider(e);
      for (const auto& e : extra) consider(e);
      if (!best) break;
      unsigned he = ecart_of(h);
      Polynomial reducer = *best;
      if (best_ecart > he) extra.push_back({h, he, 0});
      cancel_term(h, 0, reducer);
      if (trunc_) h.truncate_from_degree(*trunc_);
      if (h.total_degree() > limits_.max_degree)
        throw Error(ErrorCode::ResourceLimit, "intermediate degree exceeds max-degree");
    }
    return h;
  }

  bool disjoint(const Monomial& a, const Monomial& b) const { return !local_ && a.coprime(b); }

  // Gebauer-Moeller installation of h.
  void insert(Polynomial h, unsigned sugar) {
    const std::size_t hi = elements_.size();
    const Monomial hlm = h.leading_monomial();
    unsigned ecart = ecart_of(h);
    elements_.push_back({std::move(h), ecart, sugar});

    struct Candidate {
      std::size_t g;
      Monomial lcm;
      bool disjoint;
      bool keep = true;
    };
    std::vector<Candidate> cand;
    for (std::size_t g = 0; g < hi; ++g) {
      const Element& e = elements_[g];
      if (e.redundant) continue;
      const Monomial& glm = e.poly.leading_monomial();
      cand.push_back({g, hlm.lcm(glm), disjoint(hlm, glm)});
    }
    // Chain criterion among the new pairs: drop (h,g1) if another new pair's
    // lcm properly divides it; among equal lcms keep one.
    for (std::size_t a = 0; a < cand.size(); ++a) {
      if (cand[a].disjoint) continue;
      for (std::size_t b = 0; b < cand.size(); ++b) {
        if (a == b || !cand[b].keep) continue;
        if (cand[b].lcm.divides(cand[a].lcm) &&
            (!(cand[b].lcm == cand[a].lcm) || cand[b].disjoint || b < a)) {
          cand[a].keep = false;
          break;
        }
      }
    }
    // Old pairs whose lcm is strictly divisible by LM(h) in the GM sense.
    std::erase_if(pairs_, [&](const Pair& p) {
      if (p.j == kInput) return false;
      if (!hlm.divides(p.lcm)) return false;
      Monomial l1 = elements_[p.i].poly.leading_monomial().lcm(hlm);
      Monomial l2 = elements_[p.j].poly.leading_monomial().lcm(hlm);
      return !(l1 == p.lcm) && !(l2 == p.lcm);
    });
    for (const auto& c : cand) {
      if (!c.keep || c.disjoint) continue;
      const Element& e = elements_[c.g];
      unsigned s = std::max(e.sugar + (c.lcm.degree() - e.poly.leading_monomial().degree()),
                            sugar + (c.lcm.degree() - hlm.degree()));
      pairs_.push_back({c.g, hi, c.lcm, s});
    }
    for (std::size_t g = 0; g < hi; ++g) {
      Element& e = elements_[g];
      if (!e.redundant && hlm.divides(e.poly.leading_monomial())) e.redundant = true;
    }
  }

  // Once the leading monomials contain a pure power of every variable, all
  // monomials of degree >= D lie in the local ideal.
  void update_highest_corner() {
    const std::size_t n = ctx_.size();
    std::vector<Monomial> lead;
    std::vector<bool> pure(n, false);
    for (const auto& e : elements_) {
      if (e.redundant) continue;
      const Monomial& m = e.poly.leading_monomial();
      lead.push_back(m);
      std::size_t support = 0, var = 0;
      for (std::size_t i = 0; i < n; ++i)
        if (m[i]) {
          ++support;
          var = i;
        }
      if (support == 1) pure[var] = true;
    }
    if (!std::all_of(pure.begin(), pure.end(), [](bool b) { return b; })) return;
    unsigned max_std = 0;
    bool any = false;
    std::size_t visited = 0;
    Monomial m;
    auto dfs = [&](auto& self, std::size_t v) -> void {
      for (unsigned e = 0;; ++e) {
        m.set(v, e);
        bool in_ideal = std::any_of(lead.begin(), lead.end(), [&](const Monomial& g) { return g.divides(m); });
        if (in_ideal) break;
        if (++visited > 2000000) return;
        if (v + 1 == n) {
          max_std = std::max(max_std, m.degree());
          any = true;
        } else {
          self(self, v + 1);
        }
      }
      m.set(v, 0);
    };
    dfs(dfs, 0);
    if (visited > 2000000) return;
    unsigned d = any ? max_std + 1 : 0;
    if (trunc_ && *trunc_ <= d) return;
    trunc_ = d;
    // The leading monomials already contain every monomial of degree d, so
    // terms of degree >= d may be dropped from tails; an element whose
    // leading monomial lies there is replaced by that monomial.
    for (auto& e : elements_) {
      Term lead = e.poly.leading();
      if (lead.monomial.degree() >= d) {
        e.poly = Polynomial::monomial(ctx_, lead.monomial, 1, order_);
      } else {
        e.poly.truncate_from_degree(d);
      }
      e.ecart = ecart_of(e.poly);
    }
    std::erase_if(pairs_, [&](const Pair& p) { return p.j != kInput && p.lcm.degree() >= d; });
  }

  StandardBasis finish() {
    std::vector<Polynomial> basis;
    for (auto& e : elements_)
      if (!e.redundant) basis.push_back(std::move(e.poly));
    // Minimalise: drop elements whose leading monomial another one divides.
    std::vector<Polynomial> minimal;
    for (std::size_t a = 0; a < basis.size(); ++a) {
      bool drop = false;
      for (std::size_t b = 0; b < basis.size() && !drop; ++b) {
        if (a == b) continue;
        const Monomial& ma = basis[a].leading_monomial();
        const Monomial& mb = basis[b].leading_monomial();
        if (mb.divides(ma) && (!(ma == mb) || b < a)) drop = true;
      }
      if (!drop) minimal.push_back(basis[a]);
    }
    if (!local_) interreduce(minimal);
    for (auto& f : minimal) f.make_monic();
    std::sort(minimal.begin(), minimal.end(), [&](const Polynomial& a, const Polynomial& b) {
      return order_.compare(a.leading_monomial(), b.leading_monomial()) < 0;
    });
    StandardBasis sb{ctx_, order_, std::move(minimal), {}};
    for (const auto& g : sb.basis) sb.staircase.push_back(g.leading_monomial());
    return sb;
  }

  void interreduce(std::vector<Polynomial>& gb) const {
    for (std::size_t a = 0; a < gb.size(); ++a) {
      Polynomial& h = gb[a];
      std::size_t i = 1;
      while (i < h.size()) {
        const Monomial m = h.terms()[i].monomial;
        const Polynomial* red = nullptr;
        for (std::size_t b = 0; b < gb.size(); ++b)
          if (b != a && gb[b].leading_monomial().divides(m)) {
            red = &gb[b];
            break;
          }
        if (!red) {
          ++i;
          continue;
        }
        cancel_term(h, i, *red);
      }
    }
  }

  VarContext ctx_;
  MonomialOrder order_;
  const Limits& limits_;
  bool local_;
  std::vector<Polynomial> inputs_;
  std::vector<Element> elements_;
  std::vector<Pair> pairs_;
  std::optional<unsigned> trunc_;
};

}  // namespace

bool StandardBasis::is_unit() const {
  return basis.size() == 1 && basis[0].leading_monomial().is_one();
}

Polynomial StandardBasis::normal_form(const Polynomial& f) const {
  Polynomial h = f.with_order(order);
  if (order.is_global()) {
    std::size_t i = 0;
    while (i < h.size()) {
      const Monomial m = h.terms()[i].monomial;
      const Polynomial* red = nullptr;
      for (const auto& g : basis)
        if (g.leading_monomial().divides(m)) {
          red = &g;
          break;
        }
      if (!red) {
        ++i;
        continue;
      }
      h.sub_mul(h.terms()[i].coeff / red->leading_coeff(), red->leading_monomial().quotient_of(m), *red);
    }
    return h;
  }
  // Mora weak normal form against the stored basis.
  std::vector<std::pair<Polynomial, unsigned>> t;
  for (const auto& g : basis) t.emplace_back(g, ecart_of(g));
  while (!h.is_zero()) {
    const Monomial lm = h.leading_monomial();
    std::size_t best = t.size();
    for (std::size_t k = 0; k < t.size(); ++k)
      if (t[k].first.leading_monomial().divides(lm) && (best == t.size() || t[k].second < t[best].second))
        best = k;
    if (best == t.size()) break;
    Polynomial reducer = t[best].first;
    unsigned he = ecart_of(h);
    if (t[best].second > he) t.emplace_back(h, he);
    h.sub_mul(h.leading_coeff() / reducer.leading_coeff(), reducer.leading_monomial().quotient_of(lm),
              reducer);
  }
  return h;
}

StandardBasis standard_basis(const Ideal& ideal, MonomialOrder order, const Limits& limits) {
  Ideal reduced = ideal.linearly_reduced();
  return Engine(ideal.context(), order, limits).run(reduced.generators());
}

Colength count_standard_monomials(const std::vector<Monomial>& leading, std::size_t nvars) {
  if (std::any_of(leading.begin(), leading.end(), [](const Monomial& m) { return m.is_one(); }))
    return 0;
  std::vector<bool> pure(nvars, false);
  for (const auto& m : leading) {
    std::size_t support = 0, var = 0;
    for (std::size_t i = 0; i < nvars; ++i)
      if (m[i]) {
        ++support;
        var = i;
      }
    if (support == 1) pure[var] = true;
  }
  if (!std::all_of(pure.begin(), pure.end(), [](bool b) { return b; })) return std::nullopt;
  std::uint64_t count = 0;
  Monomial m;
  auto dfs = [&](auto& self, std::size_t v) -> void {
    for (unsigned e = 0;; ++e) {
      m.set(v, e);
      if (std::any_of(leading.begin(), leading.end(), [&](const Monomial& g) { return g.divides(m); })) break;
      if (v + 1 == nvars) {
        if (++count > 50'000'000)
          throw Error(ErrorCode::ResourceLimit, "staircase too large to enumerate");
      } else {
        self(self, v + 1);
      }
    }
    m.set(v, 0);
  };
  dfs(dfs, 0);
  return count;
}

Colength colength(const StandardBasis& sb) {
  return count_standard_monomials(sb.staircase, sb.context.size());
}

Colength colength(const Ideal& ideal, MonomialOrder order, const Limits& limits) {
  if (ideal.is_zero()) return std::nullopt;
  return colength(standard_basis(ideal, order, limits));
}

int dimension_of_monomial_ideal(const std::vector<Monomial>& leading, std::size_t nvars) {
  if (std::any_of(leading.begin(), leading.end(), [](const Monomial& m) { return m.is_one(); }))
    return -1;
  std::vector<std::uint32_t> supports;
  for (const auto& m : leading) {
    std::uint32_t s = 0;
    for (std::size_t i = 0; i < nvars; ++i)
      if (m[i]) s |= 1u << i;
    supports.push_back(s);
  }
  int best = 0;
  const std::uint32_t full = nvars >= 32 ? ~0u : (1u << nvars);
  for (std::uint32_t set = 0; set < full; ++set) {
    int size = std::popcount(set);
    if (size <= best) continue;
    // `set` is independent if no leading monomial is supported inside it.
    bool independent = std::none_of(supports.begin(), supports.end(),
                                    [set](std::uint32_t s) { return (s & ~set) == 0; });
    if (independent) best = size;
  }
  return best;
}

int krull_dimension(const Ideal& ideal, const Limits& limits) {
  const std::size_t n = ideal.context().size();
  if (ideal.is_zero()) return static_cast<int>(n);
  StandardBasis sb = standard_basis(ideal, MonomialOrder::global(), limits);
  if (sb.is_unit()) throw Error(ErrorCode::IdealIsUnit, "ideal is the unit ideal");
  return dimension_of_monomial_ideal(sb.staircase, n);
}

namespace {

using Series = std::vector<Integer>;

Series series_mul(const Series& a, const Series& b) {
  Series r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

void series_add_shifted(Series& a, const Series& b, unsigned shift) {
  if (a.size() < b.size() + shift) a.resize(b.size() + shift, 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] += b[i];
}

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    return a.degree() < b.degree() || (a.degree() == b.degree() && lex_less(a, b));
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> out;
  for (const auto& g : gens)
    if (std::none_of(out.begin(), out.end(), [&](const Monomial& o) { return o.divides(g); }))
      out.push_back(g);
  return out;
}

// Numerator N(t) of the Hilbert series N(t)/(1-t)^n of Q[x]/(gens), by the
// pivot recursion HN(I) = HN(I + (p)) + t^deg(p) HN(I : p).
Series hilbert_numerator(std::vector<Monomial> gens, std::size_t nvars) {
  gens = minimalize(std::move(gens));
  if (gens.empty()) return {1};
  if (gens.front().is_one()) return {0};
  std::vector<unsigned> occurrences(nvars, 0);
  bool all_pure = true;
  for (const auto& g : gens) {
    std::size_t support = 0;
    for (std::size_t i = 0; i < nvars; ++i)
      if (g[i]) ++support;
    if (support > 1) {
      all_pure = false;
      for (std::size_t i = 0; i < nvars; ++i)
        if (g[i]) ++occurrences[i];
    }
  }
  if (all_pure) {
    Series r{1};
    for (const auto& g : gens) {
      Series f(g.degree() + 1, 0);
      f[0] = 1;
      f[g.degree()] = -1;
      r = series_mul(r, f);
    }
    return r;
  }
  std::size_t var = static_cast<std::size_t>(
      std::max_element(occurrences.begin(), occurrences.end()) - occurrences.begin());
  unsigned e = ~0u;
  for (const auto& g : gens)
    if (g[var]) e = std::min(e, g[var]);
  Monomial pivot = Monomial::variable(var, e);

  std::vector<Monomial> plus = gens;
  plus.push_back(pivot);
  std::vector<Monomial> colon;
  for (const auto& g : gens) {
    Monomial q = g;
    q.set(var, g[var] >= e ? g[var] - e : 0);
    colon.push_back(q);
  }
  Series r = hilbert_numerator(std::move(plus), nvars);
  series_add_shifted(r, hilbert_numerator(std::move(colon), nvars), e);
  while (r.size() > 1 && r.back() == 0) r.pop_back();
  return r;
}

}  // namespace

HilbertData hilbert_data(const std::vector<Monomial>& leading, std::size_t nvars) {
  HilbertData out;
  Series num = hilbert_numerator(leading, nvars);
  if (num.size() == 1 && num[0] == 0) return out;
  // Divide by (1 - t) while N(1) = 0.
  int k = 0;
  for (;;) {
    Integer at_one = 0;
    for (const auto& c : num) at_one += c;
    if (at_one != 0) break;
    // Synthetic division by (1 - t): q_i = sum_{j<=i} n_j.
    Series q(num.size() - 1, 0);
    Integer acc = 0;
    for (std::size_t i = 0; i + 1 < num.size(); ++i) {
      acc += num[i];
      q[i] = acc;
    }
    num = std::move(q);
    ++k;
  }
  out.dimension = static_cast<int>(nvars) - k;
  out.multiplicity = 0;
  for (const auto& c : num) out.multiplicity += c;
  out.numerator = std::move(num);
  return out;
}

HilbertData local_hilbert_samuel(const Ideal& ideal, const Limits& limits) {
  if (ideal.is_zero()) return hilbert_data({}, ideal.context().size());
  StandardBasis sb = standard_basis(ideal, MonomialOrder::local(), limits);
  return hilbert_data(sb.staircase, ideal.context().size());
}

}  // namespace eidsobs
