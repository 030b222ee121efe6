#include <algorithm>
#include <functional>
#include <optional>

#include "eidsobs/eids/analysis.hpp"
#include "eidsobs/error.hpp"
#include "eidsobs/invariants/invariants.hpp"
#include "eidsobs/obstruction/obstruction.hpp"
#include "eidsobs/poly/linalg.hpp"

namespace eidsobs {

namespace {

bool is_type_232(const EidsDescriptor& x) {
  return x.t() == 2 && std::min(x.m(), x.n()) == 2 && std::max(x.m(), x.n()) == 3;
}

bool vanishes_at_origin(const EidsDescriptor& x) {
  return std::all_of(x.matrix().entries().begin(), x.matrix().entries().end(),
                     [](const Polynomial& e) { return e.constant_term() == 0; });
}

bool smooth_at_origin(const EidsDescriptor& x) { return rank_at_origin(x.matrix()) + 1 == x.t(); }

long long sign(long long e) { return e % 2 == 0 ? 1 : -1; }

bool recoverable(ErrorCode c) {
  return c == ErrorCode::ResourceLimit || c == ErrorCode::GenericityExhausted || c == ErrorCode::NotICIS ||
         c == ErrorCode::DimensionMismatch || c == ErrorCode::RegimeMismatch || c == ErrorCode::NotSmoothable;
}

// Runs `compute` (unless a supplied value is preferred); when it fails
// recoverably, falls back to a supplied value for (name, subject). Without one, resource errors propagate and
// everything else becomes MissingInput.
long long obtain(EuResult& out, const SuppliedInputs& supplied, InvariantName name, const std::string& subject,
                 const std::function<std::pair<long long, Provenance>()>& compute) {
  if (supplied.prefer)
    if (const InvariantReport* r = supplied.find(name, subject)) {
      out.inputs.push_back(*r);
      return r->value;
    }
  try {
    auto [value, prov] = compute();
    out.inputs.push_back({name, value, prov, subject});
    return value;
  } catch (const Error& e) {
    if (!recoverable(e.code())) throw;
    if (const InvariantReport* r = supplied.find(name, subject)) {
      out.inputs.push_back(*r);
      out.derivation.push_back(std::string(to_string(name)) + "(" + subject + ") taken as supplied: " + e.what());
      return r->value;
    }
    if (e.code() == ErrorCode::ResourceLimit) throw;
    throw MissingInput(std::string(to_string(name)),
                       std::string(to_string(name)) + "(" + subject + ") must be supplied: " + e.what());
  }
}

struct ResidualData {
  std::vector<Polynomial> chart;  // five entries with independent linear parts
  Polynomial g;                   // phi∘F
};

ResidualData residual_data(const EidsDescriptor& x) {
  if (!is_type_232(x)) throw Error(ErrorCode::RegimeMismatch, "residual function needs a (2,3,2) germ");
  if (!vanishes_at_origin(x)) throw Error(ErrorCode::RegimeMismatch, "residual function needs F(0) = 0");
  if (x.N() < 6) throw Error(ErrorCode::RegimeMismatch, "residual function needs N >= 6");
  const auto& entries = x.matrix().entries();
  RationalMatrix lin(entries.size(), x.N());
  for (std::size_t r = 0; r < entries.size(); ++r) {
    auto part = linear_part(entries[r]);
    for (std::size_t v = 0; v < x.N(); ++v) lin(r, v) = part[v];
  }
  if (rank(lin) != 5) throw Error(ErrorCode::RegimeMismatch, "germ does not have corank one");
  ResidualData out;
  std::vector<std::size_t> picked;
  for (std::size_t r = 0; r < entries.size() && picked.size() < 5; ++r) {
    RationalMatrix trial(picked.size() + 1, x.N());
    for (std::size_t k = 0; k < picked.size(); ++k)
      for (std::size_t v = 0; v < x.N(); ++v) trial(k, v) = lin(picked[k], v);
    for (std::size_t v = 0; v < x.N(); ++v) trial(picked.size(), v) = lin(r, v);
    if (rank(trial) == picked.size() + 1) picked.push_back(r);
  }
  for (auto r : picked) out.chart.push_back(entries[r]);
  auto kernel = left_kernel(lin);
  out.g = Polynomial(x.context());
  for (std::size_t r = 0; r < entries.size(); ++r) out.g += entries[r] * kernel.front()[r];
  return out;
}

}  // namespace

bool corank1_applicable(const EidsDescriptor& x) {
  return is_type_232(x) && x.N() >= 7 && vanishes_at_origin(x) && corank_at_origin(x) == 1;
}

std::uint64_t residual_milnor(const EidsDescriptor& x, const Limits& limits) {
  ResidualData d = residual_data(x);
  std::vector<Polynomial> rows = d.chart;
  rows.push_back(d.g);
  Ideal locus = ideal_sum(Ideal(x.context(), d.chart), minors(jacobian(x.context(), rows), 6));
  auto c = colength(locus, MonomialOrder::local(), limits);
  if (!c) throw Error(ErrorCode::RegimeMismatch, "residual function has a non-isolated singularity");
  return *c;
}

std::vector<Regime> applicable_regimes(const EidsDescriptor& x) {
  std::vector<Regime> out;
  if (corank1_applicable(x)) out.push_back(Regime::Corank1FastPath);
  if (x.in_smoothable_range()) out.push_back(Regime::Smoothable);
  if (is_type_232(x) && x.N() == 6) out.push_back(Regime::NEquals6);
  if (is_type_232(x) && x.N() >= 7 && x.in_three_strata_range()) out.push_back(Regime::NGe7Type232);
  if (x.t() >= 2 && x.in_three_strata_range()) out.push_back(Regime::GeneralThreeStrata);
  return out;
}

namespace {

class Evaluator {
 public:
  Evaluator(const EidsDescriptor& x, std::uint64_t seed, const SuppliedInputs& supplied, const Limits& limits)
      : x_(x), seed_(seed), supplied_(supplied), limits_(limits) {}

  EuResult run(Regime regime) {
    const auto ok = applicable_regimes(x_);
    if (std::find(ok.begin(), ok.end(), regime) == ok.end())
      throw Error(ErrorCode::RegimeMismatch,
                  "regime " + std::string(to_string(regime)) + " does not apply to " + x_.to_string());
    for (unsigned attempt = 0; attempt < kGenericRetries; ++attempt) {
      out_ = EuResult{};
      out_.regime = regime;
      out_.seed = seed_ + attempt;
      try {
        evaluate(regime);
        return out_;
      } catch (const Error& e) {
        if (e.code() != ErrorCode::GenericityExhausted && e.code() != ErrorCode::DimensionMismatch) throw;
      }
    }
    throw Error(ErrorCode::GenericityExhausted, "no generic slicing form found for the Euler obstruction");
  }

 private:
  void evaluate(Regime regime) {
    switch (regime) {
      case Regime::Smoothable: return smoothable();
      case Regime::Corank1FastPath: return fast_path();
      case Regime::NEquals6:
      case Regime::NGe7Type232:
      case Regime::GeneralThreeStrata: return three_strata(regime);
    }
  }

  void smoothable() {
    const int d = x_.expected_dimension();
    if (d <= 0) {
      out_.value = 1;
      out_.derivation.push_back("X is a point germ: Eu = 1");
      return;
    }
    // The top step of the nu recursion already carries m_d for its form.
    std::optional<NuStep> top;
    const long long nu = obtain(out_, supplied_, InvariantName::Nu, "X", [&] {
      NuResult r = nu_vanishing(x_, out_.seed, limits_);
      top = r.steps.front();
      return std::pair{r.value, Provenance::computed(r.steps.front().seed, "polar recursion")};
    });
    const long long md = obtain(out_, supplied_, InvariantName::Md, "X", [&] {
      if (top) return std::pair{top->md, Provenance::computed(top->seed, "polar curve")};
      PolarResult p = polar_multiplicity_md(x_, generic_linear_form(x_.context(), out_.seed), out_.seed, limits_);
      return std::pair{static_cast<long long>(p.value), Provenance::computed(p.seed, "polar curve")};
    });
    out_.value = eu_smoothable(d, nu, md);
    out_.derivation.push_back("Eu = 1 + (-1)^" + std::to_string(d) + " nu + (-1)^" + std::to_string(d + 1) +
                              " m_d = " + std::to_string(out_.value));
  }

  void fast_path() {
    if (!corank1_applicable(x_)) throw Error(ErrorCode::RegimeMismatch, "corank-one fast path does not apply");
    const long long mu_g = static_cast<long long>(residual_milnor(x_, limits_));
    out_.inputs.push_back({InvariantName::Mu, mu_g, Provenance::computed(out_.seed, "residual function"), "residual"});
    const EidsDescriptor s = slice(x_, generic_linear_form(x_.context(), out_.seed));
    long long mu_gs = 0;
    try {
      mu_gs = static_cast<long long>(residual_milnor(s, limits_));
    } catch (const Error& e) {
      if (e.code() == ErrorCode::RegimeMismatch) throw Error(ErrorCode::GenericityExhausted, e.what());
      throw;
    }
    const Provenance p = Provenance::computed(out_.seed, "residual function of the slice");
    out_.inputs.push_back({InvariantName::Mu, mu_gs, p, "residual_slice"});
    const long long chi = chi_tilde_corank1(s.N(), mu_gs);
    out_.inputs.push_back({InvariantName::ChiTilde, chi, p, "slice"});
    out_.inputs.push_back({InvariantName::Mu, mu_gs, p, "sigma_slice"});
    out_.value = eu_n_ge_7(x_.N(), mu_gs, chi);
    out_.derivation.push_back("mu(Sigma X ∩ H) = mu(g~) = " + std::to_string(mu_gs));
    out_.derivation.push_back("chi~(X ∩ H) = (-1)^" + std::to_string(s.N() - 1) + " mu(g~) = " + std::to_string(chi));
    out_.derivation.push_back("Eu = (-1)^" + std::to_string(x_.N() - 7) + " mu + chi~ + 2 = " +
                              std::to_string(out_.value));
  }

  long long chi_tilde_slice(const EidsDescriptor& s) {
    return obtain(out_, supplied_, InvariantName::ChiTilde, "slice", [&]() -> std::pair<long long, Provenance> {
      if (smooth_at_origin(s)) return {0, Provenance::computed(out_.seed, "smooth slice")};
      if (s.in_smoothable_range()) {
        NuResult nu = nu_vanishing(s, out_.seed, limits_);
        const int d = s.expected_dimension();
        out_.derivation.push_back("nu(X ∩ H) = " + std::to_string(nu.value));
        return {sign(d) * nu.value, Provenance::computed(out_.seed, "vanishing Euler characteristic of the slice")};
      }
      if (is_type_232(s) && vanishes_at_origin(s) && s.N() >= 6 && corank_at_origin(s) == 1) {
        const long long mu = static_cast<long long>(residual_milnor(s, limits_));
        out_.derivation.push_back("mu(residual of X ∩ H) = " + std::to_string(mu));
        return {chi_tilde_corank1(s.N(), mu), Provenance::computed(out_.seed, "corank-one residual of the slice")};
      }
      throw Error(ErrorCode::RegimeMismatch, "no method computes chi~ of this slice");
    });
  }

  void three_strata(Regime regime) {
    const LinearForm l = generic_linear_form(x_.context(), out_.seed);
    const EidsDescriptor s = slice(x_, l);
    const long long chi = chi_tilde_slice(s);

    // Sigma X passes through 0 iff rank F(0) < t-1; its slice is non-empty
    // iff additionally dim Sigma X >= 1.
    const bool sigma_at_origin = rank_at_origin(x_.matrix()) + 1 < x_.t();
    const long long sigma_dim = static_cast<long long>(x_.N()) - static_cast<long long>(x_.expected_codim(x_.t() - 1));
    if (!sigma_at_origin || sigma_dim < 1) {
      out_.value = chi + 1;
      out_.derivation.push_back("Sigma X ∩ H is empty near 0: Eu = chi~(X ∩ H) + 1 = " + std::to_string(out_.value));
      return;
    }
    const int slice_dim = static_cast<int>(sigma_dim - 1);
    const long long mu = obtain(out_, supplied_, InvariantName::Mu, "sigma_slice", [&] {
      Ideal sigma = minors(s.matrix(), s.t() - 1);
      const std::size_t codim = s.expected_codim(s.t() - 1);
      std::vector<Polynomial> eqs = sigma.linearly_reduced().generators();
      if (eqs.size() != codim) eqs = minimal_local_generators(sigma, limits_);
      IcisPresentation pres{s.context(), eqs, codim};
      const auto mu = milnor_icis(pres, out_.seed, limits_);
      return std::pair{static_cast<long long>(mu), Provenance::computed(out_.seed, "ICIS Milnor number")};
    });
    const long long link = complex_link_chi(x_, x_.t() - 1);
    out_.derivation.push_back("chi(L_V1) = " + std::to_string(link));
    if (regime == Regime::NGe7Type232) {
      out_.value = eu_n_ge_7(x_.N(), mu, chi);
      out_.derivation.push_back("Eu = (-1)^" + std::to_string(x_.N() - 7) + " mu + chi~ + 2 = " +
                                std::to_string(out_.value));
    } else {
      out_.value = eu_three_strata(slice_dim, mu, link, chi);
      out_.derivation.push_back("Eu = ((-1)^" + std::to_string(slice_dim) + " mu + 1)(chi(L_V1) - 1) + chi~ + 1 = " +
                                std::to_string(out_.value));
    }
  }

  const EidsDescriptor& x_;
  std::uint64_t seed_;
  const SuppliedInputs& supplied_;
  const Limits& limits_;
  EuResult out_;
};

}  // namespace

long long eu_corank1_fastpath(const EidsDescriptor& x, std::uint64_t seed, const Limits& limits) {
  return eu_for_regime(x, Regime::Corank1FastPath, seed, {}, limits).value;
}

EuResult eu_for_regime(const EidsDescriptor& x, Regime regime, std::uint64_t seed, const SuppliedInputs& supplied,
                       const Limits& limits) {
  return Evaluator(x, seed, supplied, limits).run(regime);
}

EuResult eu_dispatch(const EidsDescriptor& x, std::uint64_t seed, const SuppliedInputs& supplied,
                     const Limits& limits) {
  const auto regimes = applicable_regimes(x);
  for (std::size_t k = 0; k < regimes.size(); ++k) {
    try {
      return eu_for_regime(x, regimes[k], seed, supplied, limits);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::RegimeMismatch || k + 1 == regimes.size()) throw;
    }
  }
  throw Error(ErrorCode::RegimeMismatch, "no Euler obstruction regime applies to " + x.to_string());
}

}  // namespace eidsobs
