#pragma once

#include "eidsobs/groebner/standard_basis.hpp"

namespace eidsobs {

/// f / g for a divisor g of f. Throws InvalidArgument when g does not
/// divide f exactly.
Polynomial divide_exact(const Polynomial& f, const Polynomial& g);

/// Generators of I intersected with the subring in the variables after the
/// first `count` ones, expressed in the context `ctx.without(0..count-1)`.
Ideal eliminate_leading(const Ideal& ideal, std::size_t count, const Limits& limits = {});

/// I ∩ J through an auxiliary variable: (t I + (1 - t) J) ∩ Q[x].
Ideal intersection(const Ideal& a, const Ideal& b, const Limits& limits = {});

/// I : f = (I ∩ (f)) / f.
Ideal quotient(const Ideal& a, const Polynomial& f, const Limits& limits = {});
/// I : J as the intersection of I : g over the generators g of J.
Ideal quotient(const Ideal& a, const Ideal& b, const Limits& limits = {});

/// I : J^∞ by iterating the quotient until it stabilises.
Ideal saturation(const Ideal& a, const Ideal& b, const Limits& limits = {});

/// J ⊆ I, decided by normal forms against a standard basis of I under
/// `order` (the local order tests containment in the local ring).
bool contains(const Ideal& a, const Ideal& b, MonomialOrder order = MonomialOrder::global(),
              const Limits& limits = {});
bool same_ideal(const Ideal& a, const Ideal& b, MonomialOrder order = MonomialOrder::global(),
                const Limits& limits = {});

/// Ideal generated by the reduced Groebner basis (canonical generators).
Ideal reduced(const Ideal& ideal, const Limits& limits = {});

}  // namespace eidsobs
