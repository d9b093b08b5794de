#pragma once

/// Group cohomology of a module over a finite group, computed from the
/// inhomogeneous cochain complex.
///
/// C^n is the group of maps (g_1,..,g_n) -> M.  Coordinates are flattened
/// as (tuple rank) * carrier.gens + generator index, with tuples ordered
/// lexicographically by element index and g_1 most significant.

#include <cstddef>

#include "galbrauer/abgroup.hpp"
#include "galbrauer/gamma_module.hpp"

namespace galbrauer {

/// Number of n-tuples of group elements, i.e. order^n.
std::size_t cochain_tuples(const FiniteGroup& gamma, std::size_t n);

/// The cochain group C^n: one carrier copy per n-tuple.
FpAbGroup cochain_group(const GammaModule& m, std::size_t n);

/// The cochain differential d^n : C^n -> C^(n+1),
///   (d f)(g_1,..,g_{n+1}) = g_1 * f(g_2,..,g_{n+1})
///                           + sum_i (-1)^i f(..,g_i g_{i+1},..)
///                           + (-1)^(n+1) f(g_1,..,g_n).
AbHom differential(const GammaModule& m, std::size_t n);

/// Isomorphism type of H^n(gamma, M).  Free carriers take a shortcut
/// through ranks and the elementary divisors of the previous differential;
/// presented carriers go through the cocycle subquotient.
AbStructure cohomology(const GammaModule& m, std::size_t n);

/// H^n(gamma, M) as a presented group together with cocycle representatives
/// for its generators, in C^n coordinates.
Subquotient cohomology_classes(const GammaModule& m, std::size_t n);

/// The map H^n(source) -> H^n(target) induced by an equivariant
/// homomorphism, on the presentations produced by cohomology_classes.
AbHom induced_on_cohomology(const GammaHom& f, std::size_t n);

/// Independent computation for cyclic groups through the periodic
/// resolution: with s a generator, N the sum of its powers acting on M and
/// D = act(s) - id,
///   H^0 = ker D,  H^odd = ker N / im D,  H^even = ker D / im N.
/// Throws "not-cyclic" for non-cyclic groups.
AbStructure cyclic_cohomology_oracle(const GammaModule& m, std::size_t n);

} // namespace galbrauer
