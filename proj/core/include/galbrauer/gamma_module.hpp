#pragma once

/// Modules over a finite group: a finitely presented abelian carrier together
/// with one endomorphism matrix per group element, acting on the left.

#include <map>
#include <vector>

#include "galbrauer/abgroup.hpp"
#include "galbrauer/finite_group.hpp"

namespace galbrauer {

struct GammaModule {
  FiniteGroup gamma;
  FpAbGroup carrier;
  /// action[g] is a carrier.gens x carrier.gens matrix; indexed by element.
  std::vector<IntMatrix> action;

  const IntMatrix& act(std::size_t g) const { return action[g]; }

  bool operator==(const GammaModule& o) const {
    return gamma == o.gamma && carrier == o.carrier && action == o.action;
  }
};

/// Validates that every action matrix preserves the relations, that the
/// identity acts as the identity and that action respects the multiplication
/// table, all modulo the relations.  Throws "invalid-action" otherwise.
GammaModule make_module(FiniteGroup gamma, FpAbGroup carrier,
                        std::vector<IntMatrix> action);

/// Same validation, but the action is given on group generators only and is
/// closed under multiplication first.  The keys must generate the group;
/// otherwise throws "invalid-action".
GammaModule
make_module_from_generators(FiniteGroup gamma, FpAbGroup carrier,
                            const std::map<std::size_t, IntMatrix>& generators);

/// Carrier with every element acting as the identity.
GammaModule trivial_module(const FiniteGroup& gamma, const AbStructure& s);

/// Free module on the group elements, acted on by left translation.
GammaModule regular_module(const FiniteGroup& gamma);

/// Character lattice of the norm-one torus of the group algebra: the
/// regular module modulo the span of the all-ones vector, presented on the
/// translation basis.  Throws "trivial-gamma" when the group is trivial.
GammaModule norm_one_torus_module(const FiniteGroup& gamma);

GammaModule direct_sum(const GammaModule& a, const GammaModule& b);

/// Dual of a module with free carrier; g acts by the transpose of the
/// inverse element's action.  Throws "not-free" otherwise.
GammaModule dual_module(const GammaModule& m);

/// Fixed points: kernel of the stacked maps (act(g) - id), as a subgroup of
/// the carrier.
SubgroupPart invariants(const GammaModule& m);

struct GammaHom {
  GammaModule source;
  GammaModule target;
  IntMatrix matrix;
};

/// Validates the underlying homomorphism and equivariance modulo target
/// relations; throws "gamma-mismatch", "ill-defined-hom" or
/// "not-equivariant".
GammaHom make_gamma_hom(GammaModule source, GammaModule target,
                        IntMatrix matrix);

GammaHom identity_gamma_hom(const GammaModule& m);
GammaHom zero_gamma_hom(const GammaModule& source, const GammaModule& target);

/// Generating set for the lattice of matrices that define equivariant
/// homomorphisms source -> target.  Every integer combination of the
/// returned matrices passes make_gamma_hom.
std::vector<IntMatrix> equivariant_hom_generators(const GammaModule& source,
                                                  const GammaModule& target);

} // namespace galbrauer
