#pragma once

/// Finitely presented abelian groups Z^n / (column span of a relation
/// matrix), homomorphisms given on generators, and the subquotient calculus
/// used by the cohomology engine.

#include <string>
#include <vector>

#include "galbrauer/intmat.hpp"

namespace galbrauer {

/// Canonical invariant: free rank plus invariant factors d1 | d2 | ...,
/// all >= 2.
struct AbStructure {
  std::size_t free_rank = 0;
  std::vector<Int> invariant_factors;

  bool operator==(const AbStructure&) const = default;
  bool is_trivial() const { return free_rank == 0 && invariant_factors.empty(); }
  /// "0", "Z", "Z^2 (+) Z/2 (+) Z/6", ...
  std::string to_text() const;
};

struct FpAbGroup {
  std::size_t gens = 0;
  IntMatrix relations; // gens x k, columns are relators

  static FpAbGroup zero() { return {0, IntMatrix(0, 0)}; }
  static FpAbGroup free_group(std::size_t n) { return {n, IntMatrix(n, 0)}; }
  /// Diagonal presentation of a given structure (free part first).
  static FpAbGroup from_structure(const AbStructure& s);

  bool operator==(const FpAbGroup&) const = default;
  bool is_free() const { return relations.cols() == 0; }
};

AbStructure structure(const FpAbGroup& g);

/// Structure of a direct sum, renormalized into a divisibility chain.
AbStructure sum_structure(const AbStructure& a, const AbStructure& b);

struct AbHom {
  FpAbGroup source, target;
  IntMatrix matrix; // target.gens x source.gens, action on generators
};

/// Validated constructor; throws "ill-defined-hom" when a relator of the
/// source does not land in the relation span of the target.
AbHom make_hom(FpAbGroup source, FpAbGroup target, IntMatrix matrix);
bool well_defined(const AbHom& f);

AbHom identity_hom(const FpAbGroup& g);
AbHom zero_hom(const FpAbGroup& source, const FpAbGroup& target);
/// g after f; presentations of the middle group must match.
AbHom compose(const AbHom& g, const AbHom& f);

/// Equality as maps, i.e. the matrices agree modulo target relations.
bool hom_equal(const AbHom& f, const AbHom& g);
bool is_zero_hom(const AbHom& f);

/// x == y as classes in g.
bool element_equal(const FpAbGroup& g, const IntVector& x, const IntVector& y);

struct SubgroupPart {
  FpAbGroup group;
  AbHom incl; // group -> ambient
};

struct QuotientPart {
  FpAbGroup group;
  AbHom proj; // ambient -> group
};

SubgroupPart kernel(const AbHom& f);
SubgroupPart image(const AbHom& f);
QuotientPart cokernel(const AbHom& f);

/// span(zgens) / span(bgens) inside the ambient group; generator classes of
/// the result are the columns of zgens.  Throws "containment-failure" when
/// some column of bgens is not in span(zgens) modulo ambient relations.
struct Subquotient {
  FpAbGroup group;
  IntMatrix reps; // ambient.gens x group.gens
};

Subquotient subquotient(const IntMatrix& zgens, const IntMatrix& bgens,
                        const FpAbGroup& ambient);

/// Map between subquotients induced by a matrix on the ambient generators.
/// Each mapped representative is expressed over the target representatives;
/// the extra denominator columns (plus the target ambient relations) soak
/// up the rest.  Throws "containment-failure" when a representative cannot
/// be expressed, i.e. when the matrix does not actually induce a map.
AbHom induced_on_subquotients(const Subquotient& src, const Subquotient& tgt,
                              const IntMatrix& ambient_map,
                              const IntMatrix& extra_denominators,
                              const FpAbGroup& target_ambient);

/// Exactness at the middle of  into.source -> middle -> outof.target:
/// composite vanishes and ker(outof) is contained in im(into).
bool is_exact_at(const AbHom& into, const AbHom& outof);

FpAbGroup direct_sum(const FpAbGroup& a, const FpAbGroup& b);

} // namespace galbrauer
