#pragma once

/// Bounded complexes of modules over a finite group, chain maps, shifts,
/// mapping cones and hypercohomology of the totalized cochain double
/// complex.

#include <map>
#include <string>
#include <vector>

#include "galbrauer/cohomology.hpp"
#include "galbrauer/gamma_module.hpp"

namespace galbrauer {

class ModComplex {
public:
  /// Terms keyed by degree; gaps are filled with zero modules.  Each given
  /// differential must connect the stored terms and consecutive
  /// differentials must compose to zero; throws "gamma-mismatch",
  /// "dimension-mismatch" or "composite-nonzero".
  static ModComplex make(FiniteGroup gamma,
                         const std::map<int, GammaModule>& terms,
                         const std::map<int, GammaHom>& differentials);

  static ModComplex single_term(GammaModule m, int degree);

  const FiniteGroup& gamma() const { return gamma_; }
  /// Degree window carrying the stored terms; empty when lo() > hi().
  int lo() const { return lo_; }
  int hi() const { return hi_; }

  /// Term in a degree, the zero module outside the window.
  GammaModule term(int degree) const;
  /// Differential term(degree) -> term(degree + 1), zero off the window.
  GammaHom diff(int degree) const;

private:
  explicit ModComplex(FiniteGroup g) : gamma_(std::move(g)) {}
  FiniteGroup gamma_;
  int lo_ = 0;
  int hi_ = -1;
  std::vector<GammaModule> terms_;
  std::vector<GammaHom> diffs_;
};

/// C[k] with C[k]^n = C^(n+k) and differentials scaled by (-1)^k.
ModComplex shift(const ModComplex& c, int k);

class ChainMap {
public:
  /// Components keyed by degree, zero where omitted.  Every square against
  /// the differentials must commute; throws "non-commuting-square".
  static ChainMap make(ModComplex source, ModComplex target,
                       const std::map<int, GammaHom>& components);

  static ChainMap identity(const ModComplex& c);
  static ChainMap zero(ModComplex source, ModComplex target);

  const ModComplex& source() const { return source_; }
  const ModComplex& target() const { return target_; }
  GammaHom component(int degree) const;

private:
  ChainMap(ModComplex s, ModComplex t) : source_(std::move(s)),
                                         target_(std::move(t)) {}
  ModComplex source_;
  ModComplex target_;
  std::map<int, GammaHom> components_;
};

/// The same components viewed between the shifted complexes.
ChainMap shift_map(const ChainMap& f, int k);

/// Mapping cone with its structure maps: Cone^n = source^(n+1) + target^n,
/// d(a, b) = (-d_src a, f(a) + d_tgt b).  The triangle
/// target -> cone -> source[1] is degreewise split exact.
struct ConeTriangle {
  ModComplex cone;
  ChainMap in;  // target -> cone
  ChainMap out; // cone -> shift(source, 1)
};
ConeTriangle cone(const ChainMap& f);

/// H^n of the total complex Tot^m = sum over p+q=m of C^p(gamma, K^q),
/// with differential d_bar + (-1)^p d_K.  Blocks are ordered by ascending
/// cochain degree p.
FpAbGroup hypercohomology(const ModComplex& c, int n);

/// Same group with cocycle representatives in total-complex coordinates.
Subquotient hypercohomology_classes(const ModComplex& c, int n);

/// Map induced degreewise on hypercohomology, on the presentations
/// produced by hypercohomology_classes.
AbHom induced_map(const ChainMap& f, int n);

/// Exactness report for the cone long exact sequence.  For each degree n
/// in [lo, hi] the nodes H^n(cone) and H^n(source[1]) are checked inside
/// H^n(target) -> H^n(cone) -> H^n(source[1]) -> H^n(target[1]).
struct ExactnessNode {
  int degree;
  std::string position; // "cone" or "shifted-source"
  bool exact;
  AbStructure at;
};
struct ExactnessReport {
  std::vector<ExactnessNode> nodes;
  bool all_exact;
};
ExactnessReport check_cone_les(const ChainMap& f, int lo, int hi);

} // namespace galbrauer
