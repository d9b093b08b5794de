#include "galbrauer/abgroup.hpp"

#include <sstream>

#include "sparse_elim.hpp"

namespace galbrauer {

std::string AbStructure::to_text() const {
  if (is_trivial()) return "0";
  std::ostringstream os;
  bool first = true;
  if (free_rank == 1) {
    os << "Z";
    first = false;
  } else if (free_rank > 1) {
    os << "Z^" << free_rank;
    first = false;
  }
  for (const Int& d : invariant_factors) {
    if (!first) os << " (+) ";
    os << "Z/" << d;
    first = false;
  }
  return os.str();
}

FpAbGroup FpAbGroup::from_structure(const AbStructure& s) {
  const std::size_t n = s.free_rank + s.invariant_factors.size();
  IntMatrix rel(n, s.invariant_factors.size());
  for (std::size_t j = 0; j < s.invariant_factors.size(); ++j)
    rel(s.free_rank + j, j) = s.invariant_factors[j];
  return {n, rel};
}

AbStructure structure(const FpAbGroup& g) {
  AbStructure s;
  std::size_t relation_rank = 0;
  for (const Int& d : snf_diagonal(g.relations)) {
    if (d == 0) continue;
    ++relation_rank;
    if (d >= 2) s.invariant_factors.push_back(d);
  }
  s.free_rank = g.gens - relation_rank;
  return s;
}

AbStructure sum_structure(const AbStructure& a, const AbStructure& b) {
  return structure(direct_sum(FpAbGroup::from_structure(a),
                              FpAbGroup::from_structure(b)));
}

bool well_defined(const AbHom& f) {
  if (f.matrix.rows() != f.target.gens || f.matrix.cols() != f.source.gens)
    return false;
  if (f.source.relations.cols() == 0) return true;
  ColumnSpan target_rel(f.target.relations);
  for (std::size_t j = 0; j < f.source.relations.cols(); ++j)
    if (!target_rel.contains(f.matrix * f.source.relations.col(j)))
      return false;
  return true;
}

AbHom make_hom(FpAbGroup source, FpAbGroup target, IntMatrix matrix) {
  AbHom f{std::move(source), std::move(target), std::move(matrix)};
  if (f.matrix.rows() != f.target.gens || f.matrix.cols() != f.source.gens)
    throw Error("dimension-mismatch", "hom matrix shape does not match "
                                      "generator counts");
  if (!well_defined(f))
    throw Error("ill-defined-hom",
                "a source relator does not map into the target relation span");
  return f;
}

AbHom identity_hom(const FpAbGroup& g) {
  return {g, g, IntMatrix::identity(g.gens)};
}

AbHom zero_hom(const FpAbGroup& source, const FpAbGroup& target) {
  return {source, target, IntMatrix(target.gens, source.gens)};
}

AbHom compose(const AbHom& g, const AbHom& f) {
  if (f.target != g.source)
    throw Error("dimension-mismatch", "composition through mismatched middle "
                                      "presentation");
  return {f.source, g.target, g.matrix * f.matrix};
}

bool hom_equal(const AbHom& f, const AbHom& g) {
  if (f.source != g.source || f.target != g.target) return false;
  IntMatrix diff = f.matrix - g.matrix;
  if (diff.is_zero()) return true;
  ColumnSpan rel(f.target.relations);
  for (std::size_t j = 0; j < diff.cols(); ++j)
    if (!rel.contains(diff.col(j))) return false;
  return true;
}

bool is_zero_hom(const AbHom& f) {
  return hom_equal(f, zero_hom(f.source, f.target));
}

bool element_equal(const FpAbGroup& g, const IntVector& x, const IntVector& y) {
  if (x.size() != g.gens || y.size() != g.gens)
    throw Error("dimension-mismatch", "element length");
  IntVector diff(g.gens);
  for (std::size_t i = 0; i < g.gens; ++i) diff[i] = x[i] - y[i];
  return ColumnSpan(g.relations).contains(diff);
}

namespace {

/// Presentation of the subgroup of the ambient group generated by the
/// columns of gens, modulo span(denoms) + ambient relations.  Assumes the
/// denominator span is contained in the generated span.
FpAbGroup present_span(const IntMatrix& gens, const IntMatrix& denoms,
                       const FpAbGroup& ambient) {
  IntMatrix stacked = hstack(gens, hstack(denoms, ambient.relations));
  return {gens.cols(), kernel_basis_top(stacked, gens.cols())};
}

} // namespace

SubgroupPart kernel(const AbHom& f) {
  // x with f(x) in the target relation span, presented on a generating set.
  IntMatrix stacked = hstack(f.matrix, f.target.relations);
  IntMatrix gens = kernel_basis_top(stacked, f.source.gens);
  FpAbGroup k = present_span(gens, f.source.relations, f.source);
  return {k, AbHom{k, f.source, gens}};
}

SubgroupPart image(const AbHom& f) {
  FpAbGroup im = present_span(f.matrix, f.target.relations, f.target);
  return {im, AbHom{im, f.target, f.matrix}};
}

QuotientPart cokernel(const AbHom& f) {
  FpAbGroup c{f.target.gens, hstack(f.matrix, f.target.relations)};
  return {c, AbHom{f.target, c, IntMatrix::identity(f.target.gens)}};
}

Subquotient subquotient(const IntMatrix& zgens, const IntMatrix& bgens,
                        const FpAbGroup& ambient) {
  if (zgens.rows() != ambient.gens || bgens.rows() != ambient.gens)
    throw Error("dimension-mismatch", "subquotient generators do not live in "
                                      "the ambient group");
  ColumnSpan num(hstack(zgens, ambient.relations));
  for (std::size_t j = 0; j < bgens.cols(); ++j)
    if (!num.contains(bgens.col(j)))
      throw Error("containment-failure",
                  "denominator generator outside the numerator span");
  FpAbGroup q = present_span(zgens, bgens, ambient);
  return {q, zgens};
}

AbHom induced_on_subquotients(const Subquotient& src, const Subquotient& tgt,
                              const IntMatrix& ambient_map,
                              const IntMatrix& extra_denominators,
                              const FpAbGroup& target_ambient) {
  ColumnSpan express(hstack(hstack(tgt.reps, extra_denominators),
                            target_ambient.relations));
  IntMatrix mat(tgt.group.gens, src.group.gens);
  for (std::size_t j = 0; j < src.reps.cols(); ++j) {
    auto coords = express.solve(ambient_map * src.reps.col(j));
    if (!coords)
      throw Error("containment-failure",
                  "mapped representative leaves the target span");
    for (std::size_t i = 0; i < tgt.group.gens; ++i)
      mat(i, j) = (*coords)[i];
  }
  return make_hom(src.group, tgt.group, std::move(mat));
}

bool is_exact_at(const AbHom& into, const AbHom& outof) {
  if (into.target != outof.source)
    throw Error("dimension-mismatch", "exactness check at mismatched node");
  if (!is_zero_hom(compose(outof, into))) return false;
  SubgroupPart ker = kernel(outof);
  ColumnSpan im(hstack(into.matrix, outof.source.relations));
  for (std::size_t j = 0; j < ker.incl.matrix.cols(); ++j)
    if (!im.contains(ker.incl.matrix.col(j))) return false;
  return true;
}

FpAbGroup direct_sum(const FpAbGroup& a, const FpAbGroup& b) {
  FpAbGroup s;
  s.gens = a.gens + b.gens;
  s.relations = IntMatrix(s.gens, a.relations.cols() + b.relations.cols());
  for (std::size_t j = 0; j < a.relations.cols(); ++j)
    for (std::size_t i = 0; i < a.gens; ++i)
      s.relations(i, j) = a.relations(i, j);
  for (std::size_t j = 0; j < b.relations.cols(); ++j)
    for (std::size_t i = 0; i < b.gens; ++i)
      s.relations(a.gens + i, a.relations.cols() + j) = b.relations(i, j);
  return s;
}

} // namespace galbrauer
