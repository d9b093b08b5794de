#include "galbrauer/cohomology.hpp"

#include <vector>

#include "bar_internal.hpp"

namespace galbrauer {

namespace detail {

namespace {

// Rank of a tuple in the lexicographic order, first entry most significant.
std::size_t tuple_rank(const std::vector<std::size_t>& t, std::size_t ord) {
  std::size_t r = 0;
  for (std::size_t g : t)
    r = r * ord + g;
  return r;
}

void append_columns(SparseMat& dst, SparseMat src) {
  for (auto& c : src.cols)
    dst.cols.push_back(std::move(c));
}

// One copy of the carrier relation columns per tuple, matching the layout
// of cochain_relations.
void append_relation_columns(SparseMat& dst, const IntMatrix& rel,
                             std::size_t tuples) {
  const std::size_t mg = rel.rows();
  for (std::size_t t = 0; t < tuples; ++t)
    for (std::size_t j = 0; j < rel.cols(); ++j) {
      SparseCol col;
      for (std::size_t i = 0; i < mg; ++i)
        if (rel(i, j) != 0)
          col.emplace_back(t * mg + i, rel(i, j));
      dst.cols.push_back(std::move(col));
    }
}

} // namespace

SparseMat bar_differential_sparse(const GammaModule& m, std::size_t n) {
  const std::size_t ord = m.gamma.order();
  const std::size_t mg = m.carrier.gens;
  const std::size_t src_tuples = cochain_tuples(m.gamma, n);
  const std::size_t dst_tuples = cochain_tuples(m.gamma, n + 1);

  SparseMat d;
  d.rows = dst_tuples * mg;
  d.cols.resize(src_tuples * mg);

  std::vector<std::size_t> t(n + 1, 0);
  std::vector<std::size_t> sub(n, 0);
  bool more = true;
  while (more) {
    const std::size_t base_row = tuple_rank(t, ord) * mg;

    // First face: act by the leading element on the truncated tuple.
    sub.assign(t.begin() + 1, t.end());
    const std::size_t first_col = tuple_rank(sub, ord) * mg;
    const IntMatrix& a = m.act(t[0]);
    for (std::size_t i = 0; i < mg; ++i)
      for (std::size_t c = 0; c < mg; ++c)
        if (a(i, c) != 0)
          d.add_entry(first_col + c, base_row + i, a(i, c));

    // Inner faces: multiply neighbours, alternating signs.
    int sign = -1;
    for (std::size_t i = 0; i + 1 <= n; ++i) {
      sub.assign(t.begin(), t.end());
      sub[i] = m.gamma.mul(t[i], t[i + 1]);
      sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(i) + 1);
      const std::size_t col = tuple_rank(sub, ord) * mg;
      for (std::size_t c = 0; c < mg; ++c)
        d.add_entry(col + c, base_row + c, sign);
      sign = -sign;
    }

    // Last face: drop the trailing element.
    sub.assign(t.begin(), t.end() - 1);
    const std::size_t last_col = tuple_rank(sub, ord) * mg;
    for (std::size_t c = 0; c < mg; ++c)
      d.add_entry(last_col + c, base_row + c, sign);

    more = false;
    for (std::size_t i = t.size(); i-- > 0;) {
      if (++t[i] < ord) {
        more = true;
        break;
      }
      t[i] = 0;
    }
  }
  d.normalize();
  return d;
}

std::size_t sparse_rank(SparseMat a) {
  return echelonize(std::move(a), false).rank();
}

IntMatrix cochain_relations(const GammaModule& m, std::size_t n) {
  const std::size_t tuples = cochain_tuples(m.gamma, n);
  const std::size_t mg = m.carrier.gens;
  const std::size_t k = m.carrier.relations.cols();
  IntMatrix rel(tuples * mg, tuples * k);
  for (std::size_t t = 0; t < tuples; ++t)
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t i = 0; i < mg; ++i)
        rel(t * mg + i, t * k + j) = m.carrier.relations(i, j);
  return rel;
}

} // namespace detail

std::size_t cochain_tuples(const FiniteGroup& gamma, std::size_t n) {
  std::size_t t = 1;
  for (std::size_t i = 0; i < n; ++i)
    t *= gamma.order();
  return t;
}

FpAbGroup cochain_group(const GammaModule& m, std::size_t n) {
  return {cochain_tuples(m.gamma, n) * m.carrier.gens,
          detail::cochain_relations(m, n)};
}

AbHom differential(const GammaModule& m, std::size_t n) {
  // Well-defined by construction: the action preserves the relations and
  // the inner faces act coordinatewise.
  return {cochain_group(m, n), cochain_group(m, n + 1),
          detail::to_dense(detail::bar_differential_sparse(m, n))};
}

AbStructure cohomology(const GammaModule& m, std::size_t n) {
  if (!m.carrier.is_free())
    return structure(cohomology_classes(m, n).group);

  // For a free carrier the cocycles form a saturated sublattice of C^n, so
  // the quotient splits into a free part counted by ranks and the torsion
  // of the previous differential's elementary divisors.
  const std::size_t total = cochain_tuples(m.gamma, n) * m.carrier.gens;
  const std::size_t coboundary_rank =
      detail::sparse_rank(detail::bar_differential_sparse(m, n));

  std::size_t prev_rank = 0;
  std::vector<Int> factors;
  if (n > 0) {
    const IntMatrix prev =
        detail::to_dense(detail::bar_differential_sparse(m, n - 1));
    for (const Int& d : snf_diagonal(prev)) {
      if (d == 0)
        continue;
      ++prev_rank;
      if (d >= 2)
        factors.push_back(d);
    }
  }
  return {total - coboundary_rank - prev_rank, std::move(factors)};
}

Subquotient cohomology_classes(const GammaModule& m, std::size_t n) {
  const FpAbGroup cn = cochain_group(m, n);
  if (m.carrier.is_free() || m.carrier.gens == 0) {
    AbHom d{cn, cochain_group(m, n + 1),
            detail::to_dense(detail::bar_differential_sparse(m, n))};
    SubgroupPart cocycles = kernel(d);
    IntMatrix coboundaries =
        n == 0 ? IntMatrix(cn.gens, 0)
               : detail::to_dense(detail::bar_differential_sparse(m, n - 1));
    return subquotient(cocycles.incl.matrix, coboundaries, cn);
  }

  // Presented carrier.  A plain integer elimination of the stacked system
  // lets intermediate entries grow far past the carrier torsion, so both
  // eliminations here reduce every working column against the per-tuple
  // relation lattice instead.
  const detail::BlockReducer red(m.carrier.gens, m.carrier.relations);

  // Cocycles: x with d(x) inside the relation lattice of C^(n+1).
  detail::SparseMat sys = detail::bar_differential_sparse(m, n);
  detail::append_relation_columns(sys, m.carrier.relations,
                                  cochain_tuples(m.gamma, n + 1));
  detail::Echelon ez =
      detail::echelonize_top_reduced(std::move(sys), cn.gens, red);
  const std::vector<std::size_t> zc = ez.zero_columns();
  IntMatrix zgens(cn.gens, zc.size());
  for (std::size_t j = 0; j < zc.size(); ++j)
    for (const auto& [r, v] : ez.t[zc[j]])
      zgens(r, j) = v;

  // Relations of span(zgens) / (coboundaries + relation lattice).
  detail::SparseMat pres = detail::to_sparse(zgens);
  if (n > 0)
    detail::append_columns(pres, detail::bar_differential_sparse(m, n - 1));
  detail::append_relation_columns(pres, m.carrier.relations,
                                  cochain_tuples(m.gamma, n));
  detail::Echelon er =
      detail::echelonize_top_reduced(std::move(pres), zgens.cols(), red);
  const std::vector<std::size_t> rc = er.zero_columns();
  IntMatrix rel(zgens.cols(), rc.size());
  for (std::size_t j = 0; j < rc.size(); ++j)
    for (const auto& [r, v] : er.t[rc[j]])
      rel(r, j) = v;
  return {{zgens.cols(), std::move(rel)}, std::move(zgens)};
}

AbHom induced_on_cohomology(const GammaHom& f, std::size_t n) {
  const Subquotient src = cohomology_classes(f.source, n);
  const Subquotient tgt = cohomology_classes(f.target, n);
  const std::size_t tuples = cochain_tuples(f.source.gamma, n);
  const std::size_t ms = f.source.carrier.gens;
  const std::size_t mt = f.target.carrier.gens;

  IntMatrix on_cochains(tuples * mt, tuples * ms);
  for (std::size_t t = 0; t < tuples; ++t)
    for (std::size_t i = 0; i < mt; ++i)
      for (std::size_t j = 0; j < ms; ++j)
        on_cochains(t * mt + i, t * ms + j) = f.matrix(i, j);

  // Coboundaries of the target may soak up the remainder of each mapped
  // representative.
  IntMatrix prev = n == 0 ? IntMatrix(tuples * mt, 0)
                          : detail::to_dense(detail::bar_differential_sparse(
                                f.target, n - 1));
  return induced_on_subquotients(src, tgt, on_cochains, prev,
                                 cochain_group(f.target, n));
}

AbStructure cyclic_cohomology_oracle(const GammaModule& m, std::size_t n) {
  auto gen = m.gamma.cyclic_generator();
  if (!gen)
    throw Error("not-cyclic", "oracle requires a cyclic group");
  const std::size_t ng = m.carrier.gens;
  const IntMatrix id = IntMatrix::identity(ng);
  const IntMatrix a = m.act(*gen);
  IntMatrix diff = a - id;

  IntMatrix norm(ng, ng);
  IntMatrix power = id;
  for (std::size_t i = 0; i < m.gamma.order(); ++i) {
    norm = norm + power;
    power = a * power;
  }

  if (n == 0)
    return structure(kernel(make_hom(m.carrier, m.carrier, diff)).group);
  if (n % 2 == 1) {
    SubgroupPart z = kernel(make_hom(m.carrier, m.carrier, norm));
    return structure(subquotient(z.incl.matrix, diff, m.carrier).group);
  }
  SubgroupPart z = kernel(make_hom(m.carrier, m.carrier, diff));
  return structure(subquotient(z.incl.matrix, norm, m.carrier).group);
}

} // namespace galbrauer
