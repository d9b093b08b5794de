#include "galbrauer/complexes.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "bar_internal.hpp"

namespace galbrauer {

namespace {

GammaModule zero_module(const FiniteGroup& gamma) {
  return trivial_module(gamma, AbStructure{0, {}});
}

IntMatrix negated(const IntMatrix& m) {
  IntMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      r(i, j) = -m(i, j);
  return r;
}

bool columns_in_span(const IntMatrix& m, const ColumnSpan& span) {
  for (std::size_t j = 0; j < m.cols(); ++j)
    if (!span.contains(m.col(j)))
      return false;
  return true;
}

// Homogeneous blocks (p, q) with p + q = n, ascending in the cochain
// degree p, together with generator offsets into the total group.
struct TotalLayout {
  std::vector<std::pair<int, int>> blocks;
  std::vector<std::size_t> offsets;
  std::size_t gens = 0;

  std::optional<std::size_t> offset_of(int p, int q) const {
    for (std::size_t i = 0; i < blocks.size(); ++i)
      if (blocks[i].first == p && blocks[i].second == q)
        return offsets[i];
    return std::nullopt;
  }
};

TotalLayout total_layout(const ModComplex& c, int n) {
  TotalLayout layout;
  if (c.lo() > c.hi())
    return layout;
  for (int p = std::max(0, n - c.hi()); p <= n - c.lo(); ++p) {
    const int q = n - p;
    layout.blocks.emplace_back(p, q);
    layout.offsets.push_back(layout.gens);
    layout.gens += cochain_tuples(c.gamma(), static_cast<std::size_t>(p)) *
                   c.term(q).carrier.gens;
  }
  return layout;
}

} // namespace

ModComplex ModComplex::make(FiniteGroup gamma,
                            const std::map<int, GammaModule>& terms,
                            const std::map<int, GammaHom>& differentials) {
  ModComplex c(std::move(gamma));
  if (!terms.empty()) {
    c.lo_ = terms.begin()->first;
    c.hi_ = terms.rbegin()->first;
  }
  for (const auto& [deg, m] : terms)
    if (!(m.gamma == c.gamma_))
      throw Error("gamma-mismatch",
                  "term at degree " + std::to_string(deg) +
                      " lives over a different group");

  for (int d = c.lo_; d <= c.hi_; ++d) {
    auto it = terms.find(d);
    c.terms_.push_back(it != terms.end() ? it->second
                                         : zero_module(c.gamma_));
  }

  for (int d = c.lo_; d < c.hi_; ++d) {
    auto it = differentials.find(d);
    if (it == differentials.end()) {
      c.diffs_.push_back(zero_gamma_hom(c.term(d), c.term(d + 1)));
    } else {
      if (!(it->second.source == c.term(d)) ||
          !(it->second.target == c.term(d + 1)))
        throw Error("dimension-mismatch",
                    "differential at degree " + std::to_string(d) +
                        " does not connect the stored terms");
      c.diffs_.push_back(it->second);
    }
  }
  for (const auto& [d, f] : differentials)
    if (d < c.lo_ || d >= c.hi_)
      if (!(f.source == c.term(d)) || !(f.target == c.term(d + 1)))
        throw Error("dimension-mismatch",
                    "differential at degree " + std::to_string(d) +
                        " does not connect the stored terms");

  for (int d = c.lo_; d + 2 <= c.hi_; ++d) {
    ColumnSpan rel(c.term(d + 2).carrier.relations);
    if (!columns_in_span(c.diff(d + 1).matrix * c.diff(d).matrix, rel))
      throw Error("composite-nonzero",
                  "differentials at degrees " + std::to_string(d) + " and " +
                      std::to_string(d + 1) + " do not compose to zero");
  }
  return c;
}

ModComplex ModComplex::single_term(GammaModule m, int degree) {
  FiniteGroup gamma = m.gamma;
  return make(std::move(gamma), {{degree, std::move(m)}}, {});
}

GammaModule ModComplex::term(int degree) const {
  if (degree < lo_ || degree > hi_)
    return zero_module(gamma_);
  return terms_[static_cast<std::size_t>(degree - lo_)];
}

GammaHom ModComplex::diff(int degree) const {
  if (degree < lo_ || degree >= hi_)
    return zero_gamma_hom(term(degree), term(degree + 1));
  return diffs_[static_cast<std::size_t>(degree - lo_)];
}

ModComplex shift(const ModComplex& c, int k) {
  std::map<int, GammaModule> terms;
  std::map<int, GammaHom> diffs;
  for (int d = c.lo(); d <= c.hi(); ++d)
    terms.emplace(d - k, c.term(d));
  for (int d = c.lo(); d < c.hi(); ++d) {
    GammaHom h = c.diff(d);
    if (k % 2 != 0)
      h.matrix = negated(h.matrix);
    diffs.emplace(d - k, std::move(h));
  }
  return ModComplex::make(c.gamma(), terms, diffs);
}

ChainMap ChainMap::make(ModComplex source, ModComplex target,
                        const std::map<int, GammaHom>& components) {
  if (!(source.gamma() == target.gamma()))
    throw Error("gamma-mismatch", "chain map over different groups");
  ChainMap f(std::move(source), std::move(target));
  for (const auto& [d, h] : components) {
    if (!(h.source == f.source_.term(d)) || !(h.target == f.target_.term(d)))
      throw Error("dimension-mismatch",
                  "component at degree " + std::to_string(d) +
                      " does not connect the terms");
    f.components_.emplace(d, h);
  }

  const int lo = std::min(f.source_.lo(), f.target_.lo()) - 1;
  const int hi = std::max(f.source_.hi(), f.target_.hi());
  for (int d = lo; d <= hi; ++d) {
    IntMatrix lhs = f.component(d + 1).matrix * f.source_.diff(d).matrix;
    IntMatrix rhs = f.target_.diff(d).matrix * f.component(d).matrix;
    ColumnSpan rel(f.target_.term(d + 1).carrier.relations);
    if (!columns_in_span(lhs - rhs, rel))
      throw Error("non-commuting-square",
                  "square at degree " + std::to_string(d) +
                      " does not commute");
  }
  return f;
}

ChainMap ChainMap::identity(const ModComplex& c) {
  std::map<int, GammaHom> comps;
  for (int d = c.lo(); d <= c.hi(); ++d)
    comps.emplace(d, identity_gamma_hom(c.term(d)));
  return make(c, c, comps);
}

ChainMap ChainMap::zero(ModComplex source, ModComplex target) {
  return make(std::move(source), std::move(target), {});
}

GammaHom ChainMap::component(int degree) const {
  auto it = components_.find(degree);
  if (it != components_.end())
    return it->second;
  return zero_gamma_hom(source_.term(degree), target_.term(degree));
}

ChainMap shift_map(const ChainMap& f, int k) {
  std::map<int, GammaHom> comps;
  const int lo = std::min(f.source().lo(), f.target().lo());
  const int hi = std::max(f.source().hi(), f.target().hi());
  for (int d = lo; d <= hi; ++d)
    comps.emplace(d - k, f.component(d));
  return ChainMap::make(shift(f.source(), k), shift(f.target(), k), comps);
}

ConeTriangle cone(const ChainMap& f) {
  const ModComplex& a = f.source();
  const ModComplex& b = f.target();
  const int lo = std::min(a.lo() - 1, b.lo());
  const int hi = std::max(a.hi() - 1, b.hi());

  std::map<int, GammaModule> terms;
  for (int n = lo; n <= hi; ++n)
    terms.emplace(n, direct_sum(a.term(n + 1), b.term(n)));

  std::map<int, GammaHom> diffs;
  for (int n = lo; n < hi; ++n) {
    const std::size_t a1 = a.term(n + 1).carrier.gens;
    const std::size_t b0 = b.term(n).carrier.gens;
    const std::size_t a2 = a.term(n + 2).carrier.gens;
    const std::size_t b1 = b.term(n + 1).carrier.gens;
    IntMatrix d(a2 + b1, a1 + b0);
    const IntMatrix& da = a.diff(n + 1).matrix;
    const IntMatrix& db = b.diff(n).matrix;
    const IntMatrix& fc = f.component(n + 1).matrix;
    for (std::size_t i = 0; i < a2; ++i)
      for (std::size_t j = 0; j < a1; ++j)
        d(i, j) = -da(i, j);
    for (std::size_t i = 0; i < b1; ++i) {
      for (std::size_t j = 0; j < a1; ++j)
        d(a2 + i, j) = fc(i, j);
      for (std::size_t j = 0; j < b0; ++j)
        d(a2 + i, a1 + j) = db(i, j);
    }
    diffs.emplace(n, make_gamma_hom(terms.at(n), terms.at(n + 1),
                                    std::move(d)));
  }
  ModComplex c = ModComplex::make(a.gamma(), terms, diffs);

  std::map<int, GammaHom> in_comps;
  std::map<int, GammaHom> out_comps;
  for (int n = lo; n <= hi; ++n) {
    const std::size_t a1 = a.term(n + 1).carrier.gens;
    const std::size_t b0 = b.term(n).carrier.gens;
    IntMatrix in_m(a1 + b0, b0);
    for (std::size_t i = 0; i < b0; ++i)
      in_m(a1 + i, i) = 1;
    in_comps.emplace(n, make_gamma_hom(b.term(n), c.term(n),
                                       std::move(in_m)));
    IntMatrix out_m(a1, a1 + b0);
    for (std::size_t i = 0; i < a1; ++i)
      out_m(i, i) = 1;
    out_comps.emplace(n, make_gamma_hom(c.term(n), a.term(n + 1),
                                        std::move(out_m)));
  }
  ChainMap in = ChainMap::make(b, c, in_comps);
  ChainMap out = ChainMap::make(c, shift(a, 1), out_comps);
  return {std::move(c), std::move(in), std::move(out)};
}

namespace {

FpAbGroup total_group(const ModComplex& c, int n) {
  const TotalLayout layout = total_layout(c, n);
  FpAbGroup g = FpAbGroup::zero();
  for (const auto& [p, q] : layout.blocks)
    g = direct_sum(g, cochain_group(c.term(q), static_cast<std::size_t>(p)));
  return g;
}

detail::SparseMat total_differential(const ModComplex& c, int n) {
  const TotalLayout src = total_layout(c, n);
  const TotalLayout dst = total_layout(c, n + 1);
  detail::SparseMat d;
  d.rows = dst.gens;
  d.cols.resize(src.gens);

  for (std::size_t bi = 0; bi < src.blocks.size(); ++bi) {
    const auto [p, q] = src.blocks[bi];
    const std::size_t off = src.offsets[bi];
    const GammaModule mod = c.term(q);
    const std::size_t mq = mod.carrier.gens;
    const std::size_t tuples =
        cochain_tuples(c.gamma(), static_cast<std::size_t>(p));

    if (auto bar_off = dst.offset_of(p + 1, q); bar_off && mq > 0) {
      detail::SparseMat bar =
          detail::bar_differential_sparse(mod, static_cast<std::size_t>(p));
      for (std::size_t j = 0; j < bar.ncols(); ++j)
        for (const auto& [row, v] : bar.cols[j])
          d.add_entry(off + j, *bar_off + row, v);
    }

    if (auto coeff_off = dst.offset_of(p, q + 1)) {
      const IntMatrix& dk = c.diff(q).matrix;
      const int sign = p % 2 == 0 ? 1 : -1;
      for (std::size_t t = 0; t < tuples; ++t)
        for (std::size_t i = 0; i < dk.rows(); ++i)
          for (std::size_t j = 0; j < mq; ++j)
            if (dk(i, j) != 0)
              d.add_entry(off + t * mq + j, *coeff_off + t * dk.rows() + i,
                          sign * dk(i, j));
    }
  }
  d.normalize();
  return d;
}

// The square of the total differential vanishes modulo the relations of
// the receiving total group; exact over free terms.
void check_total_square(const ModComplex& c, int n) {
  detail::SparseMat dd =
      detail::mul(total_differential(c, n + 1), total_differential(c, n));
  ColumnSpan rel(total_group(c, n + 2).relations);
  for (std::size_t j = 0; j < dd.ncols(); ++j)
    if (!rel.contains(detail::col_to_dense(dd.cols[j], dd.rows)))
      throw Error("composite-nonzero",
                  "total differential does not square to zero");
}

bool all_terms_free(const ModComplex& c) {
  for (int d = c.lo(); d <= c.hi(); ++d)
    if (!c.term(d).carrier.is_free())
      return false;
  return true;
}

} // namespace

FpAbGroup hypercohomology(const ModComplex& c, int n) {
  if (!all_terms_free(c))
    return hypercohomology_classes(c, n).group;
  check_total_square(c, n - 1);

  // Free terms make the total complex free, so the cocycles are a saturated
  // sublattice: ranks give the free part, the elementary divisors of the
  // previous differential give the torsion.
  const std::size_t total = total_layout(c, n).gens;
  const std::size_t boundary_rank =
      detail::sparse_rank(total_differential(c, n));
  std::size_t prev_rank = 0;
  std::vector<Int> factors;
  const IntMatrix prev = detail::to_dense(total_differential(c, n - 1));
  for (const Int& d : snf_diagonal(prev)) {
    if (d == 0)
      continue;
    ++prev_rank;
    if (d >= 2)
      factors.push_back(d);
  }
  return FpAbGroup::from_structure(
      {total - boundary_rank - prev_rank, std::move(factors)});
}

Subquotient hypercohomology_classes(const ModComplex& c, int n) {
  check_total_square(c, n - 1);
  const FpAbGroup tot = total_group(c, n);
  AbHom d{tot, total_group(c, n + 1),
          detail::to_dense(total_differential(c, n))};
  SubgroupPart cocycles = kernel(d);
  IntMatrix boundaries = detail::to_dense(total_differential(c, n - 1));
  return subquotient(cocycles.incl.matrix, boundaries, tot);
}

AbHom induced_map(const ChainMap& f, int n) {
  const Subquotient src = hypercohomology_classes(f.source(), n);
  const Subquotient tgt = hypercohomology_classes(f.target(), n);
  const TotalLayout ls = total_layout(f.source(), n);
  const TotalLayout lt = total_layout(f.target(), n);

  detail::SparseMat on_tot;
  on_tot.rows = lt.gens;
  on_tot.cols.resize(ls.gens);
  for (std::size_t bi = 0; bi < ls.blocks.size(); ++bi) {
    const auto [p, q] = ls.blocks[bi];
    auto toff = lt.offset_of(p, q);
    if (!toff)
      continue;
    const IntMatrix& comp = f.component(q).matrix;
    const std::size_t ms = f.source().term(q).carrier.gens;
    const std::size_t tuples =
        cochain_tuples(f.source().gamma(), static_cast<std::size_t>(p));
    for (std::size_t t = 0; t < tuples; ++t)
      for (std::size_t i = 0; i < comp.rows(); ++i)
        for (std::size_t j = 0; j < ms; ++j)
          if (comp(i, j) != 0)
            on_tot.add_entry(ls.offsets[bi] + t * ms + j,
                             *toff + t * comp.rows() + i, comp(i, j));
  }
  on_tot.normalize();

  IntMatrix prev = detail::to_dense(total_differential(f.target(), n - 1));
  return induced_on_subquotients(src, tgt, detail::to_dense(on_tot), prev,
                                 total_group(f.target(), n));
}

ExactnessReport check_cone_les(const ChainMap& f, int lo, int hi) {
  ConeTriangle tri = cone(f);
  ChainMap shifted = shift_map(f, 1);

  ExactnessReport report;
  report.all_exact = true;
  for (int n = lo; n <= hi; ++n) {
    AbHom in_n = induced_map(tri.in, n);
    AbHom out_n = induced_map(tri.out, n);
    AbHom next = induced_map(shifted, n);

    ExactnessNode at_cone{n, "cone", is_exact_at(in_n, out_n),
                          structure(in_n.target)};
    ExactnessNode at_src{n, "shifted-source", is_exact_at(out_n, next),
                         structure(out_n.target)};
    report.all_exact =
        report.all_exact && at_cone.exact && at_src.exact;
    report.nodes.push_back(std::move(at_cone));
    report.nodes.push_back(std::move(at_src));
  }
  return report;
}

} // namespace galbrauer
