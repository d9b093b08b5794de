#include "galbrauer/gamma_module.hpp"

#include <string>
#include <utility>

namespace galbrauer {

namespace {

// Checks that every column of m lies in span, i.e. that m is zero as a map
// into the presented target.
bool columns_in_span(const IntMatrix& m, const ColumnSpan& span) {
  for (std::size_t j = 0; j < m.cols(); ++j)
    if (!span.contains(m.col(j)))
      return false;
  return true;
}

} // namespace

GammaModule make_module(FiniteGroup gamma, FpAbGroup carrier,
                        std::vector<IntMatrix> action) {
  const std::size_t ord = gamma.order();
  const std::size_t n = carrier.gens;
  if (action.size() != ord)
    throw Error("invalid-action", "expected one action matrix per element, got " +
                                      std::to_string(action.size()));
  for (const IntMatrix& a : action)
    if (a.rows() != n || a.cols() != n)
      throw Error("invalid-action", "action matrix is not " +
                                        std::to_string(n) + "x" +
                                        std::to_string(n));

  ColumnSpan rel(carrier.relations);
  for (std::size_t g = 0; g < ord; ++g)
    for (std::size_t j = 0; j < carrier.relations.cols(); ++j)
      if (!rel.contains(action[g] * carrier.relations.col(j)))
        throw Error("invalid-action",
                    "element " + std::to_string(g) +
                        " does not preserve the relations");

  const IntMatrix id = IntMatrix::identity(n);
  if (!columns_in_span(action[gamma.identity()] - id, rel))
    throw Error("invalid-action", "identity element does not act trivially");

  for (std::size_t g = 0; g < ord; ++g)
    for (std::size_t h = 0; h < ord; ++h)
      if (!columns_in_span(action[g] * action[h] - action[gamma.mul(g, h)],
                           rel))
        throw Error("invalid-action",
                    "action is not multiplicative at (" + std::to_string(g) +
                        "," + std::to_string(h) + ")");

  return {std::move(gamma), std::move(carrier), std::move(action)};
}

GammaModule make_module_from_generators(
    FiniteGroup gamma, FpAbGroup carrier,
    const std::map<std::size_t, IntMatrix>& generators) {
  const std::size_t ord = gamma.order();
  const std::size_t n = carrier.gens;
  for (const auto& [g, m] : generators) {
    if (g >= ord)
      throw Error("invalid-action", "generator index out of range");
    if (m.rows() != n || m.cols() != n)
      throw Error("invalid-action", "generator action matrix is not " +
                                        std::to_string(n) + "x" +
                                        std::to_string(n));
  }

  std::vector<IntMatrix> action(ord, IntMatrix(0, 0));
  std::vector<bool> known(ord, false);
  action[gamma.identity()] = IntMatrix::identity(n);
  known[gamma.identity()] = true;

  std::vector<std::size_t> queue{gamma.identity()};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::size_t x = queue[head];
    for (const auto& [g, m] : generators) {
      const std::size_t y = gamma.mul(g, x);
      if (!known[y]) {
        action[y] = m * action[x];
        known[y] = true;
        queue.push_back(y);
      }
    }
  }
  for (std::size_t g = 0; g < ord; ++g)
    if (!known[g])
      throw Error("invalid-action",
                  "given elements do not generate the group");
  return make_module(std::move(gamma), std::move(carrier), std::move(action));
}

GammaModule trivial_module(const FiniteGroup& gamma, const AbStructure& s) {
  FpAbGroup carrier = FpAbGroup::from_structure(s);
  std::vector<IntMatrix> action(gamma.order(),
                                IntMatrix::identity(carrier.gens));
  return make_module(gamma, std::move(carrier), std::move(action));
}

GammaModule regular_module(const FiniteGroup& gamma) {
  const std::size_t n = gamma.order();
  std::vector<IntMatrix> action(n, IntMatrix(n, n));
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t x = 0; x < n; ++x)
      action[g](gamma.mul(g, x), x) = 1;
  return make_module(gamma, FpAbGroup::free_group(n), std::move(action));
}

GammaModule norm_one_torus_module(const FiniteGroup& gamma) {
  const std::size_t n = gamma.order();
  if (n == 1)
    throw Error("trivial-gamma",
                "norm-one torus needs a nontrivial group");
  GammaModule reg = regular_module(gamma);
  IntMatrix ones(n, 1);
  for (std::size_t i = 0; i < n; ++i)
    ones(i, 0) = 1;
  return make_module(gamma, FpAbGroup{n, std::move(ones)},
                     std::move(reg.action));
}

GammaModule direct_sum(const GammaModule& a, const GammaModule& b) {
  if (!(a.gamma == b.gamma))
    throw Error("gamma-mismatch", "direct sum over different groups");
  FpAbGroup carrier = direct_sum(a.carrier, b.carrier);
  const std::size_t na = a.carrier.gens;
  const std::size_t nb = b.carrier.gens;
  std::vector<IntMatrix> action;
  action.reserve(a.gamma.order());
  for (std::size_t g = 0; g < a.gamma.order(); ++g) {
    IntMatrix m(na + nb, na + nb);
    for (std::size_t i = 0; i < na; ++i)
      for (std::size_t j = 0; j < na; ++j)
        m(i, j) = a.action[g](i, j);
    for (std::size_t i = 0; i < nb; ++i)
      for (std::size_t j = 0; j < nb; ++j)
        m(na + i, na + j) = b.action[g](i, j);
    action.push_back(std::move(m));
  }
  return make_module(a.gamma, std::move(carrier), std::move(action));
}

GammaModule dual_module(const GammaModule& m) {
  if (!m.carrier.is_free())
    throw Error("not-free", "dual is only defined for free carriers");
  std::vector<IntMatrix> action;
  action.reserve(m.gamma.order());
  for (std::size_t g = 0; g < m.gamma.order(); ++g)
    action.push_back(m.action[m.gamma.inverse(g)].transpose());
  return make_module(m.gamma, m.carrier, std::move(action));
}

SubgroupPart invariants(const GammaModule& m) {
  const std::size_t n = m.carrier.gens;
  const std::size_t ord = m.gamma.order();
  const IntMatrix id = IntMatrix::identity(n);

  // Stack (act(g) - id) over the non-identity elements; the fixed subgroup
  // is the kernel of the stacked map into a direct sum of carrier copies.
  std::vector<IntMatrix> blocks;
  for (std::size_t g = 0; g < ord; ++g)
    if (g != m.gamma.identity())
      blocks.push_back(m.action[g] - id);

  IntMatrix stacked(0, n);
  FpAbGroup target = FpAbGroup::zero();
  for (const IntMatrix& b : blocks) {
    stacked = vstack(stacked, b);
    target = direct_sum(target, m.carrier);
  }
  return kernel(make_hom(m.carrier, target, stacked));
}

GammaHom make_gamma_hom(GammaModule source, GammaModule target,
                        IntMatrix matrix) {
  if (!(source.gamma == target.gamma))
    throw Error("gamma-mismatch", "homomorphism over different groups");
  make_hom(source.carrier, target.carrier, matrix);

  ColumnSpan rel(target.carrier.relations);
  for (std::size_t g = 0; g < source.gamma.order(); ++g)
    if (!columns_in_span(matrix * source.action[g] - target.action[g] * matrix,
                         rel))
      throw Error("not-equivariant",
                  "map does not commute with element " + std::to_string(g));
  return {std::move(source), std::move(target), std::move(matrix)};
}

GammaHom identity_gamma_hom(const GammaModule& m) {
  return make_gamma_hom(m, m, IntMatrix::identity(m.carrier.gens));
}

GammaHom zero_gamma_hom(const GammaModule& source, const GammaModule& target) {
  return make_gamma_hom(source, target,
                        IntMatrix(target.carrier.gens, source.carrier.gens));
}

std::vector<IntMatrix> equivariant_hom_generators(const GammaModule& source,
                                                  const GammaModule& target) {
  if (!(source.gamma == target.gamma))
    throw Error("gamma-mismatch", "homomorphisms over different groups");
  const std::size_t ms = source.carrier.gens;
  const std::size_t mt = target.carrier.gens;
  const std::size_t ks = source.carrier.relations.cols();
  const std::size_t kt = target.carrier.relations.cols();
  const std::size_t ord = source.gamma.order();
  const std::size_t e = source.gamma.identity();

  // Unknowns: the mt*ms entries of T (column-major), then one block of kt
  // slack coefficients per constraint group expressing membership in the
  // target relation span.
  const std::size_t nvars = mt * ms;
  std::vector<std::size_t> constraint_groups;
  for (std::size_t g = 0; g < ord; ++g)
    if (g != e)
      constraint_groups.push_back(g);

  const std::size_t rows = constraint_groups.size() * ms * mt + ks * mt;
  const std::size_t cols =
      nvars + (constraint_groups.size() * ms + ks) * kt;
  IntMatrix sys(rows, cols);
  std::size_t row = 0;
  std::size_t slack = nvars;
  auto tvar = [mt](std::size_t i, std::size_t l) { return l * mt + i; };

  // Equivariance: T * act_s(g) * e_j - act_t(g) * T * e_j lies in the
  // relation span, one row per target coordinate i.
  for (std::size_t g : constraint_groups) {
    const IntMatrix& as = source.action[g];
    const IntMatrix& at = target.action[g];
    for (std::size_t j = 0; j < ms; ++j) {
      for (std::size_t i = 0; i < mt; ++i, ++row) {
        for (std::size_t l = 0; l < ms; ++l)
          sys(row, tvar(i, l)) += as(l, j);
        for (std::size_t l = 0; l < mt; ++l)
          sys(row, tvar(l, j)) -= at(i, l);
        for (std::size_t c = 0; c < kt; ++c)
          sys(row, slack + c) = -target.carrier.relations(i, c);
      }
      slack += kt;
    }
  }

  // Well-definedness: T maps each source relator into the relation span.
  for (std::size_t rj = 0; rj < ks; ++rj) {
    for (std::size_t i = 0; i < mt; ++i, ++row) {
      for (std::size_t l = 0; l < ms; ++l)
        sys(row, tvar(i, l)) += source.carrier.relations(l, rj);
      for (std::size_t c = 0; c < kt; ++c)
        sys(row, slack + c) = -target.carrier.relations(i, c);
    }
    slack += kt;
  }

  IntMatrix ker = kernel_basis(sys);
  std::vector<IntMatrix> out;
  for (std::size_t c = 0; c < ker.cols(); ++c) {
    IntMatrix t(mt, ms);
    bool nonzero = false;
    for (std::size_t l = 0; l < ms; ++l)
      for (std::size_t i = 0; i < mt; ++i) {
        t(i, l) = ker(tvar(i, l), c);
        nonzero = nonzero || t(i, l) != 0;
      }
    if (nonzero)
      out.push_back(std::move(t));
  }
  return out;
}

} // namespace galbrauer
