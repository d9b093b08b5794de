#include "selftest.hpp"

#include <functional>

#include "galbrauer/errors.hpp"
#include "galbrauer/homspace.hpp"

namespace galbrauer::selftest {

namespace {

/// Runs the body, converting exceptions and a false return into failures.
Check guarded(const std::string& name,
              const std::function<bool(std::string&)>& body) {
  Check check{name, false, ""};
  try {
    check.ok = body(check.detail);
    if (!check.ok && check.detail.empty())
      check.detail = "check returned false";
  } catch (const std::exception& e) {
    check.ok = false;
    check.detail = e.what();
  }
  return check;
}

bool structure_is(const AbStructure& got, const AbStructure& want,
                  std::string& detail) {
  if (got == want)
    return true;
  detail = "expected " + want.to_text() + ", got " + got.to_text();
  return false;
}

bool snf_reconstructs(const IntMatrix& a, std::string& detail) {
  SnfDecomposition dec = snf(a);
  if (!(dec.U * a * dec.V == dec.D)) {
    detail = "U*A*V differs from D";
    return false;
  }
  Int du = determinant(dec.U);
  Int dv = determinant(dec.V);
  if (!((du == 1 || du == -1) && (dv == 1 || dv == -1))) {
    detail = "transforms are not unimodular";
    return false;
  }
  std::size_t n = std::min(dec.D.rows(), dec.D.cols());
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (dec.D(i + 1, i + 1) == 0)
      break;
    if (dec.D(i, i) == 0 || dec.D(i + 1, i + 1) % dec.D(i, i) != 0) {
      detail = "diagonal is not a divisibility chain";
      return false;
    }
  }
  return true;
}

const AbStructure kZero{0, {}};
const AbStructure kZ{1, {}};
const AbStructure kZ2{0, {2}};

AbStructure eval_value(const std::string& corpus_name, int which) {
  HomSpaceInput in = *corpus(corpus_name).input;
  EvalFlags flags;
  flags.X_has_rational_point = true;
  HomSpaceReport rep = evaluate(in.group, in.stabilizer, flags);
  if (which == 0)
    return rep.U_X.value;
  if (which == 1)
    return rep.Pic_X.value;
  return rep.Br_a_X_G.value;
}

} // namespace

std::vector<Check> run_all() {
  std::vector<Check> checks;

  checks.push_back(guarded("snf-reconstruction", [](std::string& detail) {
    return snf_reconstructs(IntMatrix::from_rows({{2, 4, 4},
                                                  {-6, 6, 12},
                                                  {10, -4, -16}}),
                            detail) &&
           snf_reconstructs(IntMatrix::from_rows({{1, 2}, {3, 4}}), detail) &&
           snf_reconstructs(IntMatrix::from_rows({{0}}), detail) &&
           snf_reconstructs(IntMatrix::identity(3), detail);
  }));

  checks.push_back(guarded("hnf-column-style", [](std::string& detail) {
    IntMatrix a = IntMatrix::from_rows({{4, 6, 2}, {2, 8, 10}});
    HermiteDecomposition dec = hnf(a);
    if (!(a * dec.U == dec.H)) {
      detail = "A*U differs from H";
      return false;
    }
    Int du = determinant(dec.U);
    if (!(du == 1 || du == -1)) {
      detail = "transform is not unimodular";
      return false;
    }
    return true;
  }));

  checks.push_back(guarded("cohomology-cyclic-trivial", [](std::string& d) {
    GammaModule z = trivial_module(FiniteGroup::cyclic(4), AbStructure{1, {}});
    return structure_is(cohomology(z, 0), kZ, d) &&
           structure_is(cohomology(z, 1), kZero, d) &&
           structure_is(cohomology(z, 2), AbStructure{0, {4}}, d) &&
           structure_is(cohomology(z, 3), kZero, d);
  }));

  checks.push_back(guarded("cohomology-sign-module", [](std::string& d) {
    GammaModule sign =
        make_module(FiniteGroup::cyclic(2), FpAbGroup::free_group(1),
                    {IntMatrix::identity(1), IntMatrix::from_rows({{-1}})});
    return structure_is(cohomology(sign, 0), kZero, d) &&
           structure_is(cohomology(sign, 1), kZ2, d) &&
           structure_is(cohomology(sign, 2), kZero, d) &&
           structure_is(cohomology(sign, 3), kZ2, d);
  }));

  checks.push_back(guarded("cohomology-klein-four", [](std::string& d) {
    GammaModule z = trivial_module(FiniteGroup::klein_four(),
                                   AbStructure{1, {}});
    return structure_is(cohomology(z, 2), AbStructure{0, {2, 2}}, d) &&
           structure_is(cohomology(z, 3), kZ2, d);
  }));

  checks.push_back(guarded("shapiro-free-vanishing", [](std::string& d) {
    GammaModule reg = regular_module(FiniteGroup::cyclic(3));
    return structure_is(cohomology(reg, 1), kZero, d) &&
           structure_is(cohomology(reg, 2), kZero, d) &&
           structure_is(cohomology(reg, 3), kZero, d);
  }));

  checks.push_back(guarded("cyclic-oracle-agreement", [](std::string& d) {
    GammaModule t = norm_one_torus_module(FiniteGroup::cyclic(5));
    for (std::size_t n = 0; n <= 3; ++n)
      if (!structure_is(cohomology(t, n), cyclic_cohomology_oracle(t, n), d))
        return false;
    return true;
  }));

  checks.push_back(guarded("hypercohomology-two-term", [](std::string& d) {
    FiniteGroup gamma = FiniteGroup::cyclic(2);
    GammaModule z = trivial_module(gamma, AbStructure{1, {}});
    GammaHom two = make_gamma_hom(z, z, IntMatrix::from_rows({{2}}));
    ModComplex c = ModComplex::make(gamma, {{0, z}, {1, z}}, {{0, two}});
    return structure_is(structure(hypercohomology(c, 0)), kZero, d) &&
           structure_is(structure(hypercohomology(c, 1)), kZ2, d) &&
           structure_is(structure(hypercohomology(c, 2)), kZ2, d) &&
           structure_is(structure(hypercohomology(c, 3)), kZ2, d);
  }));

  checks.push_back(guarded("cone-les-restriction", [](std::string& detail) {
    for (const char* name : {"sl2_mod_torus", "norm_one_torus:z2"}) {
      HomSpaceInput in = *corpus(name).input;
      ChainMap res = restriction_chain_map(in.group, in.stabilizer);
      if (!check_cone_les(res, 0, 2).all_exact) {
        detail = std::string("long exact sequence fails for ") + name;
        return false;
      }
    }
    return true;
  }));

  checks.push_back(guarded("corpus-values", [](std::string& d) {
    return structure_is(eval_value("sl2", 1), kZero, d) &&
           structure_is(eval_value("sl2", 2), kZero, d) &&
           structure_is(eval_value("pgl2", 1), kZ2, d) &&
           structure_is(eval_value("pgl2", 2), kZ2, d) &&
           structure_is(eval_value("sl2_mod_torus", 1), kZ, d) &&
           structure_is(eval_value("sl2_mod_torus", 2), kZero, d) &&
           structure_is(eval_value("norm_one_torus:z2", 1), kZ2, d) &&
           structure_is(eval_value("norm_one_torus:z2", 2), kZero, d) &&
           structure_is(eval_value("norm_one_torus:klein4", 2), kZ2, d);
  }));

  checks.push_back(guarded("quasi-iso-pairs", [](std::string& d) {
    for (const char* name : {"pgl2_center_vs_torus", "sl2_center_vs_torus"}) {
      QuasiIsoPair pair = *corpus(name).pair;
      for (int n = 0; n <= 3; ++n)
        if (!structure_is(structure(hypercohomology(pair.center_based, n)),
                          structure(hypercohomology(pair.torus_based, n)), d))
          return false;
    }
    return true;
  }));

  checks.push_back(guarded("flag-discipline", [](std::string& detail) {
    HomSpaceInput in = *corpus("norm_one_torus:z2").input;
    HomSpaceReport rep = evaluate(in.group, in.stabilizer, EvalFlags{});
    if (!rep.Pic_X.conditional || !rep.Br_a_X_G.conditional) {
      detail = "flagless evaluation claimed an unconditional value";
      return false;
    }
    if (rep.Br_a_X_G.bound.find("N^3(k, G_m)") == std::string::npos) {
      detail = "bounding sequence is missing its degree-three kernel term";
      return false;
    }
    return true;
  }));

  return checks;
}

} // namespace galbrauer::selftest
