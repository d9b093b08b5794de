#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "galbrauer/homspace.hpp"
#include "test_support.hpp"

using namespace galbrauer;
using galbrauer::testing::check_error_kind;

namespace {

AbStructure hyper(const ModComplex& c, int n) {
  return structure(hypercohomology(c, n));
}

HomSpaceInput input(const std::string& name) {
  return *corpus(name).input;
}

HomSpaceReport eval_with_point(const std::string& name) {
  EvalFlags flags;
  flags.X_has_rational_point = true;
  HomSpaceInput in = input(name);
  return evaluate(in.group, in.stabilizer, flags);
}

const AbStructure kZero{0, {}};
const AbStructure kZ{1, {}};
const AbStructure kZ2{0, {2}};

} // namespace

TEST_CASE("simply connected group: every reported group vanishes") {
  HomSpaceReport rep = eval_with_point("sl2");
  CHECK(rep.U_X.value == kZero);
  CHECK(rep.Pic_X.value == kZero);
  CHECK(rep.Br_a_X_G.value == kZero);
  CHECK_FALSE(rep.Pic_X.conditional);
  CHECK_FALSE(rep.Br_a_X_G.conditional);
  CHECK(rep.U_X.justified_by == "unconditional");
}

TEST_CASE("adjoint group of type A1 over a trivial-action quadratic quotient") {
  HomSpaceReport rep = eval_with_point("pgl2");
  CHECK(rep.U_X.value == kZero);
  CHECK(rep.Pic_X.value == kZ2);
  CHECK(rep.Br_a_X_G.value == kZ2);
  CHECK(rep.Pic_X.justified_by == "X_has_rational_point");
}

TEST_CASE("simply connected group modulo its maximal torus") {
  HomSpaceReport rep = eval_with_point("sl2_mod_torus");
  CHECK(rep.U_X.value == kZero);
  CHECK(rep.Pic_X.value == kZ);
  CHECK(rep.Br_a_X_G.value == kZero);
}

TEST_CASE("norm-one tori: Picard is the dual abelianization, Brauer via H^3") {
  HomSpaceReport quad = eval_with_point("norm_one_torus:z2");
  CHECK(quad.U_X.value == kZero);
  CHECK(quad.Pic_X.value == kZ2);
  CHECK(quad.Br_a_X_G.value == kZero);

  HomSpaceReport cubic = eval_with_point("norm_one_torus:z3");
  CHECK(cubic.Pic_X.value == AbStructure{0, {3}});
  CHECK(cubic.Br_a_X_G.value == kZero);

  HomSpaceReport biquad = eval_with_point("norm_one_torus:klein4");
  CHECK(biquad.Pic_X.value == AbStructure{0, {2, 2}});
  CHECK(biquad.Br_a_X_G.value == kZ2);

  // Both Sylow subgroups of S3 are cyclic, so H^3(S3, Z) restricts to
  // H^3(Z/2, Z) = H^3(Z/3, Z) = 0 on p-parts and the Brauer group vanishes.
  HomSpaceReport sextic = eval_with_point("norm_one_torus:s3");
  CHECK(sextic.Pic_X.value == kZ2);
  CHECK(sextic.Br_a_X_G.value == kZero);
}

TEST_CASE("missing flags demote Picard and Brauer to sequence bounds") {
  HomSpaceInput in = input("pgl2");
  HomSpaceReport rep = evaluate(in.group, in.stabilizer, EvalFlags{});
  CHECK_FALSE(rep.U_X.conditional);
  CHECK(rep.Pic_X.conditional);
  CHECK(rep.Br_a_X_G.conditional);
  CHECK(rep.Pic_X.bound == "0 -> Pic(X) -> H^1(k, C_hat_X) -> Br(k)");
  CHECK(rep.Br_a_X_G.bound ==
        "Br(k) -> Br_1(X,G) -> H^2(k, C_hat_X) -> N^3(k, G_m)");
  CHECK(rep.Br_a_X_G.value == kZ2);
  CHECK(rep.caveats.size() == 2);

  HomSpaceInput torus = input("norm_one_torus:z2");
  HomSpaceReport trep = evaluate(torus.group, torus.stabilizer, EvalFlags{});
  CHECK(trep.Pic_X.bound == "0 -> Pic(X) -> H^1(k, C_bar_X) -> Br(k)");
  CHECK(trep.Br_a_X_G.bound ==
        "0 -> Br_a(X,G) -> H^2(k, C_bar_X) -> N^3(k, G_m)");
}

TEST_CASE("each justifying flag unlocks exactly its group") {
  HomSpaceInput in = input("pgl2");
  EvalFlags br_only;
  br_only.Br_k_injects = true;
  HomSpaceReport rep = evaluate(in.group, in.stabilizer, br_only);
  CHECK_FALSE(rep.Pic_X.conditional);
  CHECK(rep.Pic_X.justified_by == "Br_k_injects");
  CHECK(rep.Br_a_X_G.conditional);

  EvalFlags h3_only;
  h3_only.H3_k_Gm_vanishes = true;
  rep = evaluate(in.group, in.stabilizer, h3_only);
  CHECK(rep.Pic_X.conditional);
  CHECK_FALSE(rep.Br_a_X_G.conditional);
  CHECK(rep.Br_a_X_G.justified_by == "H3_k_Gm_vanishes");
}

TEST_CASE("trivial stabilizer degenerates the space complex to the group one") {
  for (const char* name : {"sl2", "pgl2", "norm_one_torus:z4"}) {
    HomSpaceInput in = input(name);
    ModComplex cg = build_C_hat_G(in.group);
    ModComplex cx = build_C_hat_X(in.group, in.stabilizer);
    for (int n = 0; n <= 3; ++n)
      CHECK(hyper(cx, n) == hyper(cg, n));
  }
}

TEST_CASE("center-based complex agrees with the torus-based one") {
  for (const char* name : {"sl2", "sl2_mod_torus", "norm_one_torus:z2",
                           "norm_one_torus:klein4"}) {
    HomSpaceInput in = input(name);
    REQUIRE(in.stabilizer.center.has_value());
    const CenterData& z = *in.stabilizer.center;
    ModComplex cbar =
        build_C_bar_X(in.group.G_hat, z.Z_Hred_hat, z.Z_Hsc_hat, z.g_to_z,
                      z.z_res, in.group.pic_Gbar_zero);
    ModComplex chat = build_C_hat_X(in.group, in.stabilizer);
    for (int n = 0; n <= 3; ++n)
      CHECK(hyper(cbar, n) == hyper(chat, n));
  }
}

TEST_CASE("center-based complex refuses a nonvanishing Picard assertion") {
  HomSpaceInput in = input("pgl2");
  const CenterData& z = *in.stabilizer.center;
  check_error_kind(
      [&] {
        build_C_bar_X(in.group.G_hat, z.Z_Hred_hat, z.Z_Hsc_hat, z.g_to_z,
                      z.z_res, in.group.pic_Gbar_zero);
      },
      "inconsistent-flags");
}

TEST_CASE("quasi-isomorphic presentation pairs have equal hypercohomology") {
  for (const char* name : {"pgl2_center_vs_torus", "sl2_center_vs_torus"}) {
    CorpusEntry entry = corpus(name);
    REQUIRE(entry.pair.has_value());
    for (int n = 0; n <= 3; ++n)
      CHECK(hyper(entry.pair->center_based, n) ==
            hyper(entry.pair->torus_based, n));
  }
}

TEST_CASE("cone of the restriction map reproduces the shifted space complex") {
  for (const char* name : {"sl2_mod_torus", "pgl2", "norm_one_torus:z3"}) {
    HomSpaceInput in = input(name);
    ChainMap res = restriction_chain_map(in.group, in.stabilizer);
    ConeTriangle tri = cone(res);
    ModComplex shifted = shift(build_C_hat_X(in.group, in.stabilizer), 1);
    for (int n = -1; n <= 2; ++n)
      CHECK(hyper(tri.cone, n) == hyper(shifted, n));
    ExactnessReport les = check_cone_les(res, 0, 2);
    CHECK(les.all_exact);
  }
}

TEST_CASE("ns sequence report lists the computable terms") {
  HomSpaceInput in = input("pgl2");
  FiniteGroup gamma = in.group.gamma;

  NsData none{trivial_module(gamma, AbStructure{})};
  NsSequenceReport rep = ns_sequence_report(in.group, in.stabilizer, none);
  CHECK(rep.ns_invariants == kZero);
  CHECK(rep.h1_NS == kZero);
  CHECK(rep.h1_C == kZ2);
  CHECK(rep.h2_C == kZ2);
  CHECK(rep.sequence ==
        "0 -> H^1(k, C_hat_X) -> Pic(X) -> NS^Gamma -> H^2(k, C_hat_X) "
        "-> Br_a(X,G) -> H^1(k, NS)");

  NsData line{trivial_module(gamma, AbStructure{1, {}})};
  rep = ns_sequence_report(in.group, in.stabilizer, line);
  CHECK(rep.ns_invariants == kZ);
  CHECK(rep.h1_NS == kZero);

  NsData sign{make_module(gamma, FpAbGroup::free_group(1),
                          {IntMatrix::identity(1),
                           IntMatrix::from_rows({{-1}})})};
  rep = ns_sequence_report(in.group, in.stabilizer, sign);
  CHECK(rep.ns_invariants == kZero);
  CHECK(rep.h1_NS == kZ2);
}

TEST_CASE("group data rejects a character inclusion with kernel") {
  FiniteGroup gamma = FiniteGroup::trivial();
  GammaModule line = trivial_module(gamma, AbStructure{1, {}});
  check_error_kind(
      [&] {
        make_linear_group_data(gamma, line, line, identity_gamma_hom(line),
                               line, zero_gamma_hom(line, line), true);
      },
      "not-injective");
}

TEST_CASE("group data rejects maps between the wrong modules") {
  FiniteGroup gamma = FiniteGroup::cyclic(2);
  GammaModule line = trivial_module(gamma, AbStructure{1, {}});
  GammaModule plane = trivial_module(gamma, AbStructure{2, {}});
  GammaModule nil = trivial_module(gamma, AbStructure{});
  check_error_kind(
      [&] {
        make_linear_group_data(gamma, line, plane, identity_gamma_hom(line),
                               nil, zero_gamma_hom(nil, line), true);
      },
      "dimension-mismatch");
  check_error_kind(
      [&] {
        make_linear_group_data(FiniteGroup::cyclic(3), line, line,
                               identity_gamma_hom(line), nil,
                               zero_gamma_hom(nil, line), true);
      },
      "gamma-mismatch");
}

TEST_CASE("space complex rejects disagreeing restriction routes") {
  FiniteGroup gamma = FiniteGroup::trivial();
  GammaModule line = trivial_module(gamma, AbStructure{1, {}});
  GammaModule nil = trivial_module(gamma, AbStructure{});
  LinearGroupData g = make_linear_group_data(
      gamma, line, line, identity_gamma_hom(line), nil,
      zero_gamma_hom(nil, line), true);
  GammaHom doubling =
      make_gamma_hom(line, line, IntMatrix::from_rows({{2}}));
  StabilizerData h = make_stabilizer_data(line, line, identity_gamma_hom(line),
                                          identity_gamma_hom(line), doubling,
                                          std::nullopt);
  check_error_kind([&] { build_C_hat_X(g, h); }, "non-commuting-square");
  check_error_kind([&] { restriction_chain_map(g, h); },
                   "non-commuting-square");
}

TEST_CASE("corpus covers the documented names and rejects others") {
  for (const std::string& name : corpus_names()) {
    CorpusEntry entry = corpus(name);
    CHECK(entry.input.has_value() != entry.pair.has_value());
  }
  check_error_kind([] { corpus("so5"); }, "unknown-name");
  check_error_kind([] { corpus("norm_one_torus:z7"); }, "unknown-name");
}

TEST_CASE("norm-one torus entries take the regular quotient as characters") {
  HomSpaceInput in = input("norm_one_torus:klein4");
  CHECK(in.group.T_G_hat == norm_one_torus_module(FiniteGroup::klein_four()));
  CHECK(in.group.G_hat == in.group.T_G_hat);
  CHECK(structure(invariants(in.group.T_G_hat).group) == kZero);
}
