#include "galbrauer/homspace.hpp"

#include <utility>

#include "galbrauer/errors.hpp"

namespace galbrauer {

namespace {

void check_same_gamma(const FiniteGroup& gamma, const GammaModule& m,
                      const char* what) {
  if (!(m.gamma == gamma))
    throw Error("gamma-mismatch", std::string(what) + " lives over a different group");
}

/// Endpoint check for a hom against the modules it is supposed to connect.
void check_endpoints(const GammaHom& f, const GammaModule& src,
                     const GammaModule& tgt, const char* what) {
  if (!(f.source.gamma == src.gamma) || !(f.target.gamma == tgt.gamma))
    throw Error("gamma-mismatch", std::string(what) + " lives over a different group");
  if (!(f.source == src) || !(f.target == tgt))
    throw Error("dimension-mismatch",
                std::string(what) + " does not connect the stated modules");
}

/// Re-runs the hom validation so hand-assembled structs cannot smuggle in
/// non-equivariant matrices.
void revalidate(const GammaHom& f) {
  make_gamma_hom(f.source, f.target, f.matrix);
}

GammaModule zero_module(const FiniteGroup& gamma) {
  return trivial_module(gamma, AbStructure{});
}

GammaModule free_line(const FiniteGroup& gamma) {
  return trivial_module(gamma, AbStructure{1, {}});
}

GammaHom scaled_line_hom(const GammaModule& src, const GammaModule& tgt,
                         Int factor) {
  IntMatrix m(1, 1);
  m(0, 0) = factor;
  return make_gamma_hom(src, tgt, m);
}

std::string flag_list(const EvalFlags& flags, bool pic_Gbar_zero) {
  std::string out;
  auto add = [&out](const char* name) {
    if (!out.empty())
      out += ", ";
    out += name;
  };
  if (flags.X_has_rational_point)
    add("X_has_rational_point");
  if (flags.H3_k_Gm_vanishes)
    add("H3_k_Gm_vanishes");
  if (flags.Br_k_injects)
    add("Br_k_injects");
  if (pic_Gbar_zero)
    add("pic_Gbar_zero");
  return out;
}

} // namespace

LinearGroupData make_linear_group_data(FiniteGroup gamma, GammaModule T_G_hat,
                                       GammaModule T_Gsc_hat, GammaHom rho_hat,
                                       GammaModule G_hat, GammaHom G_hat_incl,
                                       bool pic_Gbar_zero) {
  check_same_gamma(gamma, T_G_hat, "T_G_hat");
  check_same_gamma(gamma, T_Gsc_hat, "T_Gsc_hat");
  check_same_gamma(gamma, G_hat, "G_hat");
  check_endpoints(rho_hat, T_G_hat, T_Gsc_hat, "rho_hat");
  check_endpoints(G_hat_incl, G_hat, T_G_hat, "G_hat_incl");
  revalidate(rho_hat);
  revalidate(G_hat_incl);
  AbHom incl = make_hom(G_hat.carrier, T_G_hat.carrier, G_hat_incl.matrix);
  if (!structure(kernel(incl).group).is_trivial())
    throw Error("not-injective",
                "the character inclusion G_hat -> T_G_hat has a kernel");
  return LinearGroupData{std::move(gamma),    std::move(T_G_hat),
                         std::move(T_Gsc_hat), std::move(rho_hat),
                         std::move(G_hat),     std::move(G_hat_incl),
                         pic_Gbar_zero};
}

StabilizerData make_stabilizer_data(GammaModule T_H_hat, GammaModule T_Hsc_hat,
                                    GammaHom j_hat, GammaHom res_H,
                                    GammaHom sc_res,
                                    std::optional<CenterData> center) {
  const FiniteGroup& gamma = T_H_hat.gamma;
  check_same_gamma(gamma, T_Hsc_hat, "T_Hsc_hat");
  if (!(j_hat.target == T_H_hat))
    throw Error("dimension-mismatch", "j_hat does not land in T_H_hat");
  check_endpoints(res_H, T_H_hat, T_Hsc_hat, "res_H");
  if (!(sc_res.target == T_Hsc_hat))
    throw Error("dimension-mismatch", "sc_res does not land in T_Hsc_hat");
  check_same_gamma(gamma, j_hat.source, "j_hat source");
  check_same_gamma(gamma, sc_res.source, "sc_res source");
  revalidate(j_hat);
  revalidate(res_H);
  revalidate(sc_res);
  if (center) {
    check_same_gamma(gamma, center->Z_Hred_hat, "Z_Hred_hat");
    check_same_gamma(gamma, center->Z_Hsc_hat, "Z_Hsc_hat");
    check_endpoints(center->z_res, center->Z_Hred_hat, center->Z_Hsc_hat,
                    "z_res");
    if (!(center->g_to_z.target == center->Z_Hred_hat))
      throw Error("dimension-mismatch", "g_to_z does not land in Z_Hred_hat");
    check_same_gamma(gamma, center->g_to_z.source, "g_to_z source");
    revalidate(center->z_res);
    revalidate(center->g_to_z);
  }
  return StabilizerData{std::move(T_H_hat), std::move(T_Hsc_hat),
                        std::move(j_hat),   std::move(res_H),
                        std::move(sc_res),  std::move(center)};
}

StabilizerData trivial_stabilizer(const LinearGroupData& g) {
  GammaModule zero = zero_module(g.gamma);
  CenterData center{zero, zero, zero_gamma_hom(zero, zero),
                    zero_gamma_hom(g.G_hat, zero)};
  return make_stabilizer_data(zero, zero, zero_gamma_hom(g.T_G_hat, zero),
                              zero_gamma_hom(zero, zero),
                              zero_gamma_hom(g.T_Gsc_hat, zero),
                              std::move(center));
}

ModComplex build_C_hat_G(const LinearGroupData& g) {
  return ModComplex::make(g.gamma, {{0, g.T_G_hat}, {1, g.T_Gsc_hat}},
                          {{0, g.rho_hat}});
}

ModComplex build_C_hat_H(const StabilizerData& h) {
  return ModComplex::make(h.T_H_hat.gamma, {{0, h.T_H_hat}, {1, h.T_Hsc_hat}},
                          {{0, h.res_H}});
}

ChainMap restriction_chain_map(const LinearGroupData& g,
                               const StabilizerData& h) {
  check_endpoints(h.j_hat, g.T_G_hat, h.T_H_hat, "j_hat");
  check_endpoints(h.sc_res, g.T_Gsc_hat, h.T_Hsc_hat, "sc_res");
  return ChainMap::make(build_C_hat_G(g), build_C_hat_H(h),
                        {{0, h.j_hat}, {1, h.sc_res}});
}

ModComplex build_C_hat_X(const LinearGroupData& g, const StabilizerData& h) {
  check_endpoints(h.j_hat, g.T_G_hat, h.T_H_hat, "j_hat");
  check_endpoints(h.sc_res, g.T_Gsc_hat, h.T_Hsc_hat, "sc_res");
  GammaModule middle = direct_sum(h.T_H_hat, g.T_Gsc_hat);
  GammaHom d0 = make_gamma_hom(g.T_G_hat, middle,
                               vstack(h.j_hat.matrix, g.rho_hat.matrix));
  GammaHom d1 = make_gamma_hom(middle, h.T_Hsc_hat,
                               hstack(h.res_H.matrix, -h.sc_res.matrix));
  try {
    return ModComplex::make(g.gamma,
                            {{0, g.T_G_hat}, {1, middle}, {2, h.T_Hsc_hat}},
                            {{0, d0}, {1, d1}});
  } catch (const Error& e) {
    if (e.kind() == "composite-nonzero")
      throw Error("non-commuting-square",
                  "restriction along the stabilizer and along the cover "
                  "disagree on T_G_hat");
    throw;
  }
}

ModComplex build_C_bar_X(const GammaModule& G_hat,
                         const GammaModule& Z_Hred_hat,
                         const GammaModule& Z_Hsc_hat, const GammaHom& g_to_z,
                         const GammaHom& z_res, bool pic_Gbar_zero) {
  if (!pic_Gbar_zero)
    throw Error("inconsistent-flags",
                "the center-based complex needs the vanishing Picard "
                "assertion for the group closure");
  check_endpoints(g_to_z, G_hat, Z_Hred_hat, "g_to_z");
  check_endpoints(z_res, Z_Hred_hat, Z_Hsc_hat, "z_res");
  return ModComplex::make(G_hat.gamma,
                          {{0, G_hat}, {1, Z_Hred_hat}, {2, Z_Hsc_hat}},
                          {{0, g_to_z}, {1, z_res}});
}

HomSpaceReport evaluate(const LinearGroupData& g, const StabilizerData& h,
                        const EvalFlags& flags) {
  ModComplex cx = build_C_hat_X(g, h);
  AbStructure h0 = structure(hypercohomology(cx, 0));
  AbStructure h1 = structure(hypercohomology(cx, 1));
  AbStructure h2 = structure(hypercohomology(cx, 2));

  HomSpaceReport report;
  report.complex_used = "C_hat_X";
  std::string assumed = flag_list(flags, g.pic_Gbar_zero);
  if (!assumed.empty())
    report.assumptions.push_back(assumed);

  report.U_X = ReportedValue{false, h0, "unconditional", ""};

  if (flags.X_has_rational_point || flags.Br_k_injects) {
    report.Pic_X = ReportedValue{
        false, h1,
        flags.X_has_rational_point ? "X_has_rational_point" : "Br_k_injects",
        ""};
  } else {
    std::string bound = g.pic_Gbar_zero
                            ? "0 -> Pic(X) -> H^1(k, C_bar_X) -> Br(k)"
                            : "0 -> Pic(X) -> H^1(k, C_hat_X) -> Br(k)";
    report.Pic_X = ReportedValue{true, h1, "none", bound};
    report.caveats.push_back("Pic(X) only bounded by: " + bound);
  }

  if (flags.X_has_rational_point || flags.H3_k_Gm_vanishes) {
    report.Br_a_X_G = ReportedValue{
        false, h2,
        flags.X_has_rational_point ? "X_has_rational_point"
                                   : "H3_k_Gm_vanishes",
        ""};
  } else {
    std::string bound =
        g.pic_Gbar_zero
            ? "0 -> Br_a(X,G) -> H^2(k, C_bar_X) -> N^3(k, G_m)"
            : "Br(k) -> Br_1(X,G) -> H^2(k, C_hat_X) -> N^3(k, G_m)";
    report.Br_a_X_G = ReportedValue{true, h2, "none", bound};
    report.caveats.push_back("Br_a(X,G) only bounded by: " + bound);
  }
  return report;
}

HomSpaceReport evaluate(const LinearGroupData& g, const StabilizerData& h,
                        const EvalFlags& flags,
                        const std::optional<NsData>& ns) {
  HomSpaceReport report = evaluate(g, h, flags);
  if (!ns || structure(ns->NS.carrier).is_trivial())
    return report;
  NsSequenceReport seq = ns_sequence_report(g, h, *ns);
  report.Pic_X = ReportedValue{true, report.Pic_X.value, "none", seq.sequence};
  report.Br_a_X_G =
      ReportedValue{true, report.Br_a_X_G.value, "none", seq.sequence};
  report.caveats.clear();
  report.caveats.push_back(
      "Pic(X) and Br_a(X,G) only bounded by: " + seq.sequence);
  report.caveats.push_back("NS^Gamma = " + seq.ns_invariants.to_text() +
                           ", H^1(k, NS) = " + seq.h1_NS.to_text());
  return report;
}

NsSequenceReport ns_sequence_report(const LinearGroupData& g,
                                    const StabilizerData& h,
                                    const NsData& ns) {
  check_same_gamma(g.gamma, ns.NS, "NS");
  ModComplex cx = build_C_hat_X(g, h);
  NsSequenceReport report;
  report.h1_C = structure(hypercohomology(cx, 1));
  report.ns_invariants = structure(invariants(ns.NS).group);
  report.h2_C = structure(hypercohomology(cx, 2));
  report.h1_NS = cohomology(ns.NS, 1);
  report.sequence =
      "0 -> H^1(k, C_hat_X) -> Pic(X) -> NS^Gamma -> H^2(k, C_hat_X) "
      "-> Br_a(X,G) -> H^1(k, NS)";
  return report;
}

namespace {

HomSpaceInput corpus_sl2() {
  FiniteGroup gamma = FiniteGroup::trivial();
  GammaModule line = free_line(gamma);
  GammaModule nil = zero_module(gamma);
  LinearGroupData g = make_linear_group_data(
      gamma, line, line, identity_gamma_hom(line), nil,
      zero_gamma_hom(nil, line), true);
  StabilizerData h = trivial_stabilizer(g);
  return HomSpaceInput{std::move(g), std::move(h)};
}

HomSpaceInput corpus_pgl2() {
  FiniteGroup gamma = FiniteGroup::cyclic(2);
  GammaModule line = free_line(gamma);
  GammaModule nil = zero_module(gamma);
  LinearGroupData g = make_linear_group_data(
      gamma, line, line, scaled_line_hom(line, line, 2), nil,
      zero_gamma_hom(nil, line), false);
  StabilizerData h = trivial_stabilizer(g);
  return HomSpaceInput{std::move(g), std::move(h)};
}

HomSpaceInput corpus_sl2_mod_torus() {
  FiniteGroup gamma = FiniteGroup::trivial();
  GammaModule line = free_line(gamma);
  GammaModule nil = zero_module(gamma);
  LinearGroupData g = make_linear_group_data(
      gamma, line, line, identity_gamma_hom(line), nil,
      zero_gamma_hom(nil, line), true);
  CenterData center{line, nil, zero_gamma_hom(line, nil),
                    zero_gamma_hom(nil, line)};
  StabilizerData h = make_stabilizer_data(
      line, nil, identity_gamma_hom(line), zero_gamma_hom(line, nil),
      zero_gamma_hom(line, nil), std::move(center));
  return HomSpaceInput{std::move(g), std::move(h)};
}

HomSpaceInput corpus_norm_one_torus(const FiniteGroup& gamma) {
  GammaModule torus = norm_one_torus_module(gamma);
  GammaModule nil = zero_module(gamma);
  LinearGroupData g = make_linear_group_data(
      gamma, torus, nil, zero_gamma_hom(torus, nil), torus,
      identity_gamma_hom(torus), true);
  StabilizerData h = trivial_stabilizer(g);
  return HomSpaceInput{std::move(g), std::move(h)};
}

/// Character groups of the centers of PGL2 and SL2 against their maximal
/// torus counterparts, in the degrees they occupy inside the three-term
/// complex.
QuasiIsoPair corpus_pgl2_center_vs_torus() {
  FiniteGroup gamma = FiniteGroup::cyclic(2);
  GammaModule nil = zero_module(gamma);
  GammaModule mu2 = trivial_module(gamma, AbStructure{0, {2}});
  GammaModule line = free_line(gamma);
  ModComplex center = ModComplex::make(gamma, {{1, nil}, {2, mu2}},
                                       {{1, zero_gamma_hom(nil, mu2)}});
  ModComplex torus = ModComplex::make(gamma, {{1, line}, {2, line}},
                                      {{1, scaled_line_hom(line, line, 2)}});
  return QuasiIsoPair{std::move(center), std::move(torus)};
}

QuasiIsoPair corpus_sl2_center_vs_torus() {
  FiniteGroup gamma = FiniteGroup::cyclic(2);
  GammaModule mu2 = trivial_module(gamma, AbStructure{0, {2}});
  GammaModule line = free_line(gamma);
  ModComplex center = ModComplex::make(gamma, {{1, mu2}, {2, mu2}},
                                       {{1, identity_gamma_hom(mu2)}});
  ModComplex torus = ModComplex::make(gamma, {{1, line}, {2, line}},
                                      {{1, identity_gamma_hom(line)}});
  return QuasiIsoPair{std::move(center), std::move(torus)};
}

FiniteGroup corpus_gamma(const std::string& tag) {
  if (tag == "z2")
    return FiniteGroup::cyclic(2);
  if (tag == "z3")
    return FiniteGroup::cyclic(3);
  if (tag == "z4")
    return FiniteGroup::cyclic(4);
  if (tag == "z5")
    return FiniteGroup::cyclic(5);
  if (tag == "z6")
    return FiniteGroup::cyclic(6);
  if (tag == "klein4")
    return FiniteGroup::klein_four();
  if (tag == "s3")
    return FiniteGroup::from_permutations({{1, 0, 2}, {1, 2, 0}}, 3);
  throw Error("unknown-name", "no norm-one torus over \"" + tag + "\"");
}

} // namespace

CorpusEntry corpus(const std::string& name) {
  CorpusEntry entry;
  entry.name = name;
  if (name == "sl2") {
    entry.input = corpus_sl2();
  } else if (name == "pgl2") {
    entry.input = corpus_pgl2();
  } else if (name == "sl2_mod_torus") {
    entry.input = corpus_sl2_mod_torus();
  } else if (name.rfind("norm_one_torus:", 0) == 0) {
    entry.input = corpus_norm_one_torus(
        corpus_gamma(name.substr(std::string("norm_one_torus:").size())));
  } else if (name == "pgl2_center_vs_torus") {
    entry.pair = corpus_pgl2_center_vs_torus();
  } else if (name == "sl2_center_vs_torus") {
    entry.pair = corpus_sl2_center_vs_torus();
  } else {
    throw Error("unknown-name", "no corpus entry named \"" + name + "\"");
  }
  return entry;
}

std::vector<std::string> corpus_names() {
  return {"sl2",
          "pgl2",
          "sl2_mod_torus",
          "norm_one_torus:z2",
          "norm_one_torus:z3",
          "norm_one_torus:z4",
          "norm_one_torus:z5",
          "norm_one_torus:z6",
          "norm_one_torus:klein4",
          "norm_one_torus:s3",
          "pgl2_center_vs_torus",
          "sl2_center_vs_torus"};
}

} // namespace galbrauer
