#pragma once

/// Evaluation of unit, Picard and Brauer groups of a homogeneous space
/// X = G/H from combinatorial input: character lattices with their finite
/// Galois-quotient action and the restriction maps between them.
///
/// Two complexes drive everything.  The torus-based complex
///   C_hat_X = [T_G_hat -> T_H_hat + T_Gsc_hat -> T_Hsc_hat]   (degrees 0..2)
/// is always available for linear G; the center-based complex
///   C_bar_X = [G_hat -> Z_Hred_hat -> Z_Hsc_hat]              (degrees 0..2)
/// additionally requires Pic of G over the closure to vanish.

#include <optional>
#include <string>
#include <vector>

#include "galbrauer/complexes.hpp"

namespace galbrauer {

struct LinearGroupData {
  FiniteGroup gamma;
  GammaModule T_G_hat;   // character lattice of a maximal torus of G^red
  GammaModule T_Gsc_hat; // same for the simply connected cover of G^ss
  GammaHom rho_hat;      // restriction T_G_hat -> T_Gsc_hat
  GammaModule G_hat;     // character group of G
  GammaHom G_hat_incl;   // injection G_hat -> T_G_hat
  bool pic_Gbar_zero = false;
};

/// Validates endpoints, matching group and injectivity of the character
/// inclusion; throws "gamma-mismatch", "dimension-mismatch" or
/// "not-injective".
LinearGroupData make_linear_group_data(FiniteGroup gamma, GammaModule T_G_hat,
                                       GammaModule T_Gsc_hat, GammaHom rho_hat,
                                       GammaModule G_hat, GammaHom G_hat_incl,
                                       bool pic_Gbar_zero);

/// Character groups of the centers of H^red and H^sc, for the center-based
/// complex.
struct CenterData {
  GammaModule Z_Hred_hat;
  GammaModule Z_Hsc_hat;
  GammaHom z_res;  // Z_Hred_hat -> Z_Hsc_hat
  GammaHom g_to_z; // G_hat -> Z_Hred_hat
};

struct StabilizerData {
  GammaModule T_H_hat;
  GammaModule T_Hsc_hat;
  GammaHom j_hat;  // T_G_hat -> T_H_hat, dual of a Levi-induced inclusion
  GammaHom res_H;  // T_H_hat -> T_Hsc_hat
  GammaHom sc_res; // T_Gsc_hat -> T_Hsc_hat
  std::optional<CenterData> center;
};

/// Checks endpoint consistency of the maps against the stated modules.
StabilizerData make_stabilizer_data(GammaModule T_H_hat, GammaModule T_Hsc_hat,
                                    GammaHom j_hat, GammaHom res_H,
                                    GammaHom sc_res,
                                    std::optional<CenterData> center);

/// Trivial stabilizer (X = G), with center data so both complexes exist.
StabilizerData trivial_stabilizer(const LinearGroupData& g);

/// [T_G_hat -> T_Gsc_hat] in degrees 0, 1.
ModComplex build_C_hat_G(const LinearGroupData& g);

/// [T_H_hat -> T_Hsc_hat] in degrees 0, 1.
ModComplex build_C_hat_H(const StabilizerData& h);

/// The character-restriction chain map C_hat_G -> C_hat_H with components
/// j_hat and sc_res; throws "non-commuting-square" when the square fails.
ChainMap restriction_chain_map(const LinearGroupData& g,
                               const StabilizerData& h);

/// The three-term complex in degrees 0..2 with d0 = (j_hat, rho_hat) and
/// d1 = res_H - sc_res on the respective blocks.  Throws
/// "non-commuting-square" when the two restriction routes disagree.
ModComplex build_C_hat_X(const LinearGroupData& g, const StabilizerData& h);

/// The center-based complex in degrees 0..2; requires the Pic assertion.
/// Throws "inconsistent-flags" without it, "composite-nonzero" when the
/// maps do not compose to zero.
ModComplex build_C_bar_X(const GammaModule& G_hat,
                         const GammaModule& Z_Hred_hat,
                         const GammaModule& Z_Hsc_hat, const GammaHom& g_to_z,
                         const GammaHom& z_res, bool pic_Gbar_zero);

/// Assertions about the base field and the space that the theorems need;
/// they concern data outside the combinatorial input and are never
/// computed, only recorded.
struct EvalFlags {
  bool X_has_rational_point = false;
  bool H3_k_Gm_vanishes = false;
  bool Br_k_injects = false;
};

/// A reported group: either an unconditional value with the assumption
/// that justified it, or a conditional bound extracted from an exact
/// sequence whose middle term is still computed.
struct ReportedValue {
  bool conditional = false;
  AbStructure value;
  std::string justified_by; // flag name, or "unconditional"
  std::string bound;        // the bounding sequence when conditional
};

struct HomSpaceReport {
  ReportedValue U_X;
  ReportedValue Pic_X;
  ReportedValue Br_a_X_G;
  std::string complex_used;
  std::vector<std::string> assumptions;
  std::vector<std::string> caveats;
};

/// Neron-Severi lattice of the abelianized group closure, for the
/// non-linear bookkeeping report.
struct NsData {
  GammaModule NS;
};

/// U(X) from H^0, Pic(X) from H^1 and Br_a(X,G) from H^2 of the total
/// complex of C_hat_X.  U is unconditional; Pic needs a rational point or
/// an injective Br(k) -> Br(X); Br_a needs a rational point or a vanishing
/// kernel of H^3(k, G_m) -> H^3(X, G_m).  Missing flags turn the field
/// into a conditional bound.
HomSpaceReport evaluate(const LinearGroupData& g, const StabilizerData& h,
                        const EvalFlags& flags);

/// Same report for a group with abelian part: a nonzero Neron-Severi
/// lattice wedges Pic and Br_a between the terms of a six-term sequence,
/// so both become conditional no matter which flags are set.
HomSpaceReport evaluate(const LinearGroupData& g, const StabilizerData& h,
                        const EvalFlags& flags,
                        const std::optional<NsData>& ns);

/// The computable terms of
///   0 -> H^1(k, C_hat_X) -> Pic(X) -> NS^Gamma
///     -> H^2(k, C_hat_X) -> Br_a(X,G) -> H^1(Gamma, NS);
/// Pic(X) and Br_a(X,G) stay symbolic.
struct NsSequenceReport {
  AbStructure h1_C;
  AbStructure ns_invariants;
  AbStructure h2_C;
  AbStructure h1_NS;
  std::string sequence;
};

NsSequenceReport ns_sequence_report(const LinearGroupData& g,
                                    const StabilizerData& h, const NsData& ns);

/// Prepared input bundles under stable names.  Evaluable entries carry
/// group and stabilizer data; comparison entries carry the two
/// presentations of the same complex.  Throws "unknown-name".
struct HomSpaceInput {
  LinearGroupData group;
  StabilizerData stabilizer;
};
struct QuasiIsoPair {
  ModComplex center_based;
  ModComplex torus_based;
};
struct CorpusEntry {
  std::string name;
  std::optional<HomSpaceInput> input;
  std::optional<QuasiIsoPair> pair;
};

CorpusEntry corpus(const std::string& name);
std::vector<std::string> corpus_names();

} // namespace galbrauer
