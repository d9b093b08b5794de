#include "json_codec.hpp"

#include <algorithm>
#include <cstdint>
#include <map>

#include "galbrauer/errors.hpp"

namespace galbrauer::codec {

namespace {

[[noreturn]] void bad_schema(const std::string& path, const std::string& why) {
  throw Error("schema-violation", path + ": " + why);
}

/// Keys of term/differential maps are decimal degree strings.
int parse_degree_key(const std::string& key, const std::string& path) {
  if (key.empty() || (key[0] == '-' && key.size() == 1))
    bad_schema(path, "key \"" + key + "\" is not an integer degree");
  for (std::size_t i = (key[0] == '-' ? 1 : 0); i < key.size(); ++i)
    if (key[i] < '0' || key[i] > '9')
      bad_schema(path, "key \"" + key + "\" is not an integer degree");
  try {
    return std::stoi(key);
  } catch (const std::exception&) {
    bad_schema(path, "degree key \"" + key + "\" is out of range");
  }
}

} // namespace

Json parse_text(const std::string& text) {
  Json parsed = Json::parse(text, nullptr, false);
  if (parsed.is_discarded())
    throw Error("malformed-json", "input is not valid JSON");
  return parsed;
}

void check_keys(const Json& obj, const std::string& path,
                const std::vector<std::string>& required,
                const std::vector<std::string>& optional, ParseContext& ctx) {
  if (!obj.is_object())
    bad_schema(path, "expected an object");
  for (const std::string& key : required)
    if (!obj.contains(key))
      bad_schema(path, "missing required field \"" + key + "\"");
  for (const auto& [key, value] : obj.items()) {
    if (std::find(required.begin(), required.end(), key) != required.end())
      continue;
    if (std::find(optional.begin(), optional.end(), key) != optional.end())
      continue;
    if (ctx.lenient)
      ctx.warnings.push_back(path + "." + key + ": unknown field ignored");
    else
      bad_schema(path + "." + key, "unknown field");
  }
}

Int parse_int(const Json& v, const std::string& path) {
  if (v.is_number_integer())
    return Int(static_cast<long>(v.get<std::int64_t>()));
  if (v.is_number_unsigned())
    return Int(static_cast<unsigned long>(v.get<std::uint64_t>()));
  if (v.is_string()) {
    const std::string s = v.get<std::string>();
    if (s.empty() || (s[0] == '-' && s.size() == 1))
      bad_schema(path, "\"" + s + "\" is not a decimal integer");
    for (std::size_t i = (s[0] == '-' ? 1 : 0); i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9')
        bad_schema(path, "\"" + s + "\" is not a decimal integer");
    return Int(s);
  }
  bad_schema(path, "expected an integer (number or decimal string)");
}

std::size_t parse_index(const Json& v, const std::string& path) {
  if (!v.is_number_unsigned() || v.get<std::uint64_t>() > (1u << 30))
    bad_schema(path, "expected a small non-negative integer");
  return static_cast<std::size_t>(v.get<std::uint64_t>());
}

IntMatrix parse_matrix(const Json& v, const std::string& path) {
  if (!v.is_array())
    bad_schema(path, "expected a row-major array of rows");
  std::size_t rows = v.size();
  std::size_t cols = 0;
  IntMatrix out;
  for (std::size_t i = 0; i < rows; ++i) {
    const Json& row = v[i];
    std::string row_path = path + "[" + std::to_string(i) + "]";
    if (!row.is_array())
      bad_schema(row_path, "expected an array of entries");
    if (i == 0) {
      cols = row.size();
      out = IntMatrix(rows, cols);
    } else if (row.size() != cols) {
      bad_schema(row_path, "ragged matrix: expected " + std::to_string(cols) +
                               " entries");
    }
    for (std::size_t j = 0; j < cols; ++j)
      out(i, j) = parse_int(row[j], row_path + "[" + std::to_string(j) + "]");
  }
  return out;
}

IntMatrix parse_matrix_shaped(const Json& v, const std::string& path,
                              std::size_t rows, std::size_t cols) {
  IntMatrix m = parse_matrix(v, path);
  if (m.rows() == 0 && m.cols() == 0 && (rows == 0 || cols == 0))
    return IntMatrix(rows, cols);
  if (m.rows() != rows || m.cols() != cols)
    bad_schema(path, "expected a " + std::to_string(rows) + " x " +
                         std::to_string(cols) + " matrix");
  return m;
}

FiniteGroup parse_group(const Json& v, const std::string& path,
                        ParseContext& ctx) {
  if (!v.is_object() || !v.contains("kind"))
    bad_schema(path, "expected a group object with a \"kind\" field");
  const Json& kind_value = v.at("kind");
  if (!kind_value.is_string())
    bad_schema(path + ".kind", "expected a string");
  const std::string kind = kind_value.get<std::string>();
  if (kind == "trivial") {
    check_keys(v, path, {"kind"}, {}, ctx);
    return FiniteGroup::trivial();
  }
  if (kind == "cyclic") {
    check_keys(v, path, {"kind", "order"}, {}, ctx);
    std::size_t n = parse_index(v["order"], path + ".order");
    if (n == 0)
      bad_schema(path + ".order", "order must be positive");
    return FiniteGroup::cyclic(n, ctx.order_cap);
  }
  if (kind == "klein_four") {
    check_keys(v, path, {"kind"}, {}, ctx);
    return FiniteGroup::klein_four();
  }
  if (kind == "table") {
    check_keys(v, path, {"kind", "table"}, {}, ctx);
    const Json& t = v["table"];
    if (!t.is_array())
      bad_schema(path + ".table", "expected an array of rows");
    std::vector<std::vector<std::size_t>> table;
    for (std::size_t i = 0; i < t.size(); ++i) {
      std::string row_path = path + ".table[" + std::to_string(i) + "]";
      if (!t[i].is_array())
        bad_schema(row_path, "expected an array");
      std::vector<std::size_t> row;
      for (std::size_t j = 0; j < t[i].size(); ++j)
        row.push_back(
            parse_index(t[i][j], row_path + "[" + std::to_string(j) + "]"));
      table.push_back(std::move(row));
    }
    return FiniteGroup::from_table(std::move(table), ctx.order_cap);
  }
  if (kind == "permutations") {
    check_keys(v, path, {"kind", "generators", "points"}, {}, ctx);
    std::size_t points = parse_index(v["points"], path + ".points");
    const Json& gens = v["generators"];
    if (!gens.is_array())
      bad_schema(path + ".generators", "expected an array of permutations");
    std::vector<std::vector<std::size_t>> generators;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      std::string gen_path = path + ".generators[" + std::to_string(i) + "]";
      if (!gens[i].is_array())
        bad_schema(gen_path, "expected an array");
      std::vector<std::size_t> perm;
      for (std::size_t j = 0; j < gens[i].size(); ++j)
        perm.push_back(
            parse_index(gens[i][j], gen_path + "[" + std::to_string(j) + "]"));
      generators.push_back(std::move(perm));
    }
    return FiniteGroup::from_permutations(generators, points, ctx.order_cap);
  }
  bad_schema(path + ".kind", "unknown group kind \"" + kind + "\"");
}

GammaModule parse_module(const Json& v, const std::string& path,
                         const FiniteGroup& gamma, ParseContext& ctx) {
  if (!v.is_object())
    bad_schema(path, "expected a module object");
  if (v.contains("builtin")) {
    const Json& b = v["builtin"];
    if (!b.is_string())
      bad_schema(path + ".builtin", "expected a string");
    const std::string builtin = b.get<std::string>();
    if (builtin == "trivial") {
      check_keys(v, path, {"builtin"}, {"free_rank", "torsion"}, ctx);
      AbStructure s;
      if (v.contains("free_rank"))
        s.free_rank = parse_index(v["free_rank"], path + ".free_rank");
      if (v.contains("torsion")) {
        if (!v["torsion"].is_array())
          bad_schema(path + ".torsion", "expected an array");
        for (std::size_t i = 0; i < v["torsion"].size(); ++i)
          s.invariant_factors.push_back(parse_int(
              v["torsion"][i], path + ".torsion[" + std::to_string(i) + "]"));
      }
      return trivial_module(gamma, s);
    }
    if (builtin == "regular") {
      check_keys(v, path, {"builtin"}, {}, ctx);
      return regular_module(gamma);
    }
    if (builtin == "norm_one_torus") {
      check_keys(v, path, {"builtin"}, {}, ctx);
      return norm_one_torus_module(gamma);
    }
    bad_schema(path + ".builtin", "unknown builtin module \"" + builtin + "\"");
  }
  check_keys(v, path, {"generators", "action"}, {"relations"}, ctx);
  std::size_t gens = parse_index(v["generators"], path + ".generators");
  IntMatrix relations(gens, 0);
  if (v.contains("relations")) {
    IntMatrix r = parse_matrix(v["relations"], path + ".relations");
    if (r.rows() == 0 && r.cols() == 0)
      r = IntMatrix(gens, 0);
    if (r.rows() != gens)
      bad_schema(path + ".relations",
                 "expected " + std::to_string(gens) + " rows");
    relations = std::move(r);
  }
  FpAbGroup carrier{gens, std::move(relations)};
  const Json& action = v["action"];
  if (action.is_array()) {
    if (action.size() != gamma.order())
      bad_schema(path + ".action", "expected one matrix per group element (" +
                                       std::to_string(gamma.order()) + ")");
    std::vector<IntMatrix> mats;
    for (std::size_t g = 0; g < action.size(); ++g)
      mats.push_back(parse_matrix_shaped(
          action[g], path + ".action[" + std::to_string(g) + "]", gens, gens));
    return make_module(gamma, std::move(carrier), std::move(mats));
  }
  if (action.is_object()) {
    std::map<std::size_t, IntMatrix> generators;
    for (const auto& [key, value] : action.items()) {
      int elt = parse_degree_key(key, path + ".action");
      if (elt < 0 || static_cast<std::size_t>(elt) >= gamma.order())
        bad_schema(path + ".action", "element index " + key + " out of range");
      generators.emplace(static_cast<std::size_t>(elt),
                         parse_matrix_shaped(value, path + ".action." + key,
                                             gens, gens));
    }
    return make_module_from_generators(gamma, std::move(carrier), generators);
  }
  bad_schema(path + ".action",
             "expected an array (full action) or an object (generators)");
}

ModComplex parse_complex(const Json& v, const std::string& path,
                         const FiniteGroup& gamma, ParseContext& ctx) {
  check_keys(v, path, {"terms"}, {"differentials"}, ctx);
  if (!v["terms"].is_object())
    bad_schema(path + ".terms", "expected an object keyed by degree");
  std::map<int, GammaModule> terms;
  for (const auto& [key, value] : v["terms"].items()) {
    int degree = parse_degree_key(key, path + ".terms");
    terms.emplace(degree,
                  parse_module(value, path + ".terms." + key, gamma, ctx));
  }
  std::map<int, GammaHom> diffs;
  if (v.contains("differentials")) {
    if (!v["differentials"].is_object())
      bad_schema(path + ".differentials", "expected an object keyed by degree");
    for (const auto& [key, value] : v["differentials"].items()) {
      int degree = parse_degree_key(key, path + ".differentials");
      auto src = terms.find(degree);
      auto tgt = terms.find(degree + 1);
      if (src == terms.end() || tgt == terms.end())
        bad_schema(path + ".differentials." + key,
                   "differential without both endpoint terms");
      IntMatrix m = parse_matrix_shaped(value, path + ".differentials." + key,
                                        tgt->second.carrier.gens,
                                        src->second.carrier.gens);
      diffs.emplace(degree,
                    make_gamma_hom(src->second, tgt->second, std::move(m)));
    }
  }
  return ModComplex::make(gamma, terms, diffs);
}

LinearGroupData parse_group_data(const Json& v, const std::string& path,
                                 ParseContext& ctx) {
  check_keys(v, path,
             {"gamma", "T_G_hat", "T_Gsc_hat", "rho_hat", "G_hat",
              "G_hat_incl"},
             {"pic_Gbar_zero"}, ctx);
  FiniteGroup gamma = parse_group(v["gamma"], path + ".gamma", ctx);
  GammaModule tg = parse_module(v["T_G_hat"], path + ".T_G_hat", gamma, ctx);
  GammaModule tsc =
      parse_module(v["T_Gsc_hat"], path + ".T_Gsc_hat", gamma, ctx);
  GammaModule ghat = parse_module(v["G_hat"], path + ".G_hat", gamma, ctx);
  GammaHom rho = make_gamma_hom(
      tg, tsc,
      parse_matrix_shaped(v["rho_hat"], path + ".rho_hat", tsc.carrier.gens,
                          tg.carrier.gens));
  GammaHom incl = make_gamma_hom(
      ghat, tg,
      parse_matrix_shaped(v["G_hat_incl"], path + ".G_hat_incl",
                          tg.carrier.gens, ghat.carrier.gens));
  bool pic = false;
  if (v.contains("pic_Gbar_zero")) {
    if (!v["pic_Gbar_zero"].is_boolean())
      bad_schema(path + ".pic_Gbar_zero", "expected a boolean");
    pic = v["pic_Gbar_zero"].get<bool>();
  }
  return make_linear_group_data(std::move(gamma), std::move(tg),
                                std::move(tsc), std::move(rho),
                                std::move(ghat), std::move(incl), pic);
}

StabilizerData parse_stabilizer_data(const Json& v, const std::string& path,
                                     const LinearGroupData& g,
                                     ParseContext& ctx) {
  check_keys(v, path, {"T_H_hat", "T_Hsc_hat", "j_hat", "res_H", "sc_res"},
             {"center"}, ctx);
  GammaModule th = parse_module(v["T_H_hat"], path + ".T_H_hat", g.gamma, ctx);
  GammaModule thsc =
      parse_module(v["T_Hsc_hat"], path + ".T_Hsc_hat", g.gamma, ctx);
  GammaHom j = make_gamma_hom(
      g.T_G_hat, th,
      parse_matrix_shaped(v["j_hat"], path + ".j_hat", th.carrier.gens,
                          g.T_G_hat.carrier.gens));
  GammaHom res = make_gamma_hom(
      th, thsc,
      parse_matrix_shaped(v["res_H"], path + ".res_H", thsc.carrier.gens,
                          th.carrier.gens));
  GammaHom sc = make_gamma_hom(
      g.T_Gsc_hat, thsc,
      parse_matrix_shaped(v["sc_res"], path + ".sc_res", thsc.carrier.gens,
                          g.T_Gsc_hat.carrier.gens));
  std::optional<CenterData> center;
  if (v.contains("center")) {
    const Json& c = v["center"];
    std::string cpath = path + ".center";
    check_keys(c, cpath, {"Z_Hred_hat", "Z_Hsc_hat", "z_res", "g_to_z"}, {},
               ctx);
    GammaModule zred =
        parse_module(c["Z_Hred_hat"], cpath + ".Z_Hred_hat", g.gamma, ctx);
    GammaModule zsc =
        parse_module(c["Z_Hsc_hat"], cpath + ".Z_Hsc_hat", g.gamma, ctx);
    GammaHom zres = make_gamma_hom(
        zred, zsc,
        parse_matrix_shaped(c["z_res"], cpath + ".z_res", zsc.carrier.gens,
                            zred.carrier.gens));
    GammaHom gz = make_gamma_hom(
        g.G_hat, zred,
        parse_matrix_shaped(c["g_to_z"], cpath + ".g_to_z", zred.carrier.gens,
                            g.G_hat.carrier.gens));
    center = CenterData{std::move(zred), std::move(zsc), std::move(zres),
                        std::move(gz)};
  }
  return make_stabilizer_data(std::move(th), std::move(thsc), std::move(j),
                              std::move(res), std::move(sc),
                              std::move(center));
}

EvalFlags parse_flags(const Json& v, const std::string& path,
                      ParseContext& ctx) {
  EvalFlags flags;
  if (!v.is_array())
    bad_schema(path, "expected an array of flag names");
  for (std::size_t i = 0; i < v.size(); ++i) {
    std::string entry_path = path + "[" + std::to_string(i) + "]";
    if (!v[i].is_string())
      bad_schema(entry_path, "expected a string");
    const std::string name = v[i].get<std::string>();
    if (name == "X_has_rational_point")
      flags.X_has_rational_point = true;
    else if (name == "H3_k_Gm_vanishes")
      flags.H3_k_Gm_vanishes = true;
    else if (name == "Br_k_injects")
      flags.Br_k_injects = true;
    else if (ctx.lenient)
      ctx.warnings.push_back(entry_path + ": unknown flag \"" + name +
                             "\" ignored");
    else
      bad_schema(entry_path, "unknown flag \"" + name + "\"");
  }
  return flags;
}

Json int_to_json(const Int& x) {
  static const Int kBound = Int(1) << 53;
  if (x > -kBound && x < kBound)
    return Json(static_cast<std::int64_t>(x.get_si()));
  return Json(x.get_str());
}

Json matrix_to_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j)
      row.push_back(int_to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json structure_to_json(const AbStructure& s) {
  Json torsion = Json::array();
  for (const Int& d : s.invariant_factors)
    torsion.push_back(int_to_json(d));
  return Json{{"free_rank", s.free_rank}, {"torsion", std::move(torsion)}};
}

Json group_to_json(const FiniteGroup& g) {
  Json table = Json::array();
  for (const auto& row : g.table()) {
    Json jrow = Json::array();
    for (std::size_t x : row)
      jrow.push_back(x);
    table.push_back(std::move(jrow));
  }
  return Json{{"kind", "table"}, {"table", std::move(table)}};
}

Json module_to_json(const GammaModule& m) {
  Json action = Json::array();
  for (const IntMatrix& a : m.action)
    action.push_back(matrix_to_json(a));
  return Json{{"generators", m.carrier.gens},
              {"relations", matrix_to_json(m.carrier.relations)},
              {"action", std::move(action)}};
}

Json complex_to_json(const ModComplex& c) {
  Json terms = Json::object();
  Json diffs = Json::object();
  for (int d = c.lo(); d <= c.hi(); ++d) {
    terms[std::to_string(d)] = module_to_json(c.term(d));
    if (d < c.hi())
      diffs[std::to_string(d)] = matrix_to_json(c.diff(d).matrix);
  }
  return Json{{"terms", std::move(terms)},
              {"differentials", std::move(diffs)}};
}

Json group_data_to_json(const LinearGroupData& g) {
  return Json{{"gamma", group_to_json(g.gamma)},
              {"T_G_hat", module_to_json(g.T_G_hat)},
              {"T_Gsc_hat", module_to_json(g.T_Gsc_hat)},
              {"rho_hat", matrix_to_json(g.rho_hat.matrix)},
              {"G_hat", module_to_json(g.G_hat)},
              {"G_hat_incl", matrix_to_json(g.G_hat_incl.matrix)},
              {"pic_Gbar_zero", g.pic_Gbar_zero}};
}

Json stabilizer_data_to_json(const StabilizerData& h) {
  Json out{{"T_H_hat", module_to_json(h.T_H_hat)},
           {"T_Hsc_hat", module_to_json(h.T_Hsc_hat)},
           {"j_hat", matrix_to_json(h.j_hat.matrix)},
           {"res_H", matrix_to_json(h.res_H.matrix)},
           {"sc_res", matrix_to_json(h.sc_res.matrix)}};
  if (h.center) {
    out["center"] = Json{{"Z_Hred_hat", module_to_json(h.center->Z_Hred_hat)},
                         {"Z_Hsc_hat", module_to_json(h.center->Z_Hsc_hat)},
                         {"z_res", matrix_to_json(h.center->z_res.matrix)},
                         {"g_to_z", matrix_to_json(h.center->g_to_z.matrix)}};
  }
  return out;
}

} // namespace galbrauer::codec
