#include "galbrauer/cli.hpp"

#include <optional>
#include <sstream>

#include "galbrauer/errors.hpp"
#include "galbrauer/homspace.hpp"
#include "json_codec.hpp"
#include "selftest.hpp"

namespace galbrauer {

namespace {

using codec::Json;
using codec::ParseContext;

struct Emitter {
  bool json;
  Json doc = Json::object();
  std::ostringstream text;

  explicit Emitter(const char* task, bool as_json) : json(as_json) {
    doc["version"] = "1";
    doc["task"] = task;
  }

  std::string finish() {
    if (json)
      return doc.dump() + "\n";
    return text.str();
  }
};

int checked_degree(const Json& v, const std::string& path,
                   const RunOptions& options, bool allow_negative) {
  if (!v.is_number_integer() && !v.is_number_unsigned())
    throw Error("schema-violation", path + ": expected an integer");
  auto degree = v.get<std::int64_t>();
  if (degree < 0 && !allow_negative)
    throw Error("schema-violation", path + ": expected a degree >= 0");
  if (degree > options.degree_max)
    throw Error("degree-cap-exceeded",
                path + ": degree " + std::to_string(degree) +
                    " exceeds --degree-max " +
                    std::to_string(options.degree_max));
  return static_cast<int>(degree);
}

Json reported_value_to_json(const ReportedValue& v) {
  return Json{{"conditional", v.conditional},
              {"value", codec::structure_to_json(v.value)},
              {"justified_by", v.justified_by},
              {"bound", v.bound}};
}

void render_reported(Emitter& out, const char* label,
                     const ReportedValue& v) {
  if (v.conditional)
    out.text << label << " = conditional (middle term " << v.value.to_text()
             << "); bound: " << v.bound << "\n";
  else
    out.text << label << " = " << v.value.to_text() << "\n";
}

void run_snf(const Json& payload, ParseContext& ctx, Emitter& out) {
  codec::check_keys(payload, "$.payload", {"matrix"}, {}, ctx);
  IntMatrix a = codec::parse_matrix(payload["matrix"], "$.payload.matrix");
  SnfDecomposition dec = snf(a);
  std::size_t n = std::min(dec.D.rows(), dec.D.cols());
  std::vector<Int> diagonal;
  std::size_t rank = 0;
  for (std::size_t i = 0; i < n; ++i) {
    diagonal.push_back(dec.D(i, i));
    if (dec.D(i, i) != 0)
      ++rank;
  }
  if (out.json) {
    Json diag = Json::array();
    for (const Int& d : diagonal)
      diag.push_back(codec::int_to_json(d));
    out.doc["diagonal"] = std::move(diag);
    out.doc["rank"] = rank;
    out.doc["U"] = codec::matrix_to_json(dec.U);
    out.doc["D"] = codec::matrix_to_json(dec.D);
    out.doc["V"] = codec::matrix_to_json(dec.V);
  } else {
    out.text << "diagonal:";
    for (const Int& d : diagonal)
      out.text << " " << d.get_str();
    out.text << "\n"
             << "rank: " << rank << "\n";
  }
}

void run_groupcoh(const Json& payload, const RunOptions& options,
                  ParseContext& ctx, Emitter& out) {
  codec::check_keys(payload, "$.payload", {"group", "module"}, {"degree"},
                    ctx);
  FiniteGroup gamma = codec::parse_group(payload["group"], "$.payload.group",
                                         ctx);
  GammaModule m =
      codec::parse_module(payload["module"], "$.payload.module", gamma, ctx);
  int first = 0;
  int last = options.degree_max;
  if (payload.contains("degree"))
    first = last = checked_degree(payload["degree"], "$.payload.degree",
                                  options, false);
  Json rows = Json::array();
  for (int n = first; n <= last; ++n) {
    AbStructure s = cohomology(m, static_cast<std::size_t>(n));
    if (out.json)
      rows.push_back(Json{{"degree", n},
                          {"structure", codec::structure_to_json(s)}});
    else
      out.text << "H^" << n << " = " << s.to_text() << "\n";
  }
  if (out.json)
    out.doc["cohomology"] = std::move(rows);
}

void run_hypercoh(const Json& payload, const RunOptions& options,
                  ParseContext& ctx, Emitter& out) {
  codec::check_keys(payload, "$.payload", {"group", "complex"}, {"degree"},
                    ctx);
  FiniteGroup gamma = codec::parse_group(payload["group"], "$.payload.group",
                                         ctx);
  ModComplex c = codec::parse_complex(payload["complex"], "$.payload.complex",
                                      gamma, ctx);
  int first = std::min(0, c.lo());
  int last = options.degree_max;
  if (payload.contains("degree"))
    first = last = checked_degree(payload["degree"], "$.payload.degree",
                                  options, true);
  Json rows = Json::array();
  for (int n = first; n <= last; ++n) {
    AbStructure s = structure(hypercohomology(c, n));
    if (out.json)
      rows.push_back(Json{{"degree", n},
                          {"structure", codec::structure_to_json(s)}});
    else
      out.text << "H^" << n << " = " << s.to_text() << "\n";
  }
  if (out.json)
    out.doc["hypercohomology"] = std::move(rows);
}

/// Comparison half of the brauer task: hypercohomology of the two
/// presentations side by side.
void run_comparison(const QuasiIsoPair& pair, const RunOptions& options,
                    Emitter& out) {
  Json rows = Json::array();
  bool agree = true;
  if (!out.json)
    out.text << "comparison: center-based vs torus-based\n";
  for (int n = 0; n <= options.degree_max; ++n) {
    AbStructure center = structure(hypercohomology(pair.center_based, n));
    AbStructure torus = structure(hypercohomology(pair.torus_based, n));
    bool equal = center == torus;
    agree = agree && equal;
    if (out.json)
      rows.push_back(Json{{"degree", n},
                          {"center_based", codec::structure_to_json(center)},
                          {"torus_based", codec::structure_to_json(torus)},
                          {"equal", equal}});
    else
      out.text << "H^" << n << ": " << center.to_text() << " vs "
               << torus.to_text() << "\n";
  }
  if (out.json) {
    out.doc["comparison"] = std::move(rows);
    out.doc["agree"] = agree;
  } else {
    out.text << "agreement: " << (agree ? "yes" : "no") << "\n";
  }
}

/// Evaluation half of the brauer task; returns the process exit code.
int run_evaluation(const LinearGroupData& g, const StabilizerData& h,
                   const EvalFlags& flags, const std::optional<NsData>& ns,
                   bool require_unconditional, Emitter& out) {
  HomSpaceReport report = evaluate(g, h, flags, ns);
  bool refused = require_unconditional &&
                 (report.Pic_X.conditional || report.Br_a_X_G.conditional);
  if (refused) {
    if (out.json) {
      out.doc["refused"] = true;
      Json caveats = Json::array();
      for (const std::string& c : report.caveats)
        caveats.push_back(c);
      out.doc["caveats"] = std::move(caveats);
    } else {
      out.text << "refused: no recorded assumption justifies an "
                  "unconditional value\n";
      for (const std::string& c : report.caveats)
        out.text << c << "\n";
    }
    return 2;
  }
  if (out.json) {
    out.doc["complex_used"] = report.complex_used;
    Json assumptions = Json::array();
    for (const std::string& a : report.assumptions)
      assumptions.push_back(a);
    out.doc["assumptions"] = std::move(assumptions);
    out.doc["U_X"] = reported_value_to_json(report.U_X);
    out.doc["Pic_X"] = reported_value_to_json(report.Pic_X);
    out.doc["Br_a_X_G"] = reported_value_to_json(report.Br_a_X_G);
    Json caveats = Json::array();
    for (const std::string& c : report.caveats)
      caveats.push_back(c);
    out.doc["caveats"] = std::move(caveats);
  } else {
    out.text << "complex: " << report.complex_used << "\n";
    out.text << "assumptions:";
    if (report.assumptions.empty())
      out.text << " (none)";
    for (const std::string& a : report.assumptions)
      out.text << " " << a;
    out.text << "\n";
    render_reported(out, "U(X)", report.U_X);
    render_reported(out, "Pic(X)", report.Pic_X);
    render_reported(out, "Br_a(X,G)", report.Br_a_X_G);
    for (const std::string& c : report.caveats)
      out.text << "caveat: " << c << "\n";
  }
  if (ns) {
    NsSequenceReport seq = ns_sequence_report(g, h, *ns);
    if (out.json) {
      out.doc["ns_sequence"] =
          Json{{"h1_C", codec::structure_to_json(seq.h1_C)},
               {"ns_invariants", codec::structure_to_json(seq.ns_invariants)},
               {"h2_C", codec::structure_to_json(seq.h2_C)},
               {"h1_NS", codec::structure_to_json(seq.h1_NS)},
               {"sequence", seq.sequence}};
    } else {
      out.text << "H^1(k, C_hat_X) = " << seq.h1_C.to_text() << "\n"
               << "NS^Gamma = " << seq.ns_invariants.to_text() << "\n"
               << "H^2(k, C_hat_X) = " << seq.h2_C.to_text() << "\n"
               << "H^1(k, NS) = " << seq.h1_NS.to_text() << "\n"
               << "sequence: " << seq.sequence << "\n";
    }
  }
  return 0;
}

int run_brauer(const Json& payload, const RunOptions& options,
               ParseContext& ctx, Emitter& out) {
  bool require_unconditional = false;
  auto parse_require = [&](const std::string& path) {
    if (!payload.contains("require_unconditional"))
      return;
    if (!payload["require_unconditional"].is_boolean())
      throw Error("schema-violation", path + ": expected a boolean");
    require_unconditional = payload["require_unconditional"].get<bool>();
  };

  if (payload.contains("corpus")) {
    codec::check_keys(payload, "$.payload", {"corpus"},
                      {"flags", "require_unconditional", "ns"}, ctx);
    if (!payload["corpus"].is_string())
      throw Error("schema-violation", "$.payload.corpus: expected a string");
    CorpusEntry entry = corpus(payload["corpus"].get<std::string>());
    if (entry.pair) {
      for (const char* key : {"flags", "require_unconditional", "ns"}) {
        if (!payload.contains(key))
          continue;
        std::string path = std::string("$.payload.") + key;
        if (ctx.lenient)
          ctx.warnings.push_back(path +
                                 ": ignored for a comparison corpus entry");
        else
          throw Error("schema-violation",
                      path + ": not accepted for a comparison corpus entry");
      }
      run_comparison(*entry.pair, options, out);
      return 0;
    }
    EvalFlags flags;
    if (payload.contains("flags"))
      flags = codec::parse_flags(payload["flags"], "$.payload.flags", ctx);
    parse_require("$.payload.require_unconditional");
    std::optional<NsData> ns;
    if (payload.contains("ns"))
      ns = NsData{codec::parse_module(payload["ns"], "$.payload.ns",
                                      entry.input->group.gamma, ctx)};
    return run_evaluation(entry.input->group, entry.input->stabilizer, flags,
                          ns, require_unconditional, out);
  }

  if (payload.contains("group_data")) {
    codec::check_keys(payload, "$.payload", {"group_data", "stabilizer_data"},
                      {"flags", "require_unconditional", "ns"}, ctx);
    LinearGroupData g = codec::parse_group_data(payload["group_data"],
                                                "$.payload.group_data", ctx);
    StabilizerData h = codec::parse_stabilizer_data(
        payload["stabilizer_data"], "$.payload.stabilizer_data", g, ctx);
    EvalFlags flags;
    if (payload.contains("flags"))
      flags = codec::parse_flags(payload["flags"], "$.payload.flags", ctx);
    parse_require("$.payload.require_unconditional");
    std::optional<NsData> ns;
    if (payload.contains("ns"))
      ns = NsData{codec::parse_module(payload["ns"], "$.payload.ns", g.gamma,
                                      ctx)};
    return run_evaluation(g, h, flags, ns, require_unconditional, out);
  }

  if (payload.contains("center_based")) {
    codec::check_keys(payload, "$.payload",
                      {"group", "center_based", "torus_based"}, {}, ctx);
    FiniteGroup gamma = codec::parse_group(payload["group"], "$.payload.group",
                                           ctx);
    QuasiIsoPair pair{
        codec::parse_complex(payload["center_based"],
                             "$.payload.center_based", gamma, ctx),
        codec::parse_complex(payload["torus_based"], "$.payload.torus_based",
                             gamma, ctx)};
    run_comparison(pair, options, out);
    return 0;
  }

  throw Error("schema-violation",
              "$.payload: expected \"corpus\", \"group_data\" or "
              "\"center_based\"/\"torus_based\" input");
}

int run_selftest(Emitter& out, std::string& diagnostics) {
  std::vector<selftest::Check> checks = selftest::run_all();
  std::size_t failed = 0;
  Json rows = Json::array();
  for (const selftest::Check& check : checks) {
    if (!check.ok) {
      ++failed;
      diagnostics += "selftest failure in " + check.name + ": " +
                     check.detail + "\n";
    }
    if (out.json)
      rows.push_back(Json{{"name", check.name}, {"ok", check.ok}});
    else
      out.text << (check.ok ? "ok " : "FAIL ") << check.name << "\n";
  }
  if (out.json) {
    out.doc["checks"] = std::move(rows);
    out.doc["all_ok"] = failed == 0;
  } else if (failed == 0) {
    out.text << "selftest: " << checks.size() << " checks passed\n";
  } else {
    out.text << "selftest: " << failed << " of " << checks.size()
             << " checks failed\n";
  }
  return failed == 0 ? 0 : 1;
}

} // namespace

RunResult run_task(const std::string& task_text, const RunOptions& options) {
  RunResult result;
  ParseContext ctx;
  ctx.lenient = options.lenient;
  ctx.order_cap = options.group_order_cap;
  try {
    Json doc = codec::parse_text(task_text);
    codec::check_keys(doc, "$", {"version", "task"}, {"payload"}, ctx);
    if (!doc["version"].is_string() ||
        doc["version"].get<std::string>() != "1")
      throw Error("schema-violation", "$.version: expected \"1\"");
    if (!doc["task"].is_string())
      throw Error("schema-violation", "$.task: expected a string");
    const std::string task = doc["task"].get<std::string>();
    if (!options.expect_task.empty() && task != options.expect_task)
      throw Error("schema-violation", "$.task: file says \"" + task +
                                          "\" but the command expects \"" +
                                          options.expect_task + "\"");
    Json payload = doc.contains("payload") ? doc["payload"] : Json::object();

    if (task == "snf") {
      Emitter out("snf", options.json);
      run_snf(payload, ctx, out);
      result.output = out.finish();
    } else if (task == "groupcoh") {
      Emitter out("groupcoh", options.json);
      run_groupcoh(payload, options, ctx, out);
      result.output = out.finish();
    } else if (task == "hypercoh") {
      Emitter out("hypercoh", options.json);
      run_hypercoh(payload, options, ctx, out);
      result.output = out.finish();
    } else if (task == "brauer") {
      Emitter out("brauer", options.json);
      result.exit_code = run_brauer(payload, options, ctx, out);
      result.output = out.finish();
    } else if (task == "selftest") {
      codec::check_keys(payload, "$.payload", {}, {}, ctx);
      Emitter out("selftest", options.json);
      result.exit_code = run_selftest(out, result.diagnostics);
      result.output = out.finish();
    } else {
      throw Error("schema-violation", "$.task: unknown task \"" + task +
                                          "\"");
    }
  } catch (const Error& e) {
    result.exit_code = 1;
    result.output.clear();
    result.diagnostics += std::string("error: ") + e.what() + "\n";
  } catch (const std::exception& e) {
    result.exit_code = 1;
    result.output.clear();
    result.diagnostics += std::string("error: internal: ") + e.what() + "\n";
  }
  for (const std::string& w : ctx.warnings)
    result.diagnostics += "warning: " + w + "\n";
  return result;
}

std::string corpus_task_text(const std::string& name) {
  CorpusEntry entry = corpus(name);
  Json payload;
  if (entry.input) {
    payload = Json{
        {"group_data", codec::group_data_to_json(entry.input->group)},
        {"stabilizer_data",
         codec::stabilizer_data_to_json(entry.input->stabilizer)},
        {"flags", Json::array()}};
  } else {
    payload = Json{
        {"group", codec::group_to_json(entry.pair->center_based.gamma())},
        {"center_based", codec::complex_to_json(entry.pair->center_based)},
        {"torus_based", codec::complex_to_json(entry.pair->torus_based)}};
  }
  Json doc{{"version", "1"}, {"task", "brauer"}, {"payload", std::move(payload)}};
  return doc.dump(2) + "\n";
}

} // namespace galbrauer
