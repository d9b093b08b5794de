#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <string>

#include "galbrauer/cli.hpp"
#include "galbrauer/homspace.hpp"
#include "test_support.hpp"

using namespace galbrauer;
using Json = nlohmann::json;

namespace {

RunResult run(const std::string& text, bool json = false,
              const std::string& expect = "") {
  RunOptions opt;
  opt.json = json;
  opt.expect_task = expect;
  return run_task(text, opt);
}

bool diag_contains(const RunResult& r, const std::string& needle) {
  return r.diagnostics.find(needle) != std::string::npos;
}

bool out_contains(const RunResult& r, const std::string& needle) {
  return r.output.find(needle) != std::string::npos;
}

} // namespace

TEST_CASE("groupcoh computes the sign module in degree one") {
  const std::string text = R"({
    "version": "1", "task": "groupcoh",
    "payload": {"group": {"kind": "cyclic", "order": 2},
                "module": {"generators": 1, "action": {"1": [[-1]]}},
                "degree": 1}})";
  RunResult r = run(text);
  CHECK(r.exit_code == 0);
  CHECK(r.output == "H^1 = Z/2\n");

  RunResult j = run(text, true);
  Json doc = Json::parse(j.output);
  CHECK(doc["version"] == "1");
  CHECK(doc["task"] == "groupcoh");
  REQUIRE(doc["cohomology"].size() == 1);
  CHECK(doc["cohomology"][0]["degree"] == 1);
  CHECK(doc["cohomology"][0]["structure"]["free_rank"] == 0);
  CHECK(doc["cohomology"][0]["structure"]["torsion"] == Json::array({2}));
}

TEST_CASE("groupcoh without a degree sweeps zero through the cap") {
  const std::string text = R"({
    "version": "1", "task": "groupcoh",
    "payload": {"group": {"kind": "cyclic", "order": 4},
                "module": {"builtin": "trivial", "free_rank": 1}}})";
  RunResult r = run(text);
  CHECK(r.exit_code == 0);
  CHECK(r.output == "H^0 = Z\nH^1 = 0\nH^2 = Z/4\nH^3 = 0\n");

  RunOptions opt;
  opt.degree_max = 1;
  RunResult capped = run_task(text, opt);
  CHECK(capped.output == "H^0 = Z\nH^1 = 0\n");
}

TEST_CASE("snf reports the diagonal and the transforms") {
  const std::string text = R"({
    "version": "1", "task": "snf",
    "payload": {"matrix": [[2, 4, 4], [-6, 6, 12], [10, -4, -16]]}})";
  RunResult r = run(text);
  CHECK(r.exit_code == 0);
  CHECK(r.output == "diagonal: 2 6 12\nrank: 3\n");

  Json doc = Json::parse(run(text, true).output);
  CHECK(doc["diagonal"] == Json::array({2, 6, 12}));
  CHECK(doc["rank"] == 3);
  CHECK(doc["U"].size() == 3);
  CHECK(doc["D"][0] == Json::array({2, 0, 0}));
  CHECK(doc["V"].size() == 3);
}

TEST_CASE("snf keeps huge entries exact by switching to strings") {
  // 2^53 is the first magnitude that JSON numbers cannot hold exactly.
  const std::string text = R"({
    "version": "1", "task": "snf",
    "payload": {"matrix": [["9007199254740992", 0],
                           [0, 1]]}})";
  Json doc = Json::parse(run(text, true).output);
  CHECK(doc["diagonal"][0] == 1);
  CHECK(doc["diagonal"][1] == "9007199254740992");
}

TEST_CASE("hypercoh accepts negative degrees and sweeps from the bottom") {
  const std::string text = R"({
    "version": "1", "task": "hypercoh",
    "payload": {"group": {"kind": "cyclic", "order": 2},
                "complex": {"terms": {"-1": {"builtin": "trivial",
                                             "free_rank": 1}}}}})";
  RunResult r = run(text);
  CHECK(r.exit_code == 0);
  CHECK(out_contains(r, "H^-1 = Z\n"));
  CHECK(out_contains(r, "H^1 = Z/2\n"));

  const std::string pinned = R"({
    "version": "1", "task": "hypercoh",
    "payload": {"group": {"kind": "cyclic", "order": 2},
                "complex": {"terms": {"-1": {"builtin": "trivial",
                                             "free_rank": 1}}},
                "degree": -1}})";
  CHECK(run(pinned).output == "H^-1 = Z\n");
}

TEST_CASE("hypercoh fills omitted terms and differentials with zeros") {
  const std::string text = R"({
    "version": "1", "task": "hypercoh",
    "payload": {"group": {"kind": "cyclic", "order": 2},
                "complex": {"terms": {"0": {"builtin": "trivial",
                                            "free_rank": 1},
                                      "2": {"builtin": "trivial",
                                            "torsion": [2]}}}}})";
  // Zero differentials split the complex, so degree two collects
  // H^2(Gamma, Z) and H^0(Gamma, Z/2).
  RunResult r = run(text);
  CHECK(r.exit_code == 0);
  CHECK(out_contains(r, "H^0 = Z\n"));
  CHECK(out_contains(r, "H^2 = Z/2 (+) Z/2\n"));
  CHECK(out_contains(r, "H^3 = Z/2\n"));
}

TEST_CASE("degrees above the cap are rejected") {
  const std::string text = R"({
    "version": "1", "task": "groupcoh",
    "payload": {"group": {"kind": "cyclic", "order": 2},
                "module": {"builtin": "regular"}, "degree": 5}})";
  RunResult r = run(text);
  CHECK(r.exit_code == 1);
  CHECK(r.output.empty());
  CHECK(diag_contains(r, "degree-cap-exceeded"));

  RunOptions opt;
  opt.degree_max = 5;
  CHECK(run_task(text, opt).exit_code == 0);
}

TEST_CASE("strict mode rejects unknown fields with their path") {
  const std::string text = R"({
    "version": "1", "task": "snf",
    "payload": {"matrix": [[2]], "note": "hello"}})";
  RunResult strict = run(text);
  CHECK(strict.exit_code == 1);
  CHECK(diag_contains(strict, "$.payload.note: unknown field"));

  RunOptions opt;
  opt.lenient = true;
  RunResult lenient = run_task(text, opt);
  CHECK(lenient.exit_code == 0);
  CHECK(lenient.output == "diagonal: 2\nrank: 1\n");
  CHECK(diag_contains(lenient, "warning: $.payload.note"));
}

TEST_CASE("top level validation failures") {
  RunResult broken = run("{\"version\": ");
  CHECK(broken.exit_code == 1);
  CHECK(diag_contains(broken, "malformed-json"));

  RunResult version = run(R"({"version": "2", "task": "snf"})");
  CHECK(version.exit_code == 1);
  CHECK(diag_contains(version, "$.version"));

  RunResult task = run(R"({"version": "1", "task": "frobnicate"})");
  CHECK(task.exit_code == 1);
  CHECK(diag_contains(task, "unknown task"));

  RunResult missing = run(R"({"version": "1"})");
  CHECK(missing.exit_code == 1);
  CHECK(diag_contains(missing, "missing required field \"task\""));
}

TEST_CASE("the subcommand must match the task named in the file") {
  const std::string text = R"({
    "version": "1", "task": "snf", "payload": {"matrix": [[1]]}})";
  CHECK(run(text, false, "snf").exit_code == 0);
  RunResult r = run(text, false, "groupcoh");
  CHECK(r.exit_code == 1);
  CHECK(diag_contains(r, "file says \"snf\""));
}

TEST_CASE("the order cap applies to groups parsed from input") {
  const std::string text = R"({
    "version": "1", "task": "groupcoh",
    "payload": {"group": {"kind": "cyclic", "order": 8},
                "module": {"builtin": "regular"}, "degree": 0}})";
  RunOptions opt;
  opt.group_order_cap = 4;
  RunResult r = run_task(text, opt);
  CHECK(r.exit_code == 1);
  CHECK(diag_contains(r, "order-cap-exceeded"));
  CHECK(run(text).exit_code == 0);
}

TEST_CASE("brauer evaluates a corpus entry under a rational point") {
  const std::string text = R"({
    "version": "1", "task": "brauer",
    "payload": {"corpus": "sl2_mod_torus",
                "flags": ["X_has_rational_point"]}})";
  RunResult r = run(text);
  CHECK(r.exit_code == 0);
  CHECK(out_contains(r, "U(X) = 0\n"));
  CHECK(out_contains(r, "Pic(X) = Z\n"));
  CHECK(out_contains(r, "Br_a(X,G) = 0\n"));

  Json doc = Json::parse(run(text, true).output);
  CHECK(doc["Pic_X"]["conditional"] == false);
  CHECK(doc["Pic_X"]["value"]["free_rank"] == 1);
  CHECK(doc["Pic_X"]["justified_by"] == "X_has_rational_point");
  CHECK(doc["Br_a_X_G"]["value"]["torsion"] == Json::array());
}

TEST_CASE("brauer without flags reports conditional values and bounds") {
  const std::string text = R"({
    "version": "1", "task": "brauer",
    "payload": {"corpus": "norm_one_torus:z2"}})";
  RunResult r = run(text);
  CHECK(r.exit_code == 0);
  CHECK(out_contains(r, "Pic(X) = conditional"));
  CHECK(out_contains(r,
                     "0 -> Pic(X) -> H^1(k, C_bar_X) -> Br(k)"));
  CHECK(out_contains(
      r, "0 -> Br_a(X,G) -> H^2(k, C_bar_X) -> N^3(k, G_m)"));
}

TEST_CASE("brauer refuses to certify when told to be unconditional") {
  const std::string text = R"({
    "version": "1", "task": "brauer",
    "payload": {"corpus": "norm_one_torus:z2",
                "require_unconditional": true}})";
  RunResult r = run(text);
  CHECK(r.exit_code == 2);
  CHECK(out_contains(r, "refused"));
  CHECK(out_contains(
      r, "0 -> Br_a(X,G) -> H^2(k, C_bar_X) -> N^3(k, G_m)"));

  RunResult j = run(text, true);
  CHECK(j.exit_code == 2);
  Json doc = Json::parse(j.output);
  CHECK(doc["refused"] == true);

  const std::string satisfied = R"({
    "version": "1", "task": "brauer",
    "payload": {"corpus": "norm_one_torus:z2",
                "require_unconditional": true,
                "flags": ["X_has_rational_point"]}})";
  CHECK(run(satisfied).exit_code == 0);
}

TEST_CASE("brauer accepts explicit group and stabilizer data") {
  // The same projective linear group the corpus carries, written out by
  // hand to exercise the documented schema end to end.
  const std::string text = R"({
    "version": "1", "task": "brauer",
    "payload": {
      "group_data": {
        "gamma": {"kind": "cyclic", "order": 2},
        "T_G_hat": {"builtin": "trivial", "free_rank": 1},
        "T_Gsc_hat": {"builtin": "trivial", "free_rank": 1},
        "rho_hat": [[2]],
        "G_hat": {"builtin": "trivial"},
        "G_hat_incl": [],
        "pic_Gbar_zero": false},
      "stabilizer_data": {
        "T_H_hat": {"builtin": "trivial"},
        "T_Hsc_hat": {"builtin": "trivial"},
        "j_hat": [],
        "res_H": [],
        "sc_res": [],
        "center": {"Z_Hred_hat": {"builtin": "trivial"},
                   "Z_Hsc_hat": {"builtin": "trivial"},
                   "z_res": [], "g_to_z": []}},
      "flags": ["X_has_rational_point"]}})";
  RunResult r = run(text, true);
  REQUIRE(r.exit_code == 0);

  const std::string via_corpus = R"({
    "version": "1", "task": "brauer",
    "payload": {"corpus": "pgl2", "flags": ["X_has_rational_point"]}})";
  CHECK(r.output == run(via_corpus, true).output);
}

TEST_CASE("brauer compares two explicit complexes") {
  const std::string text = R"({
    "version": "1", "task": "brauer",
    "payload": {
      "group": {"kind": "cyclic", "order": 2},
      "center_based": {"terms": {"2": {"builtin": "trivial",
                                       "torsion": [2]}}},
      "torus_based": {"terms": {"1": {"builtin": "trivial", "free_rank": 1},
                                "2": {"builtin": "trivial", "free_rank": 1}},
                      "differentials": {"1": [[2]]}}}})";
  RunResult r = run(text);
  CHECK(r.exit_code == 0);
  CHECK(out_contains(r, "agreement: yes"));

  Json doc = Json::parse(run(text, true).output);
  CHECK(doc["agree"] == true);
  REQUIRE(doc["comparison"].size() == 4);
  CHECK(doc["comparison"][2]["center_based"]["torsion"] == Json::array({2}));
  CHECK(doc["comparison"][2]["equal"] == true);
}

TEST_CASE("a nonzero Neron-Severi lattice demotes both invariants") {
  const std::string text = R"({
    "version": "1", "task": "brauer",
    "payload": {"corpus": "pgl2",
                "flags": ["X_has_rational_point"],
                "ns": {"builtin": "trivial", "free_rank": 1}}})";
  RunResult r = run(text);
  CHECK(r.exit_code == 0);
  CHECK(out_contains(r, "Pic(X) = conditional"));
  CHECK(out_contains(r, "NS^Gamma = Z\n"));
  CHECK(out_contains(
      r, "sequence: 0 -> H^1(k, C_hat_X) -> Pic(X) -> NS^Gamma -> "
         "H^2(k, C_hat_X) -> Br_a(X,G) -> H^1(k, NS)"));
}

TEST_CASE("comparison corpus entries take no evaluation knobs") {
  const std::string text = R"({
    "version": "1", "task": "brauer",
    "payload": {"corpus": "pgl2_center_vs_torus",
                "flags": ["X_has_rational_point"]}})";
  RunResult strict = run(text);
  CHECK(strict.exit_code == 1);
  CHECK(diag_contains(strict, "$.payload.flags"));

  RunOptions opt;
  opt.lenient = true;
  RunResult lenient = run_task(text, opt);
  CHECK(lenient.exit_code == 0);
  CHECK(diag_contains(lenient, "warning: $.payload.flags"));
}

TEST_CASE("every corpus entry round trips through its exported task file") {
  for (const std::string& name : corpus_names()) {
    CAPTURE(name);
    std::string text = corpus_task_text(name);
    RunResult via_file = run(text, true, "brauer");
    RunResult direct =
        run("{\"version\": \"1\", \"task\": \"brauer\", \"payload\": "
            "{\"corpus\": \"" +
                name + "\"}}",
            true);
    CHECK(via_file.exit_code == direct.exit_code);
    CHECK(via_file.output == direct.output);
  }
}

TEST_CASE("selftest passes and its JSON output is byte stable") {
  const std::string text = R"({"version": "1", "task": "selftest"})";
  RunResult first = run(text, true);
  RunResult second = run(text, true);
  CHECK(first.exit_code == 0);
  CHECK(first.output == second.output);
  Json doc = Json::parse(first.output);
  CHECK(doc["all_ok"] == true);
  CHECK(doc["checks"].size() >= 10);
}
