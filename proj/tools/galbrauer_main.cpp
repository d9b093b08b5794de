// Command line front end.  Every subcommand except selftest reads one JSON
// task file, hands it to the library, and reports the result on stdout with
// diagnostics on stderr.
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "galbrauer/cli.hpp"

namespace {

bool read_file(const std::string& path, std::string& text) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    return false;
  std::ostringstream buffer;
  buffer << in.rdbuf();
  text = buffer.str();
  return true;
}

/// Order cap precedence: --group-order-cap beats GALBRAUER_ORDER_CAP beats
/// the built-in default.  A set but unusable environment value is an error,
/// not a silent fallback.
bool apply_env_cap(std::size_t& cap) {
  const char* env = std::getenv("GALBRAUER_ORDER_CAP");
  if (env == nullptr)
    return true;
  std::string s(env);
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
    std::fprintf(stderr,
                 "error: GALBRAUER_ORDER_CAP=\"%s\" is not a positive "
                 "integer\n",
                 env);
    return false;
  }
  errno = 0;
  unsigned long value = std::strtoul(s.c_str(), nullptr, 10);
  if (errno != 0 || value == 0) {
    std::fprintf(stderr,
                 "error: GALBRAUER_ORDER_CAP=\"%s\" is not a positive "
                 "integer\n",
                 env);
    return false;
  }
  cap = static_cast<std::size_t>(value);
  return true;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Galois cohomology of finitely generated modules and "
               "arithmetic invariants of homogeneous spaces"};
  app.require_subcommand(1);

  galbrauer::RunOptions options;
  app.add_option("--degree-max", options.degree_max,
                 "largest cohomological degree to compute")
      ->capture_default_str();
  CLI::Option* cap_option =
      app.add_option("--group-order-cap", options.group_order_cap,
                     "refuse groups larger than this order")
          ->capture_default_str();
  app.add_flag("--json", options.json, "emit machine readable JSON");
  app.add_flag("--lenient", options.lenient,
               "downgrade unknown input fields to warnings");

  std::string file;
  const char* const kFileTasks[] = {"snf", "groupcoh", "hypercoh", "brauer"};
  const char* const kFileHelp[] = {
      "Smith normal form of an integer matrix",
      "group cohomology of a module over a finite group",
      "hypercohomology of a bounded complex of modules",
      "invariants of a homogeneous space, or a side by side comparison of "
      "two complexes"};
  for (std::size_t i = 0; i < 4; ++i) {
    CLI::App* sub = app.add_subcommand(kFileTasks[i], kFileHelp[i]);
    sub->add_option("file", file, "JSON task file")->required();
    sub->fallthrough();
  }
  app.add_subcommand("selftest", "run the built in consistency battery")
      ->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  if (cap_option->count() == 0 && !apply_env_cap(options.group_order_cap))
    return 1;

  const std::string task = app.get_subcommands().front()->get_name();
  options.expect_task = task;

  std::string text;
  if (task == "selftest") {
    text = "{\"version\": \"1\", \"task\": \"selftest\"}";
  } else if (!read_file(file, text)) {
    std::fprintf(stderr, "error: cannot read %s\n", file.c_str());
    return 1;
  }

  galbrauer::RunResult result = galbrauer::run_task(text, options);
  if (!result.output.empty())
    std::fputs(result.output.c_str(), stdout);
  if (!result.diagnostics.empty())
    std::fputs(result.diagnostics.c_str(), stderr);
  return result.exit_code;
}
