#pragma once

/// Deterministic self-check battery behind the `selftest` task: frozen
/// algebraic values and reconstruction identities, no randomness, fixed
/// ordering, so two runs emit byte-identical reports.

#include <string>
#include <vector>

namespace galbrauer::selftest {

struct Check {
  std::string name;
  bool ok = false;
  std::string detail; // empty when ok
};

std::vector<Check> run_all();

} // namespace galbrauer::selftest
