#pragma once

/// In-process task runner behind the command-line front end.  A task is a
/// JSON document {"version": "1", "task": ..., "payload": {...}}; running
/// it produces report text for stdout, diagnostics for stderr and a
/// process exit code, so the binary itself stays a thin argv wrapper.

#include <cstddef>
#include <string>

#include "galbrauer/finite_group.hpp"

namespace galbrauer {

struct RunOptions {
  int degree_max = 3;
  std::size_t group_order_cap = FiniteGroup::kDefaultOrderCap;
  bool json = false;
  bool lenient = false;
  /// When nonempty, the task field of the document must match.
  std::string expect_task;
};

/// Exit code 0: success.  1: validation failure (bad JSON, schema or
/// mathematical input).  2: computation refusal (an unconditional value
/// was demanded that no recorded assumption justifies).
struct RunResult {
  int exit_code = 0;
  std::string output;
  std::string diagnostics;
};

RunResult run_task(const std::string& task_text, const RunOptions& options);

/// Serializes a corpus entry into a self-contained task document whose
/// run reproduces the entry's report; throws "unknown-name".
std::string corpus_task_text(const std::string& name);

} // namespace galbrauer
