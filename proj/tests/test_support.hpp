#pragma once

#include <doctest.h>

#include <functional>
#include <string>

#include "galbrauer/errors.hpp"

namespace galbrauer::testing {

inline void check_error_kind(const std::function<void()>& fn,
                             const char* kind) {
  try {
    fn();
    FAIL_CHECK("expected Error with kind " << kind);
  } catch (const Error& e) {
    CHECK(e.kind() == std::string(kind));
  }
}

} // namespace galbrauer::testing
