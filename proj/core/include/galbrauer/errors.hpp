#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace galbrauer {

/// Validation failure with a stable machine-readable kind tag.
/// Kinds in use include: "not-associative", "no-identity", "no-inverse",
/// "not-a-permutation", "order-cap-exceeded", "dimension-mismatch",
/// "ill-defined-hom", "not-equivariant", "invalid-action", "gamma-mismatch",
/// "non-commuting-square", "composite-nonzero", "containment-failure",
/// "unknown-name", "malformed-json", "schema-violation", "inconsistent-flags",
/// "missing-data", "degree-cap-exceeded", "not-free", "trivial-gamma",
/// "not-cyclic", "not-unimodular", "not-injective".
class Error : public std::runtime_error {
public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

private:
  std::string kind_;
};

} // namespace galbrauer
