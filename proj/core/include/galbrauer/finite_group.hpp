#pragma once

/// Finite groups as validated multiplication tables.  Elements are indices
/// 0..n-1; table()[a][b] is the product a*b.

#include <cstddef>
#include <optional>
#include <vector>

#include "galbrauer/errors.hpp"

namespace galbrauer {

class FiniteGroup {
public:
  static constexpr std::size_t kDefaultOrderCap = 64;

  /// Validates shape, identity, inverses, associativity and the order cap;
  /// throws Error with kind "no-identity", "no-inverse", "not-associative"
  /// or "order-cap-exceeded".
  static FiniteGroup from_table(std::vector<std::vector<std::size_t>> table,
                                std::size_t order_cap = kDefaultOrderCap);

  /// Closure of permutation generators on points 0..m-1 under composition
  /// (a*b applies b first).  Element 0 is the identity; the rest follow
  /// discovery order, which is deterministic in the generator list.
  static FiniteGroup
  from_permutations(const std::vector<std::vector<std::size_t>>& generators,
                    std::size_t points,
                    std::size_t order_cap = kDefaultOrderCap);

  static FiniteGroup trivial();
  static FiniteGroup cyclic(std::size_t n,
                            std::size_t order_cap = kDefaultOrderCap);
  static FiniteGroup klein_four();

  std::size_t order() const { return table_.size(); }
  std::size_t mul(std::size_t a, std::size_t b) const { return table_[a][b]; }
  std::size_t identity() const { return identity_; }
  std::size_t inverse(std::size_t a) const { return inverse_[a]; }
  std::size_t element_order(std::size_t a) const;

  /// A generator index when the group is cyclic (smallest such index).
  std::optional<std::size_t> cyclic_generator() const;
  bool is_cyclic() const { return cyclic_generator().has_value(); }

  const std::vector<std::vector<std::size_t>>& table() const { return table_; }

  bool operator==(const FiniteGroup& o) const { return table_ == o.table_; }

private:
  FiniteGroup() = default;
  std::vector<std::vector<std::size_t>> table_;
  std::size_t identity_ = 0;
  std::vector<std::size_t> inverse_;
};

} // namespace galbrauer
