#pragma once

/// Internal helpers shared between group cohomology and the complex
/// machinery: the cochain differential in sparse form and tuple indexing.

#include <cstddef>

#include "galbrauer/gamma_module.hpp"
#include "sparse_elim.hpp"

namespace galbrauer::detail {

/// Matrix of d^n : C^n -> C^(n+1) on the flattened cochain coordinates.
SparseMat bar_differential_sparse(const GammaModule& m, std::size_t n);

/// Rank of a sparse matrix over the rationals.
std::size_t sparse_rank(SparseMat a);

/// Block-diagonal relation matrix of C^n (copies of the carrier relations).
IntMatrix cochain_relations(const GammaModule& m, std::size_t n);

} // namespace galbrauer::detail
