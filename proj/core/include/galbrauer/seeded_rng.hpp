#pragma once

#include <cstdint>
#include <random>

#include "galbrauer/intmat.hpp"

namespace galbrauer {

/// Deterministic random source for property tests and the self-test battery.
/// Only raw mt19937_64 output is consumed; std distributions are avoided
/// because their output is not pinned down across standard libraries.
class SeededRng {
public:
  explicit SeededRng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t raw() { return eng_(); }

  /// Uniform on [lo, hi], both inclusive.  The modulo bias is irrelevant at
  /// the ranges used here.
  long uniform(long lo, long hi) {
    return lo +
           static_cast<long>(raw() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  IntMatrix matrix(std::size_t rows, std::size_t cols, long lo, long hi) {
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = uniform(lo, hi);
    return m;
  }

private:
  std::mt19937_64 eng_;
};

} // namespace galbrauer
