#pragma once

#include <algorithm>
#include <cstdint>
#include <random>

#include "vexl/exponent.hpp"
#include "vexl/grid_function.hpp"

namespace vexl {

/// Seeded generator for randomized suites. Draws go through mt19937_64
/// with hand-rolled uniforms (not std distributions, whose output is
/// implementation-defined), so a seed pins the byte-identical run.
class SuiteRng {
 public:
  explicit SuiteRng(std::uint64_t seed) : engine_(seed) {}

  double uniform01() { return (engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }
  /// Uniform integer in [lo, hi] inclusive.
  int uniformInt(int lo, int hi) {
    int span = hi - lo + 1;
    int k = static_cast<int>(uniform01() * span);
    return lo + std::min(k, span - 1);
  }

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

struct ExponentDrawOptions {
  double lo = 1.1;
  double hi = 6.0;
  int minPieces = 2;
  int maxPieces = 8;
};

struct FunctionDrawOptions {
  double lo = -2.0;
  double hi = 2.0;
  int minPieces = 2;
  int maxPieces = 8;
};

/// Piecewise-constant exponent with 2-8 pieces and values in [1.1, 6]
/// by default.
Exponent randomExponent(SuiteRng& rng, const Grid& grid, const ExponentDrawOptions& opts = {});

/// Piecewise-constant function with values in [-2, 2] by default.
GridFunction randomGridFunction(SuiteRng& rng, const Grid& grid,
                                const FunctionDrawOptions& opts = {});

/// Sequence of 1-8 random functions (guaranteed not identically zero).
FunctionSequence randomSequence(SuiteRng& rng, const Grid& grid, int minLen = 1, int maxLen = 8,
                                const FunctionDrawOptions& opts = {});

}  // namespace vexl
