#include "vexl/random_suite.hpp"

#include <algorithm>
#include <set>

namespace vexl {

namespace {

/// Cell partition into `pieces` contiguous runs: distinct interior cut
/// indices plus the two ends.
std::vector<int> drawCuts(SuiteRng& rng, int cells, int pieces) {
  pieces = std::min(pieces, cells);
  std::set<int> cuts;
  while (static_cast<int>(cuts.size()) < pieces - 1)
    cuts.insert(rng.uniformInt(1, cells - 1));
  std::vector<int> out;
  out.push_back(0);
  out.insert(out.end(), cuts.begin(), cuts.end());
  out.push_back(cells);
  return out;
}

std::vector<double> drawPiecewise(SuiteRng& rng, int cells, int minPieces, int maxPieces,
                                  double lo, double hi) {
  int pieces = rng.uniformInt(minPieces, maxPieces);
  std::vector<int> cuts = drawCuts(rng, cells, pieces);
  std::vector<double> values(cells);
  for (std::size_t s = 0; s + 1 < cuts.size(); ++s) {
    double v = rng.uniform(lo, hi);
    for (int i = cuts[s]; i < cuts[s + 1]; ++i) values[i] = v;
  }
  return values;
}

}  // namespace

Exponent randomExponent(SuiteRng& rng, const Grid& grid, const ExponentDrawOptions& opts) {
  return Exponent(grid, drawPiecewise(rng, grid.cells(), opts.minPieces, opts.maxPieces,
                                      opts.lo, opts.hi));
}

GridFunction randomGridFunction(SuiteRng& rng, const Grid& grid,
                                const FunctionDrawOptions& opts) {
  return GridFunction(grid, drawPiecewise(rng, grid.cells(), opts.minPieces, opts.maxPieces,
                                          opts.lo, opts.hi));
}

FunctionSequence randomSequence(SuiteRng& rng, const Grid& grid, int minLen, int maxLen,
                                const FunctionDrawOptions& opts) {
  int len = rng.uniformInt(minLen, maxLen);
  FunctionSequence seq(grid);
  for (int i = 0; i < len; ++i) seq.append(randomGridFunction(rng, grid, opts));
  if (seq.isZero()) seq = FunctionSequence(grid, {GridFunction::indicator(
                            grid, grid.start(), grid.end())});
  return seq;
}

}  // namespace vexl
