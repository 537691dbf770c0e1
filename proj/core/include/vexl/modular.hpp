#pragma once

#include <vector>

#include "vexl/exponent.hpp"
#include "vexl/grid_function.hpp"

namespace vexl {

/// Outcome of a norm solve: the value plus enough solver metadata to
/// recheck it (final bracket, iteration count, modular residual at the
/// returned value). For continuous modulars the residual is
/// |modular(f/value) - 1| and stays within the solver tolerance; for
/// step modulars (all-infinite outer exponent) only the bracket width is
/// meaningful.
struct NormResult {
  double value = 0.0;
  int iterations = 0;
  double residual = 0.0;
  double bracketLo = 0.0;
  double bracketHi = 0.0;
};

struct SolverOptions {
  double relTol = 1e-10;
  int maxIterations = 200;
};

/// The modular of f/lambda: the sum over finite-exponent cells of
/// w * (|f_i|/lambda)^{p_i} plus the max over infinite-exponent cells of
/// |f_i|/lambda (0 when that region is empty). Exact on piecewise-constant
/// data. May return +inf.
double modularValue(const GridFunction& f, const Exponent& p, double lambda);

/// Luxemburg norm inf{lambda > 0 : modular(f/lambda) <= 1} by bracketing
/// and bisection. Returns 0 for the zero function. Throws on
/// non-convergence within the iteration cap.
NormResult luxemburgNorm(const GridFunction& f, const Exponent& p,
                         const SolverOptions& opts = {});

namespace detail {

/// lambda -> modular(f/lambda) reduced to grouped power terms:
/// sum_g C_g * lambda^{-e_g} plus supCoeff/lambda from the ess-sup region.
/// Cells sharing an exponent collapse into one term, so an evaluation
/// costs one pow per distinct exponent value rather than per cell.
struct ModularTerms {
  std::vector<std::pair<double, double>> powerTerms;  // (C_g, e_g)
  double supCoeff = 0.0;
  bool isZero() const { return powerTerms.empty() && supCoeff == 0.0; }
  double eval(double lambda) const;
};

ModularTerms buildModularTerms(const GridFunction& f, const Exponent& p);

/// Smallest lambda with h(lambda) <= 1 for a nonincreasing h, found by
/// doubling/halving the bracket and bisecting to relative tolerance.
/// Returns the feasible (upper) end of the final bracket.
template <typename H>
NormResult solveMonotone(H&& h, double initialGuess, const SolverOptions& opts) {
  NormResult res;
  double hi = initialGuess > 0 ? initialGuess : 1.0;
  int iter = 0;
  while (!(h(hi) <= 1.0)) {
    hi *= 2.0;
    if (++iter > 4200 || !std::isfinite(hi))
      throw std::runtime_error("norm solver: no feasible bracket below 1e300");
  }
  double lo = hi;
  while (h(lo) <= 1.0) {
    lo *= 0.5;
    ++iter;
    if (lo < 1e-280) {  // feasible arbitrarily close to 0: infimum is 0
      res.value = 0.0;
      res.iterations = iter;
      res.bracketLo = 0.0;
      res.bracketHi = hi;
      return res;
    }
  }
  while ((hi - lo) > opts.relTol * hi) {
    if (++iter > opts.maxIterations + 4200)
      throw std::runtime_error("norm solver: bisection failed to converge, bracket [" +
                               std::to_string(lo) + "," + std::to_string(hi) + "]");
    double mid = 0.5 * (lo + hi);
    if (h(mid) <= 1.0)
      hi = mid;
    else
      lo = mid;
  }
  res.value = hi;
  res.iterations = iter;
  res.bracketLo = lo;
  res.bracketHi = hi;
  double atValue = h(hi);
  res.residual = std::isfinite(atValue) ? std::fabs(atValue - 1.0) : atValue;
  return res;
}

}  // namespace detail

}  // namespace vexl
