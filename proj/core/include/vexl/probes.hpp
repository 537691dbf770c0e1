#pragma once

#include <cstdint>

#include "vexl/mixed.hpp"
#include "vexl/random_suite.hpp"
#include "vexl/report.hpp"

namespace vexl {

struct ConvexityProbeParams {
  double epsilon = 1.0;  // separation threshold in (0, 2]
  int samples = 1000;
  std::uint64_t seed = 1;
  int minLen = 1;
  int maxLen = 4;
  double midpointSlack = 1e-8;  // convexity bound ||m|| <= 1 + slack
  double strictSlack = 1e-8;    // strictness ||f+g|| <= 2 - slack at sep >= 0.1
  SolverOptions solver;
};

struct ConvexityProbeResult {
  /// One-sided (upper-bound) sample estimate of the convexity modulus:
  /// 1 - max midpoint norm over kept pairs. NaN when no pair was kept.
  double deltaHat = 0.0;
  int keptPairs = 0;
  ProbeReport report{"convexity-modulus"};
};

/// Draws random unit pairs, keeps those separated by at least epsilon,
/// and records midpoint norms. Pairs are built around a target separation
/// (uniform-squared concentration just above epsilon) so the estimate is
/// tight where the space has an exact modulus to compare against. When
/// the spec has 1 < ess bounds < inf on both exponents, each kept pair
/// with separation >= 0.1 must also satisfy the strict-convexity margin.
ConvexityProbeResult convexityModulusProbe(const MixedSpaceSpec& spec,
                                           const ConvexityProbeParams& params);

struct WitnessCase {
  std::string name;
  double normF = 0.0, normG = 0.0, normDiff = 0.0, normMid = 0.0;
  bool pass = false;
};

struct CounterexampleResult {
  WitnessCase supCase;  // outer exponent inf: expected norms (1, 1, 1, 1)
  WitnessCase sumCase;  // outer exponent 1:   expected norms (1, 1, 2, 1)
  ProbeReport report{"non-uniform-convexity-witnesses"};
};

/// The two classical witness pairs built from the unit indicator on
/// (0,1), truncated at n members, evaluated in the mixed norms with outer
/// exponent inf and 1 respectively. Values are exponent-independent
/// because the indicator has modular exactly 1.
CounterexampleResult counterexampleSuite(const Exponent& p, int n,
                                         const SolverOptions& opts = {},
                                         double tol = 1e-8);

struct SmoothnessProbeResult {
  std::vector<double> tValues;   // signed, ascending
  std::vector<double> quotient;  // (||f + t g|| - ||f||) / t
  double twoSidedGap = 0.0;      // |phi(tmin) - phi(-tmin)|
  bool monotonePositive = true;
  bool monotoneNegative = true;
  ProbeReport report{"smoothness-quotient"};
};

/// Difference quotient of the norm along direction g at unit f (f is
/// normalized internally), over +-tGrid. Checks monotonicity separately
/// on each side and |quotient| <= ||g||.
SmoothnessProbeResult smoothnessQuotientProbe(const MixedSpaceSpec& spec,
                                              const FunctionSequence& f,
                                              const FunctionSequence& g,
                                              const std::vector<double>& tGrid,
                                              const SolverOptions& opts = {},
                                              double monotoneSlack = 1e-9);

struct MeasureConvergenceParams {
  std::vector<int> nGrid{1, 2, 4, 8, 16, 32, 64};
  std::vector<double> lambdaGrid{0.1, 0.25, 0.5, 0.75};
  int truncation = 4;
  double boundSlack = 1e-12;
  SolverOptions solver;
};

struct MeasureConvergenceResult {
  double directionScale = 1.0;  // applied to H to keep ||H|| <= 1
  bool allBoundsHold = true;
  bool monotone = true;  // exceedance measure nonincreasing in n per lambda
  ProbeReport report{"measure-convergence"};
};

/// Along F_n = F + H/n, measures |{ |P_N(F_n - F)| > lambda }| and checks
/// the quantitative chain measure <= (N/lambda)^{p+} * ||F_n - F||.
/// Requires finite ess sup of both exponents.
MeasureConvergenceResult measureConvergenceProbe(const MixedSpaceSpec& spec,
                                                 const FunctionSequence& F,
                                                 const FunctionSequence& H,
                                                 const MeasureConvergenceParams& params);

/// Unit-norm random pair construction shared by the convexity probe and
/// the acceptance suite: a random unit f and a unit g at target
/// separation d, built along an L2-orthogonalized random direction (exact
/// in the Hilbert p = q = 2 case, approximate otherwise).
struct UnitPair {
  FunctionSequence f;
  FunctionSequence g;
  double separation = 0.0;  // ||f - g|| as computed by the norm solver
};

UnitPair drawUnitPair(SuiteRng& rng, const MixedSpaceSpec& spec, double targetSeparation,
                      int minLen, int maxLen, const SolverOptions& opts);

}  // namespace vexl
