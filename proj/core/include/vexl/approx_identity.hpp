#pragma once

#include "vexl/mixed.hpp"
#include "vexl/operators.hpp"
#include "vexl/report.hpp"

namespace vexl {

/// Element of the sequence space built from powered members: base holds
/// the nonnegative members f_nu, powered holds g_nu = f_nu^{q(.)}, and
/// vNorm is the sum of Luxemburg norms of the powered members under the
/// quotient exponent p/q. Both views are kept because the mollification
/// bounds mix them.
struct VElement {
  FunctionSequence base;
  FunctionSequence powered;
  double vNorm = 0.0;
};

/// Builds a VElement; requires finite exponents and nonnegative members.
VElement makeVElement(const FunctionSequence& base, const MixedSpaceSpec& spec,
                      const SolverOptions& opts = {});

/// Recomputes the norm sum ||g||_V for the powered members.
double vNorm(const VElement& g, const MixedSpaceSpec& spec, const SolverOptions& opts = {});

/// Rescales so that vNorm <= 1 (powered members scale linearly, base
/// members by the cellwise q-th root of the factor).
VElement scaledToUnitV(const VElement& g, const MixedSpaceSpec& spec,
                       const SolverOptions& opts = {});

struct MaximalSumBoundResult {
  double minSlack = 0.0;  // min over midpoints of RHS - LHS
  int violations = 0;
  bool hypothesisSatisfied = true;  // phi positive and radially decreasing
  ProbeReport report{"maximal-sum-bound"};
};

/// Pointwise check of sup_t |(phi_t * g)(x)| (Euclidean over members)
/// against ||phi||_1 * sum_nu M g_nu(x). A kernel violating the
/// positive-radial-decreasing hypothesis is flagged but still evaluated.
MaximalSumBoundResult maximalSumBoundCheck(const VElement& g, const MollifierSpec& m,
                                           const std::vector<double>& tGrid,
                                           double slack = 1e-12);

struct WeakTypeResult {
  bool allHold = true;  // over lambda in (0,1) only
  ProbeReport report{"weak-type"};
};

/// Distribution-function inequality for the maximal sums:
/// |{ sum_nu M g_nu > lambda }| <= cHat^{r+} * ||g||_V / lambda^{r+}
/// with r = p/q. Entries with lambda >= 1 are reported without pass
/// semantics. Requires essInf(p/q) > 1 and ||g||_V <= 1 (rescale first).
WeakTypeResult weakTypeCheck(const VElement& g, const MixedSpaceSpec& spec,
                             const std::vector<double>& lambdaGrid, double cHat,
                             double slack = 1e-12);

struct ApproxIdentityParams {
  std::vector<double> tSeq;  // decreasing scales
  double eta = 0.01;         // exceedance threshold
  double margin = 0.05;      // distance from member jumps excluded
  double monotoneSlack = 1e-6;
  SolverOptions solver;
};

struct ApproxIdentityResult {
  /// Largest t in tSeq from which on (downward) the exceedance measure
  /// is identically 0; 0 when even the smallest scale exceeds.
  double tThreshold = 0.0;
  bool errorMonotone = true;
  double excludedMeasure = 0.0;  // total measure dropped by the jump margin
  ProbeReport report{"approx-identity"};
};

/// Convergence experiment phi_t * g -> g on the region away from member
/// jumps: per scale, the measure of checked midpoints whose member-wise
/// Euclidean error exceeds eta, plus the max error, with monotonicity
/// along the decreasing scales.
ApproxIdentityResult approxIdentityProbe(const VElement& g, const MollifierSpec& m,
                                         const ApproxIdentityParams& params);

}  // namespace vexl
