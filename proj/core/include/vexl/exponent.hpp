#pragma once

#include <limits>
#include <optional>
#include <utility>
#include <vector>

#include "vexl/grid.hpp"

namespace vexl {

/// Sentinel for an infinite exponent value. Cells carrying it form the
/// ess-sup region of the modular; every algorithm branches on it
/// structurally (via isInfExponent), never through pow().
inline constexpr double kInfExponent = std::numeric_limits<double>::infinity();

inline bool isInfExponent(double v) { return std::isinf(v); }

/// Variable exponent p(.) as a piecewise-constant function on a grid.
/// Values are finite reals > 0 or kInfExponent. Class P0 requires a
/// positive lower bound (automatic on a finite grid); class P requires
/// every value >= 1.
class Exponent {
 public:
  Exponent(Grid grid, std::vector<double> values);

  static Exponent constant(const Grid& grid, double value);
  /// Piecewise-constant from sorted interior breakpoints; values.size()
  /// must equal breakpoints.size() + 1.
  static Exponent piecewise(const Grid& grid, const std::vector<double>& breakpoints,
                            const std::vector<double>& values);
  /// p(x) = pInf + amplitude / log(e + |x|), sampled at cell midpoints.
  static Exponent logPerturbation(const Grid& grid, double pInf, double amplitude);

  const Grid& grid() const { return grid_; }
  const std::vector<double>& values() const { return values_; }
  double value(int cell) const { return values_[cell]; }
  int cells() const { return static_cast<int>(values_.size()); }

  double essInf() const { return essInf_; }
  double essSup() const { return essSup_; }
  std::pair<double, double> essBounds() const { return {essInf_, essSup_}; }

  bool finiteEverywhere() const { return !isInfExponent(essSup_); }
  bool isClassP() const { return essInf_ >= 1.0; }
  bool isConstant() const;
  /// Cells where the exponent is infinite (the ess-sup region).
  std::vector<int> infCells() const;

  /// Pointwise conjugate: 1/p + 1/p' = 1 with 1 <-> inf. Requires class P.
  Exponent conjugate() const;

 private:
  Grid grid_;
  std::vector<double> values_;
  double essInf_;
  double essSup_;
};

/// Pointwise ratio p/q with inf/finite = inf. q must be finite everywhere
/// and share the grid.
Exponent quotient(const Exponent& p, const Exponent& q);

/// The three sufficient conditions under which the mixed quasi-norm is a
/// norm: (1) q <= p everywhere, (2) q constant, (3) 1/p + 1/q <= 1
/// everywhere. Both exponents must be in class P.
struct NormConditionFlags {
  bool qLeqP = false;
  bool qConstant = false;
  bool holderSum = false;
  bool isNorm = false;
};

NormConditionFlags normConditionClassify(const Exponent& p, const Exponent& q);

/// Empirical log-Hoelder regularity estimate over grid midpoints.
///
/// c0Hat     = sup over midpoint pairs with |x-y| < 1/2 of |p(x)-p(y)| * (-log|x-y|)
/// pInfHat   = exponent value at the midpoint farthest from the origin
///             (overridable when the construction knows the true limit)
/// cInfHat   = sup over midpoints of |p(x)-pInfHat| * log(e+|x|)
///
/// A constant only certifies regularity at this resolution; divergence of
/// c0Hat under grid refinement is the discontinuity signal.
struct LogHolderEstimate {
  double c0Hat = 0.0;
  double cInfHat = 0.0;
  double pInfHat = 0.0;
  bool lh0Satisfied = false;
  bool lhInfSatisfied = false;
  int infCellsExcluded = 0;
};

LogHolderEstimate logHolderEstimate(const Exponent& p,
                                    std::optional<double> knownPInf = std::nullopt);

}  // namespace vexl
