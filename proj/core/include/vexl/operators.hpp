#pragma once

#include <vector>

#include "vexl/exponent.hpp"
#include "vexl/grid_function.hpp"

namespace vexl {

/// Hardy-Littlewood maximal function, exact for piecewise-constant data.
///
/// At each midpoint the supremum of ball averages (1/2r) * integral of
/// |f| over (x-r, x+r), clipped to the window, is attained at a radius
/// for which an endpoint hits a cell boundary: between consecutive
/// boundary radii the integral is linear in r, so the average
/// (A + B*r)/(2r) is monotone there. Scanning the boundary radii plus
/// the half-cell radius (which recovers |f(x)| itself) therefore yields
/// the true supremum. Cost O(cells) per midpoint via prefix sums.
GridFunction maximalFunction(const GridFunction& f);

struct BoundednessEstimate {
  double cHat = 0.0;
  std::vector<double> ratios;  // ||Mf||_p / ||f||_p per family member
};

/// Empirical operator-norm estimate: the largest ratio of Luxemburg norms
/// ||Mf||/||f|| over a finite family of nonzero functions. Requires p in
/// class P with essInf > 1.
BoundednessEstimate maximalBoundednessEstimate(const Exponent& p,
                                               const std::vector<GridFunction>& family);

/// A mollification kernel phi on its own symmetric reference grid,
/// together with cached quadrature data.
struct MollifierSpec {
  GridFunction base;
  double l1Norm = 0.0;
  double integral = 0.0;        // signed
  bool isApproxIdentity = false;  // |integral - 1| <= 1e-12
  double supportRadius = 0.0;   // outermost nonzero cell boundary

  static MollifierSpec fromFunction(GridFunction phi);
  /// Box kernel (1/2r) on (-r, r).
  static MollifierSpec box(const Grid& grid, double radius = 1.0);
  /// Triangle kernel (1 - |x|)+ (unit mass).
  static MollifierSpec triangle(const Grid& grid);
  /// Gaussian truncated at the window, normalized to quadrature mass 1.
  static MollifierSpec truncatedGaussian(const Grid& grid, double sigma);

  bool isNonnegative() const;
  /// Even about 0 and nonincreasing in |x| (up to tolerance).
  bool isRadialDecreasing(double tol = 1e-12) const;
};

/// phi_t(x) = (1/t) * phi(x/t) sampled on the reference grid. Throws when
/// the scaled support overflows the reference window.
GridFunction mollifierScale(const MollifierSpec& m, double t);

/// Midpoint-quadrature convolution (k*f)(x) = sum_j w * k_j * f(x - y_j)
/// with f looked up via GridFunction::lookupAt (boundary-averaged, zero
/// outside the window). Exact for aligned piecewise-constant data where f
/// is locally constant across the straddled cells. Requires equal cell
/// widths.
GridFunction convolve(const GridFunction& k, const GridFunction& f);
double convolveAt(const GridFunction& k, const GridFunction& f, double x);

/// Outer supremum envelope Phi(x) = sup over midpoints |y| > |x| of
/// phi(y), extended by the zero tail beyond the window (so Phi >= 0).
/// With useAbsoluteValue the envelope is taken over |phi(y)| instead.
GridFunction radialMajorant(const MollifierSpec& m, bool useAbsoluteValue = false);

}  // namespace vexl
