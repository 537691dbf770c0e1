#pragma once

#include <vector>

#include "vexl/grid.hpp"

namespace vexl {

/// Real-valued piecewise-constant function on a grid (one value per cell).
class GridFunction {
 public:
  GridFunction(Grid grid, std::vector<double> values);

  /// Zero function.
  static GridFunction zero(const Grid& grid);
  /// 1 on cells whose midpoint lies in the open interval (a, b).
  static GridFunction indicator(const Grid& grid, double a, double b);
  /// Polynomial with ascending coefficients, restricted to [lo, hi].
  static GridFunction polynomial(const Grid& grid, const std::vector<double>& coeffs,
                                 double lo, double hi);
  /// exp(-((x-center)/width)^2) restricted to [lo, hi].
  static GridFunction gaussian(const Grid& grid, double center, double width, double lo,
                               double hi);
  static GridFunction fromSamples(const Grid& grid, std::vector<double> samples);

  const Grid& grid() const { return grid_; }
  const std::vector<double>& values() const { return values_; }
  double value(int cell) const { return values_[cell]; }
  double& value(int cell) { return values_[cell]; }
  int cells() const { return static_cast<int>(values_.size()); }

  /// Piecewise-constant evaluation at an arbitrary point: the containing
  /// cell's value strictly inside a cell, the two-cell average exactly on
  /// an interior boundary, and 0 outside the window. The averaging rule
  /// makes midpoint-quadrature convolution of aligned grids exact.
  double lookupAt(double x) const;

  double integral() const;  // signed, sum of w * v
  double l1Norm() const;
  double maxAbs() const;
  bool isZero() const;

  GridFunction abs() const;
  GridFunction scaled(double c) const;
  GridFunction plus(const GridFunction& o) const;
  GridFunction minus(const GridFunction& o) const;
  /// |f|^{q(x)} cellwise; q must be finite everywhere on the shared grid.
  GridFunction powered(const class Exponent& q) const;

  /// Interior boundaries where the stored value jumps by more than tol.
  std::vector<double> jumpLocations(double tol = 0.0) const;

 private:
  Grid grid_;
  std::vector<double> values_;
};

/// Finite ordered list of grid functions with an implicit zero tail.
class FunctionSequence {
 public:
  explicit FunctionSequence(Grid grid) : grid_(std::move(grid)) {}
  FunctionSequence(Grid grid, std::vector<GridFunction> members);

  const Grid& grid() const { return grid_; }
  const std::vector<GridFunction>& members() const { return members_; }
  const GridFunction& member(int i) const { return members_[i]; }
  int size() const { return static_cast<int>(members_.size()); }
  bool isZero() const;

  void append(GridFunction f);

  /// Keep the first min(n, size) members; the rest become the zero tail.
  FunctionSequence project(int n) const;
  FunctionSequence scaled(double c) const;
  /// Member-wise sum/difference; shorter operand is zero-padded.
  FunctionSequence plus(const FunctionSequence& o) const;
  FunctionSequence minus(const FunctionSequence& o) const;

  /// Cellwise Euclidean norm of the first n member values (zero tail
  /// beyond the stored length).
  GridFunction pointwiseMagnitude(int n) const;

 private:
  Grid grid_;
  std::vector<GridFunction> members_;
};

}  // namespace vexl
