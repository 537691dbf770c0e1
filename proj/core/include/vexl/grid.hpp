#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace vexl {

/// Uniform 1-D grid on [start, end) split into `cells` half-open cells.
/// All functions and exponents in a computation live on one shared grid;
/// values carry piecewise-constant semantics (one value per cell, read at
/// the cell midpoint).
class Grid {
 public:
  Grid(double start, double end, int cells) : start_(start), end_(end), cells_(cells) {
    if (!(end > start)) throw std::invalid_argument("Grid: end must exceed start");
    if (cells < 1) throw std::invalid_argument("Grid: cells must be >= 1");
    width_ = (end - start) / cells;
  }

  double start() const { return start_; }
  double end() const { return end_; }
  int cells() const { return cells_; }
  double cellWidth() const { return width_; }

  double midpoint(int i) const { return start_ + (i + 0.5) * width_; }
  double boundary(int k) const { return start_ + k * width_; }

  /// Index of the cell containing x, or -1 outside [start, end).
  int cellIndexOf(double x) const {
    if (x < start_ || x >= end_) return -1;
    int i = static_cast<int>(std::floor((x - start_) / width_));
    if (i < 0) i = 0;
    if (i >= cells_) i = cells_ - 1;
    return i;
  }

  bool operator==(const Grid& o) const {
    return start_ == o.start_ && end_ == o.end_ && cells_ == o.cells_;
  }
  bool operator!=(const Grid& o) const { return !(*this == o); }

  std::string describe() const {
    return "[" + std::to_string(start_) + "," + std::to_string(end_) + ")/" +
           std::to_string(cells_);
  }

 private:
  double start_;
  double end_;
  int cells_;
  double width_;
};

inline void requireSameGrid(const Grid& a, const Grid& b, const char* what) {
  if (a != b) throw std::invalid_argument(std::string(what) + ": grid mismatch");
}

}  // namespace vexl
