#include "vexl/grid_function.hpp"

#include <algorithm>
#include <cmath>

#include "vexl/exponent.hpp"

namespace vexl {

namespace {

void requireInsideDomain(const Grid& g, double lo, double hi, const char* what) {
  if (lo < g.start() || hi > g.end())
    throw std::invalid_argument(std::string(what) + ": support [" + std::to_string(lo) + "," +
                                std::to_string(hi) + "] outside grid domain " + g.describe());
  if (!(lo < hi)) throw std::invalid_argument(std::string(what) + ": empty support");
}

}  // namespace

GridFunction::GridFunction(Grid grid, std::vector<double> values)
    : grid_(std::move(grid)), values_(std::move(values)) {
  if (static_cast<int>(values_.size()) != grid_.cells())
    throw std::invalid_argument("GridFunction: values size does not match grid cells");
  for (std::size_t i = 0; i < values_.size(); ++i)
    if (!std::isfinite(values_[i]))
      throw std::invalid_argument("GridFunction: non-finite value at cell " + std::to_string(i));
}

GridFunction GridFunction::zero(const Grid& grid) {
  return GridFunction(grid, std::vector<double>(grid.cells(), 0.0));
}

GridFunction GridFunction::indicator(const Grid& grid, double a, double b) {
  requireInsideDomain(grid, a, b, "indicator");
  std::vector<double> v(grid.cells(), 0.0);
  for (int i = 0; i < grid.cells(); ++i) {
    double m = grid.midpoint(i);
    if (m > a && m < b) v[i] = 1.0;
  }
  return GridFunction(grid, std::move(v));
}

GridFunction GridFunction::polynomial(const Grid& grid, const std::vector<double>& coeffs,
                                      double lo, double hi) {
  requireInsideDomain(grid, lo, hi, "polynomial");
  std::vector<double> v(grid.cells(), 0.0);
  for (int i = 0; i < grid.cells(); ++i) {
    double m = grid.midpoint(i);
    if (m <= lo || m >= hi) continue;
    double acc = 0.0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * m + *it;
    v[i] = acc;
  }
  return GridFunction(grid, std::move(v));
}

GridFunction GridFunction::gaussian(const Grid& grid, double center, double width, double lo,
                                    double hi) {
  requireInsideDomain(grid, lo, hi, "gaussian");
  if (!(width > 0)) throw std::invalid_argument("gaussian: width must be positive");
  std::vector<double> v(grid.cells(), 0.0);
  for (int i = 0; i < grid.cells(); ++i) {
    double m = grid.midpoint(i);
    if (m <= lo || m >= hi) continue;
    double z = (m - center) / width;
    v[i] = std::exp(-z * z);
  }
  return GridFunction(grid, std::move(v));
}

GridFunction GridFunction::fromSamples(const Grid& grid, std::vector<double> samples) {
  return GridFunction(grid, std::move(samples));
}

double GridFunction::lookupAt(double x) const {
  const double h = grid_.cellWidth();
  double u = (x - grid_.start()) / h;
  double r = std::round(u);
  auto cellValue = [&](int idx) -> double {
    return (idx >= 0 && idx < cells()) ? values_[idx] : 0.0;
  };
  if (std::fabs(u - r) <= 1e-9 * std::max(1.0, std::fabs(u))) {
    int k = static_cast<int>(r);  // exactly on boundary k
    return 0.5 * (cellValue(k - 1) + cellValue(k));
  }
  return cellValue(static_cast<int>(std::floor(u)));
}

double GridFunction::integral() const {
  double s = 0.0;
  for (double v : values_) s += v;
  return s * grid_.cellWidth();
}

double GridFunction::l1Norm() const {
  double s = 0.0;
  for (double v : values_) s += std::fabs(v);
  return s * grid_.cellWidth();
}

double GridFunction::maxAbs() const {
  double m = 0.0;
  for (double v : values_) m = std::max(m, std::fabs(v));
  return m;
}

bool GridFunction::isZero() const { return maxAbs() == 0.0; }

GridFunction GridFunction::abs() const {
  std::vector<double> v(values_.size());
  for (std::size_t i = 0; i < values_.size(); ++i) v[i] = std::fabs(values_[i]);
  return GridFunction(grid_, std::move(v));
}

GridFunction GridFunction::scaled(double c) const {
  std::vector<double> v(values_.size());
  for (std::size_t i = 0; i < values_.size(); ++i) v[i] = c * values_[i];
  return GridFunction(grid_, std::move(v));
}

GridFunction GridFunction::plus(const GridFunction& o) const {
  requireSameGrid(grid_, o.grid_, "GridFunction::plus");
  std::vector<double> v(values_.size());
  for (std::size_t i = 0; i < values_.size(); ++i) v[i] = values_[i] + o.values_[i];
  return GridFunction(grid_, std::move(v));
}

GridFunction GridFunction::minus(const GridFunction& o) const {
  requireSameGrid(grid_, o.grid_, "GridFunction::minus");
  std::vector<double> v(values_.size());
  for (std::size_t i = 0; i < values_.size(); ++i) v[i] = values_[i] - o.values_[i];
  return GridFunction(grid_, std::move(v));
}

GridFunction GridFunction::powered(const Exponent& q) const {
  requireSameGrid(grid_, q.grid(), "GridFunction::powered");
  if (!q.finiteEverywhere())
    throw std::invalid_argument("GridFunction::powered: exponent must be finite everywhere");
  std::vector<double> v(values_.size());
  for (std::size_t i = 0; i < values_.size(); ++i)
    v[i] = std::pow(std::fabs(values_[i]), q.value(static_cast<int>(i)));
  return GridFunction(grid_, std::move(v));
}

std::vector<double> GridFunction::jumpLocations(double tol) const {
  std::vector<double> out;
  for (int k = 1; k < cells(); ++k)
    if (std::fabs(values_[k] - values_[k - 1]) > tol) out.push_back(grid_.boundary(k));
  return out;
}

FunctionSequence::FunctionSequence(Grid grid, std::vector<GridFunction> members)
    : grid_(std::move(grid)), members_(std::move(members)) {
  for (const auto& m : members_) requireSameGrid(grid_, m.grid(), "FunctionSequence");
}

bool FunctionSequence::isZero() const {
  for (const auto& m : members_)
    if (!m.isZero()) return false;
  return true;
}

void FunctionSequence::append(GridFunction f) {
  requireSameGrid(grid_, f.grid(), "FunctionSequence::append");
  members_.push_back(std::move(f));
}

FunctionSequence FunctionSequence::project(int n) const {
  if (n < 0) throw std::invalid_argument("project: n must be >= 0");
  int keep = std::min<int>(n, size());
  return FunctionSequence(grid_,
                          std::vector<GridFunction>(members_.begin(), members_.begin() + keep));
}

FunctionSequence FunctionSequence::scaled(double c) const {
  std::vector<GridFunction> out;
  out.reserve(members_.size());
  for (const auto& m : members_) out.push_back(m.scaled(c));
  return FunctionSequence(grid_, std::move(out));
}

FunctionSequence FunctionSequence::plus(const FunctionSequence& o) const {
  requireSameGrid(grid_, o.grid_, "FunctionSequence::plus");
  std::vector<GridFunction> out;
  int n = std::max(size(), o.size());
  out.reserve(n);
  for (int i = 0; i < n; ++i) {
    if (i < size() && i < o.size())
      out.push_back(members_[i].plus(o.members_[i]));
    else if (i < size())
      out.push_back(members_[i]);
    else
      out.push_back(o.members_[i]);
  }
  return FunctionSequence(grid_, std::move(out));
}

FunctionSequence FunctionSequence::minus(const FunctionSequence& o) const {
  return plus(o.scaled(-1.0));
}

GridFunction FunctionSequence::pointwiseMagnitude(int n) const {
  int upto = std::min<int>(n, size());
  std::vector<double> v(grid_.cells(), 0.0);
  for (int k = 0; k < upto; ++k) {
    const auto& mv = members_[k].values();
    for (int i = 0; i < grid_.cells(); ++i) v[i] += mv[i] * mv[i];
  }
  for (double& x : v) x = std::sqrt(x);
  return GridFunction(grid_, std::move(v));
}

}  // namespace vexl
