#include "vexl/operators.hpp"

#include <algorithm>
#include <cmath>

#include "vexl/modular.hpp"

namespace vexl {

GridFunction maximalFunction(const GridFunction& f) {
  const Grid& g = f.grid();
  const int n = g.cells();
  const double w = g.cellWidth();

  // Prefix sums of cell masses of |f|: P[k] = integral over the first k cells.
  std::vector<double> prefix(n + 1, 0.0);
  for (int i = 0; i < n; ++i) prefix[i + 1] = prefix[i] + w * std::fabs(f.value(i));

  std::vector<double> out(n, 0.0);
  for (int i = 0; i < n; ++i) {
    // Radii (m + 1/2) * w land both endpoints of the ball on boundaries
    // (a midpoint reflects boundaries onto boundaries), so every average
    // is an exact prefix difference.
    int maxOffset = std::max(i, n - 1 - i);
    double best = 0.0;
    for (int m = 0; m <= maxOffset; ++m) {
      int lo = std::max(i - m, 0);
      int hi = std::min(i + m + 1, n);
      double r = (m + 0.5) * w;
      best = std::max(best, (prefix[hi] - prefix[lo]) / (2.0 * r));
    }
    out[i] = best;
  }
  return GridFunction(g, std::move(out));
}

BoundednessEstimate maximalBoundednessEstimate(const Exponent& p,
                                               const std::vector<GridFunction>& family) {
  if (family.empty())
    throw std::invalid_argument("maximalBoundednessEstimate: empty test family");
  if (!p.isClassP() || !(p.essInf() > 1.0))
    throw std::invalid_argument("maximalBoundednessEstimate: requires essInf(p) > 1");
  BoundednessEstimate est;
  for (const auto& f : family) {
    double denom = luxemburgNorm(f, p).value;
    if (denom == 0.0)
      throw std::invalid_argument("maximalBoundednessEstimate: zero function in family");
    double ratio = luxemburgNorm(maximalFunction(f), p).value / denom;
    est.ratios.push_back(ratio);
    est.cHat = std::max(est.cHat, ratio);
  }
  return est;
}

MollifierSpec MollifierSpec::fromFunction(GridFunction phi) {
  MollifierSpec m{std::move(phi)};
  m.l1Norm = m.base.l1Norm();
  m.integral = m.base.integral();
  m.isApproxIdentity = std::fabs(m.integral - 1.0) <= 1e-12;
  const Grid& g = m.base.grid();
  for (int i = 0; i < g.cells(); ++i) {
    if (m.base.value(i) != 0.0) {
      double outer = std::max(std::fabs(g.boundary(i)), std::fabs(g.boundary(i + 1)));
      m.supportRadius = std::max(m.supportRadius, outer);
    }
  }
  return m;
}

MollifierSpec MollifierSpec::box(const Grid& grid, double radius) {
  GridFunction ind = GridFunction::indicator(grid, -radius, radius);
  return fromFunction(ind.scaled(0.5 / radius));
}

MollifierSpec MollifierSpec::triangle(const Grid& grid) {
  std::vector<double> v(grid.cells(), 0.0);
  for (int i = 0; i < grid.cells(); ++i) {
    double m = grid.midpoint(i);
    v[i] = std::max(0.0, 1.0 - std::fabs(m));
  }
  return fromFunction(GridFunction(grid, std::move(v)));
}

MollifierSpec MollifierSpec::truncatedGaussian(const Grid& grid, double sigma) {
  if (!(sigma > 0)) throw std::invalid_argument("truncatedGaussian: sigma must be positive");
  std::vector<double> v(grid.cells(), 0.0);
  for (int i = 0; i < grid.cells(); ++i) {
    double m = grid.midpoint(i);
    v[i] = std::exp(-0.5 * m * m / (sigma * sigma));
  }
  GridFunction raw(grid, std::move(v));
  double mass = raw.integral();
  return fromFunction(raw.scaled(1.0 / mass));
}

bool MollifierSpec::isNonnegative() const {
  for (double v : base.values())
    if (v < 0.0) return false;
  return true;
}

bool MollifierSpec::isRadialDecreasing(double tol) const {
  const Grid& g = base.grid();
  // Collect (|midpoint|, value) and demand nonincreasing in |x|, which
  // also forces near-evenness.
  std::vector<std::pair<double, double>> byDist;
  for (int i = 0; i < g.cells(); ++i)
    byDist.emplace_back(std::fabs(g.midpoint(i)), base.value(i));
  std::sort(byDist.begin(), byDist.end());
  for (std::size_t i = 1; i < byDist.size(); ++i)
    if (byDist[i].second > byDist[i - 1].second + tol) return false;
  return true;
}

GridFunction mollifierScale(const MollifierSpec& m, double t) {
  if (!(t > 0)) throw std::invalid_argument("mollifierScale: t must be positive");
  const Grid& g = m.base.grid();
  double window = std::max(std::fabs(g.start()), std::fabs(g.end()));
  if (t * m.supportRadius > window + 1e-12)
    throw std::invalid_argument("mollifierScale: scaled support " +
                                std::to_string(t * m.supportRadius) +
                                " overflows reference window " + std::to_string(window));
  std::vector<double> v(g.cells(), 0.0);
  for (int i = 0; i < g.cells(); ++i) v[i] = m.base.lookupAt(g.midpoint(i) / t) / t;
  return GridFunction(g, std::move(v));
}

double convolveAt(const GridFunction& k, const GridFunction& f, double x) {
  const Grid& kg = k.grid();
  const double w = kg.cellWidth();
  double sum = 0.0;
  for (int j = 0; j < kg.cells(); ++j) {
    double kj = k.value(j);
    if (kj == 0.0) continue;
    sum += kj * f.lookupAt(x - kg.midpoint(j));
  }
  return w * sum;
}

GridFunction convolve(const GridFunction& k, const GridFunction& f) {
  const Grid& kg = k.grid();
  const Grid& fg = f.grid();
  if (std::fabs(kg.cellWidth() - fg.cellWidth()) > 1e-12 * fg.cellWidth())
    throw std::invalid_argument("convolve: kernel and function cell widths differ");
  std::vector<double> v(fg.cells(), 0.0);
  for (int i = 0; i < fg.cells(); ++i) v[i] = convolveAt(k, f, fg.midpoint(i));
  return GridFunction(fg, std::move(v));
}

GridFunction radialMajorant(const MollifierSpec& m, bool useAbsoluteValue) {
  const Grid& g = m.base.grid();
  const int n = g.cells();
  std::vector<std::pair<double, double>> byDist;  // (|midpoint|, phi value)
  for (int i = 0; i < n; ++i) {
    double v = m.base.value(i);
    byDist.emplace_back(std::fabs(g.midpoint(i)), useAbsoluteValue ? std::fabs(v) : v);
  }
  std::sort(byDist.begin(), byDist.end());
  // Suffix maxima over strictly larger |y|; the zero tail beyond the
  // window keeps the envelope nonnegative.
  std::vector<double> suffixMax(byDist.size() + 1, 0.0);
  for (int i = static_cast<int>(byDist.size()) - 1; i >= 0; --i)
    suffixMax[i] = std::max(suffixMax[i + 1], byDist[i].second);

  std::vector<double> out(n, 0.0);
  for (int i = 0; i < n; ++i) {
    double d = std::fabs(g.midpoint(i));
    // First entry with |y| strictly greater than d.
    auto it = std::upper_bound(byDist.begin(), byDist.end(), d,
                               [](double val, const auto& e) { return val < e.first; });
    out[i] = suffixMax[it - byDist.begin()];
  }
  return GridFunction(g, std::move(out));
}

}  // namespace vexl
