#include "vexl/exponent.hpp"

#include <algorithm>
#include <cmath>

namespace vexl {

Exponent::Exponent(Grid grid, std::vector<double> values)
    : grid_(std::move(grid)), values_(std::move(values)) {
  if (static_cast<int>(values_.size()) != grid_.cells())
    throw std::invalid_argument("Exponent: values size does not match grid cells");
  essInf_ = kInfExponent;
  essSup_ = 0.0;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    double v = values_[i];
    if (std::isnan(v) || v <= 0.0)
      throw std::invalid_argument("Exponent: cell " + std::to_string(i) +
                                  " has value <= 0 (class P0 requires a positive lower bound)");
    essInf_ = std::min(essInf_, v);
    essSup_ = std::max(essSup_, v);
  }
}

Exponent Exponent::constant(const Grid& grid, double value) {
  return Exponent(grid, std::vector<double>(grid.cells(), value));
}

Exponent Exponent::piecewise(const Grid& grid, const std::vector<double>& breakpoints,
                             const std::vector<double>& values) {
  if (values.size() != breakpoints.size() + 1)
    throw std::invalid_argument("Exponent::piecewise: need breakpoints.size()+1 values");
  if (!std::is_sorted(breakpoints.begin(), breakpoints.end()))
    throw std::invalid_argument("Exponent::piecewise: breakpoints must be sorted");
  std::vector<double> cellValues(grid.cells());
  for (int i = 0; i < grid.cells(); ++i) {
    double m = grid.midpoint(i);
    std::size_t piece =
        std::upper_bound(breakpoints.begin(), breakpoints.end(), m) - breakpoints.begin();
    cellValues[i] = values[piece];
  }
  return Exponent(grid, std::move(cellValues));
}

Exponent Exponent::logPerturbation(const Grid& grid, double pInf, double amplitude) {
  std::vector<double> cellValues(grid.cells());
  for (int i = 0; i < grid.cells(); ++i) {
    double m = grid.midpoint(i);
    cellValues[i] = pInf + amplitude / std::log(std::exp(1.0) + std::fabs(m));
  }
  return Exponent(grid, std::move(cellValues));
}

bool Exponent::isConstant() const {
  for (double v : values_)
    if (v != values_.front()) return false;
  return true;
}

std::vector<int> Exponent::infCells() const {
  std::vector<int> out;
  for (int i = 0; i < cells(); ++i)
    if (isInfExponent(values_[i])) out.push_back(i);
  return out;
}

Exponent Exponent::conjugate() const {
  if (!isClassP())
    throw std::invalid_argument("Exponent::conjugate: requires class P (every value >= 1)");
  std::vector<double> out(values_.size());
  for (std::size_t i = 0; i < values_.size(); ++i) {
    double v = values_[i];
    if (v == 1.0)
      out[i] = kInfExponent;
    else if (isInfExponent(v))
      out[i] = 1.0;
    else
      out[i] = v / (v - 1.0);
  }
  return Exponent(grid_, std::move(out));
}

Exponent quotient(const Exponent& p, const Exponent& q) {
  requireSameGrid(p.grid(), q.grid(), "quotient");
  if (!q.finiteEverywhere())
    throw std::invalid_argument("quotient: q must be finite on every cell");
  std::vector<double> out(p.cells());
  for (int i = 0; i < p.cells(); ++i)
    out[i] = isInfExponent(p.value(i)) ? kInfExponent : p.value(i) / q.value(i);
  return Exponent(p.grid(), std::move(out));
}

NormConditionFlags normConditionClassify(const Exponent& p, const Exponent& q) {
  requireSameGrid(p.grid(), q.grid(), "normConditionClassify");
  if (!p.isClassP() || !q.isClassP())
    throw std::invalid_argument("normConditionClassify: both exponents must be in class P");
  NormConditionFlags flags;
  flags.qLeqP = true;
  flags.holderSum = true;
  for (int i = 0; i < p.cells(); ++i) {
    double pv = p.value(i), qv = q.value(i);
    if (!(qv <= pv)) flags.qLeqP = false;
    double inv = (isInfExponent(pv) ? 0.0 : 1.0 / pv) + (isInfExponent(qv) ? 0.0 : 1.0 / qv);
    if (!(inv <= 1.0)) flags.holderSum = false;
  }
  flags.qConstant = q.isConstant() && q.essInf() >= 1.0;
  flags.isNorm = flags.qLeqP || flags.qConstant || flags.holderSum;
  return flags;
}

LogHolderEstimate logHolderEstimate(const Exponent& p, std::optional<double> knownPInf) {
  const Grid& g = p.grid();
  if (g.cells() < 2)
    throw std::invalid_argument("logHolderEstimate: undefined on fewer than 2 cells");

  LogHolderEstimate est;
  std::vector<int> finite;
  finite.reserve(g.cells());
  for (int i = 0; i < g.cells(); ++i) {
    if (isInfExponent(p.value(i)))
      ++est.infCellsExcluded;
    else
      finite.push_back(i);
  }
  if (finite.size() < 2)
    throw std::invalid_argument("logHolderEstimate: fewer than 2 finite cells");

  const double h = g.cellWidth();
  // Pairs at distance (j-i)*h; only offsets below 1/2 contribute.
  int maxOffset = static_cast<int>(std::ceil(0.5 / h));
  for (std::size_t a = 0; a < finite.size(); ++a) {
    for (std::size_t b = a + 1; b < finite.size(); ++b) {
      int off = finite[b] - finite[a];
      if (off > maxOffset) break;
      double dist = off * h;
      if (!(dist < 0.5)) break;
      double v = std::fabs(p.value(finite[a]) - p.value(finite[b])) * (-std::log(dist));
      est.c0Hat = std::max(est.c0Hat, v);
    }
  }

  int farthest = finite.front();
  for (int i : finite)
    if (std::fabs(g.midpoint(i)) >= std::fabs(g.midpoint(farthest))) farthest = i;
  est.pInfHat = knownPInf.value_or(p.value(farthest));

  for (int i : finite) {
    double m = g.midpoint(i);
    double v = std::fabs(p.value(i) - est.pInfHat) * std::log(std::exp(1.0) + std::fabs(m));
    est.cInfHat = std::max(est.cInfHat, v);
  }

  est.lh0Satisfied = std::isfinite(est.c0Hat);
  est.lhInfSatisfied = std::isfinite(est.cInfHat);
  return est;
}

}  // namespace vexl
