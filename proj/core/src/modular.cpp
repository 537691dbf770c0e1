#include "vexl/modular.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace vexl {

double modularValue(const GridFunction& f, const Exponent& p, double lambda) {
  requireSameGrid(f.grid(), p.grid(), "modularValue");
  if (!(lambda > 0)) throw std::invalid_argument("modularValue: lambda must be positive");
  const double w = f.grid().cellWidth();
  double integralPart = 0.0;
  double supPart = 0.0;
  for (int i = 0; i < f.cells(); ++i) {
    double a = std::fabs(f.value(i)) / lambda;
    if (isInfExponent(p.value(i)))
      supPart = std::max(supPart, a);
    else if (a > 0)
      integralPart += w * std::pow(a, p.value(i));
  }
  return integralPart + supPart;
}

namespace detail {

double ModularTerms::eval(double lambda) const {
  double s = supCoeff > 0 ? supCoeff / lambda : 0.0;
  for (const auto& [c, e] : powerTerms) s += c * std::pow(lambda, -e);
  return s;
}

ModularTerms buildModularTerms(const GridFunction& f, const Exponent& p) {
  requireSameGrid(f.grid(), p.grid(), "luxemburgNorm");
  const double w = f.grid().cellWidth();
  ModularTerms terms;
  std::map<double, double> groups;  // exponent -> sum of w*|f|^e
  for (int i = 0; i < f.cells(); ++i) {
    double a = std::fabs(f.value(i));
    if (a == 0.0) continue;
    if (isInfExponent(p.value(i)))
      terms.supCoeff = std::max(terms.supCoeff, a);
    else
      groups[p.value(i)] += w * std::pow(a, p.value(i));
  }
  terms.powerTerms.reserve(groups.size());
  for (const auto& [e, c] : groups) terms.powerTerms.emplace_back(c, e);
  return terms;
}

}  // namespace detail

NormResult luxemburgNorm(const GridFunction& f, const Exponent& p, const SolverOptions& opts) {
  auto terms = detail::buildModularTerms(f, p);
  if (terms.isZero()) return NormResult{};
  double guess = std::max(f.maxAbs(), terms.supCoeff);
  return detail::solveMonotone([&](double lambda) { return terms.eval(lambda); }, guess, opts);
}

}  // namespace vexl
