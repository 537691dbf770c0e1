#include "vexl/mixed.hpp"

#include <algorithm>
#include <cmath>

namespace vexl {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

bool qIsConstantOne(const Exponent& q) { return q.isConstant() && q.value(0) == 1.0; }

/// The closed form equals the nested-infimum definition only when the
/// ess-sup region of p is empty or the outer exponent is identically 1;
/// otherwise the two forms weight that region differently.
bool closedFormMatchesDefinition(const MixedSpaceSpec& spec) {
  return spec.q.finiteEverywhere() &&
         (spec.p.finiteEverywhere() || qIsConstantOne(spec.q));
}

}  // namespace

MixedSpaceSpec makeMixedSpaceSpec(const Exponent& p, const Exponent& q) {
  requireSameGrid(p.grid(), q.grid(), "makeMixedSpaceSpec");
  MixedSpaceSpec spec{p, q, std::nullopt};
  if (p.isClassP() && q.isClassP()) spec.normFlags = normConditionClassify(p, q);
  return spec;
}

namespace detail {

double innerInfimum(const GridFunction& f, const MixedSpaceSpec& spec,
                    const SolverOptions& opts) {
  requireSameGrid(f.grid(), spec.p.grid(), "innerInfimum");
  const Exponent& q = spec.q;

  // Limit of the scaled modular as lambda -> inf: only unscaled
  // (infinite-q) cells survive.
  GridFunction tail = f;
  bool lambdaDependent = false;
  for (int i = 0; i < f.cells(); ++i) {
    if (!isInfExponent(q.value(i))) {
      tail.value(i) = 0.0;
      if (f.value(i) != 0.0) lambdaDependent = true;
    }
  }
  double limit = modularValue(tail, spec.p, 1.0);
  if (limit > 1.0) return kInf;
  if (!lambdaDependent) return 0.0;

  auto scaledModular = [&](double lambda) {
    GridFunction scaled = f;
    for (int i = 0; i < f.cells(); ++i) {
      double qi = q.value(i);
      if (!isInfExponent(qi)) scaled.value(i) = f.value(i) * std::pow(lambda, -1.0 / qi);
    }
    return modularValue(scaled, spec.p, 1.0);
  };

  double hi = 1.0;
  int expand = 0;
  while (!(scaledModular(hi) <= 1.0)) {
    hi *= 2.0;
    if (++expand > 1000) return kInf;  // feasible set empty (or beyond range)
  }
  double lo = hi;
  while (scaledModular(lo) <= 1.0) {
    lo *= 0.5;
    if (lo < 1e-280) return 0.0;
  }
  for (int iter = 0; (hi - lo) > opts.relTol * hi; ++iter) {
    if (iter > opts.maxIterations + 1000)
      throw std::runtime_error("innerInfimum: bisection failed to converge");
    double mid = 0.5 * (lo + hi);
    if (scaledModular(mid) <= 1.0)
      hi = mid;
    else
      lo = mid;
  }
  return hi;
}

}  // namespace detail

double mixedModularInf(const FunctionSequence& F, const MixedSpaceSpec& spec,
                       const SolverOptions& opts) {
  requireSameGrid(F.grid(), spec.p.grid(), "mixedModularInf");
  double sum = 0.0;
  for (const auto& member : F.members()) {
    sum += detail::innerInfimum(member, spec, opts);
    if (std::isinf(sum)) return kInf;
  }
  return sum;
}

double mixedModularClosed(const FunctionSequence& F, const MixedSpaceSpec& spec,
                          const SolverOptions& opts) {
  requireSameGrid(F.grid(), spec.p.grid(), "mixedModularClosed");
  if (!spec.q.finiteEverywhere())
    throw std::invalid_argument("mixedModularClosed: requires q finite on every cell");
  Exponent r = quotient(spec.p, spec.q);
  double sum = 0.0;
  for (const auto& member : F.members())
    sum += luxemburgNorm(member.powered(spec.q), r, opts).value;
  return sum;
}

NormResult mixedNorm(const FunctionSequence& F, const MixedSpaceSpec& spec,
                     const SolverOptions& opts) {
  requireSameGrid(F.grid(), spec.p.grid(), "mixedNorm");
  if (F.isZero()) return NormResult{};

  const bool closedOk = closedFormMatchesDefinition(spec);

  if (closedOk && spec.q.isConstant()) {
    // Constant q: the member scalings factor out of the closed form, so
    // the norm is the modular to the power 1/q.
    double qv = spec.q.value(0);
    Exponent r = quotient(spec.p, spec.q);
    double modular = 0.0;
    int iterations = 0;
    for (const auto& member : F.members()) {
      NormResult inner = luxemburgNorm(member.powered(spec.q), r, opts);
      modular += inner.value;
      iterations += inner.iterations;
    }
    NormResult res;
    res.value = std::pow(modular, 1.0 / qv);
    res.iterations = iterations;
    res.bracketLo = res.bracketHi = res.value;
    double check = mixedModularClosed(F.scaled(1.0 / res.value), spec, opts);
    res.residual = std::isfinite(check) ? std::fabs(check - 1.0) : check;
    return res;
  }

  auto outerModular = [&](double mu) {
    FunctionSequence scaled = F.scaled(1.0 / mu);
    return closedOk ? mixedModularClosed(scaled, spec, opts)
                    : mixedModularInf(scaled, spec, opts);
  };
  double guess = 0.0;
  for (const auto& member : F.members()) guess += member.maxAbs();
  return detail::solveMonotone(outerModular, guess, opts);
}

double kothePairing(const FunctionSequence& fdual, const FunctionSequence& f, int n) {
  requireSameGrid(fdual.grid(), f.grid(), "kothePairing");
  const double w = f.grid().cellWidth();
  int upto = std::min({n, fdual.size(), f.size()});
  double sum = 0.0;
  for (int nu = 0; nu < upto; ++nu) {
    const auto& a = fdual.member(nu).values();
    const auto& b = f.member(nu).values();
    double inner = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) inner += a[i] * b[i];
    sum += w * inner;
  }
  return sum;
}

}  // namespace vexl
