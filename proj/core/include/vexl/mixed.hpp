#pragma once

#include <optional>

#include "vexl/modular.hpp"

namespace vexl {

/// A mixed sequence space: outer sequence exponent q(.), inner function
/// exponent p(.), both on one grid. The norm-condition flags are computed
/// when both exponents are in class P (the quasi-norm is a norm when any
/// of the three holds).
struct MixedSpaceSpec {
  Exponent p;
  Exponent q;
  std::optional<NormConditionFlags> normFlags;
};

MixedSpaceSpec makeMixedSpaceSpec(const Exponent& p, const Exponent& q);

/// Nested-infimum modular: sum over members of
/// inf{ lam > 0 : modular(f_nu * lam^{-1/q(.)} , p) <= 1 }, with the
/// convention lam^{1/inf} = 1 (infinite-q cells are left unscaled). An
/// empty feasible set contributes +inf, which absorbs the sum.
double mixedModularInf(const FunctionSequence& F, const MixedSpaceSpec& spec,
                       const SolverOptions& opts = {});

/// Closed form available when q is finite everywhere:
/// sum over members of || |f_nu|^{q(.)} ||_{p(.)/q(.)}.
double mixedModularClosed(const FunctionSequence& F, const MixedSpaceSpec& spec,
                          const SolverOptions& opts = {});

/// Mixed (quasi-)norm inf{ mu > 0 : mixed modular of F/mu <= 1 } by outer
/// bisection. Routes through the closed form when it coincides with the
/// nested-infimum definition (q finite everywhere and p finite everywhere,
/// or q identically 1); otherwise evaluates the definition directly.
NormResult mixedNorm(const FunctionSequence& F, const MixedSpaceSpec& spec,
                     const SolverOptions& opts = {});

/// Koethe-dual pairing sum_{nu<=n} integral of fdual_nu * f_nu.
double kothePairing(const FunctionSequence& fdual, const FunctionSequence& f, int n);

namespace detail {

/// Inner infimum of the nested modular for one member, by bisection on
/// the cellwise-rescaled modular. Returns +inf when infeasible (the
/// unscaled part alone exceeds 1) and 0 when every lambda is feasible.
double innerInfimum(const GridFunction& f, const MixedSpaceSpec& spec,
                    const SolverOptions& opts);

}  // namespace detail

}  // namespace vexl
