#include "vexl/probes.hpp"

#include <algorithm>
#include <cmath>

namespace vexl {

namespace {

FunctionSequence normalized(const FunctionSequence& F, const MixedSpaceSpec& spec,
                            const SolverOptions& opts) {
  double n = mixedNorm(F, spec, opts).value;
  if (n == 0.0) throw std::invalid_argument("normalized: zero sequence");
  return F.scaled(1.0 / n);
}

}  // namespace

UnitPair drawUnitPair(SuiteRng& rng, const MixedSpaceSpec& spec, double targetSeparation,
                      int minLen, int maxLen, const SolverOptions& opts) {
  const Grid& grid = spec.p.grid();
  FunctionSequence f = normalized(randomSequence(rng, grid, minLen, maxLen), spec, opts);
  int len = f.size();

  FunctionSequence direction(grid);
  for (int attempt = 0; attempt < 16; ++attempt) {
    FunctionSequence w = randomSequence(rng, grid, len, len);
    // Remove the L2 component along f so the construction below is exact
    // in the Hilbert case.
    double proj = kothePairing(f, w, len) / kothePairing(f, f, len);
    FunctionSequence candidate = w.minus(f.scaled(proj));
    double n = mixedNorm(candidate, spec, opts).value;
    if (n > 1e-9) {
      direction = candidate.scaled(1.0 / n);
      break;
    }
  }
  if (direction.size() == 0)
    throw std::runtime_error("drawUnitPair: could not build a transverse direction");

  double d = targetSeparation;
  double a = 1.0 - 0.5 * d * d;
  double b = d * std::sqrt(std::max(0.0, 1.0 - 0.25 * d * d));
  FunctionSequence g = normalized(f.scaled(a).plus(direction.scaled(b)), spec, opts);

  UnitPair pair{std::move(f), std::move(g), 0.0};
  pair.separation = mixedNorm(pair.f.minus(pair.g), spec, opts).value;
  return pair;
}

ConvexityProbeResult convexityModulusProbe(const MixedSpaceSpec& spec,
                                           const ConvexityProbeParams& params) {
  if (params.samples < 1)
    throw std::invalid_argument("convexityModulusProbe: samples must be >= 1");
  if (!(params.epsilon > 0.0) || params.epsilon > 2.0)
    throw std::invalid_argument("convexityModulusProbe: epsilon must lie in (0, 2]");

  ConvexityProbeResult result;
  ProbeReport& report = result.report;
  report.setParam("epsilon", params.epsilon);
  report.setParam("samples", static_cast<double>(params.samples));
  report.setParam("seed", static_cast<double>(params.seed));
  report.setColumns({"sample", "separation", "midpointNorm", "kept", "pass"});

  const bool strictRegime = spec.p.essInf() > 1.0 && spec.p.finiteEverywhere() &&
                            spec.q.essInf() > 1.0 && spec.q.finiteEverywhere();
  report.setParam("strictRegime", strictRegime ? "true" : "false");

  SuiteRng rng(params.seed);
  double maxMidpoint = 0.0;
  for (int s = 0; s < params.samples; ++s) {
    // Concentrate targets just above epsilon so kept separations approach
    // the threshold where the modulus is read off.
    double u = rng.uniform01();
    double target = params.epsilon + (2.0 - params.epsilon) * std::pow(u, 4.0);
    UnitPair pair = drawUnitPair(rng, spec, target, params.minLen, params.maxLen,
                                 params.solver);

    bool kept = pair.separation >= params.epsilon;
    double sumNorm = mixedNorm(pair.f.plus(pair.g), spec, params.solver).value;
    double midpoint = 0.5 * sumNorm;

    bool pass = midpoint <= 1.0 + params.midpointSlack;
    if (kept && strictRegime && pair.separation >= 0.1)
      pass = pass && sumNorm <= 2.0 - params.strictSlack;

    if (kept) {
      ++result.keptPairs;
      maxMidpoint = std::max(maxMidpoint, midpoint);
    }
    report.addRow({static_cast<double>(s), pair.separation, midpoint, kept ? 1.0 : 0.0,
                   pass ? 1.0 : 0.0},
                  pass);
    report.noteMargin(1.0 + params.midpointSlack - midpoint);
  }
  result.deltaHat =
      result.keptPairs > 0 ? 1.0 - maxMidpoint : std::numeric_limits<double>::quiet_NaN();
  report.setParam("keptPairs", static_cast<double>(result.keptPairs));
  report.setParam("deltaHat", result.deltaHat);
  return result;
}

CounterexampleResult counterexampleSuite(const Exponent& p, int n, const SolverOptions& opts,
                                         double tol) {
  if (n < 2) throw std::invalid_argument("counterexampleSuite: truncation must be >= 2");
  const Grid& grid = p.grid();
  GridFunction chi = GridFunction::indicator(grid, 0.0, 1.0);
  GridFunction zero = GridFunction::zero(grid);

  CounterexampleResult result;
  ProbeReport& report = result.report;
  report.setParam("truncation", static_cast<double>(n));
  report.setColumns({"normF", "normG", "normDiff", "normMid", "expectedDiff", "pass"});

  auto evaluate = [&](const Exponent& q, const FunctionSequence& f, const FunctionSequence& g,
                      double expectedDiff, const std::string& name) {
    MixedSpaceSpec spec = makeMixedSpaceSpec(p, q);
    WitnessCase w;
    w.name = name;
    w.normF = mixedNorm(f, spec, opts).value;
    w.normG = mixedNorm(g, spec, opts).value;
    w.normDiff = mixedNorm(f.minus(g), spec, opts).value;
    w.normMid = mixedNorm(f.plus(g).scaled(0.5), spec, opts).value;
    w.pass = std::fabs(w.normF - 1.0) <= tol && std::fabs(w.normG - 1.0) <= tol &&
             std::fabs(w.normDiff - expectedDiff) <= tol && std::fabs(w.normMid - 1.0) <= tol;
    report.addRow({w.normF, w.normG, w.normDiff, w.normMid, expectedDiff, w.pass ? 1.0 : 0.0},
                  w.pass, name);
    return w;
  };

  {
    // Outer exponent inf: every member of f is chi; g alternates 0, chi.
    Exponent qInf = Exponent::constant(grid, kInfExponent);
    FunctionSequence f(grid), g(grid);
    for (int i = 0; i < n; ++i) {
      f.append(chi);
      g.append(i % 2 == 1 ? chi : zero);
    }
    result.supCase = evaluate(qInf, f, g, 1.0, "outer-inf");
  }
  {
    // Outer exponent 1: disjointly placed single members.
    Exponent qOne = Exponent::constant(grid, 1.0);
    FunctionSequence f(grid), g(grid);
    for (int i = 0; i < n; ++i) {
      f.append(i == 0 ? chi : zero);
      g.append(i == 1 ? chi : zero);
    }
    result.sumCase = evaluate(qOne, f, g, 2.0, "outer-one");
  }
  return result;
}

SmoothnessProbeResult smoothnessQuotientProbe(const MixedSpaceSpec& spec,
                                              const FunctionSequence& f,
                                              const FunctionSequence& g,
                                              const std::vector<double>& tGrid,
                                              const SolverOptions& opts,
                                              double monotoneSlack) {
  FunctionSequence unitF = normalized(f, spec, opts);
  double base = mixedNorm(unitF, spec, opts).value;
  double normG = mixedNorm(g, spec, opts).value;

  std::vector<double> ts;
  for (double t : tGrid) {
    if (!(t > 0)) throw std::invalid_argument("smoothnessQuotientProbe: tGrid must be positive");
    ts.push_back(t);
    ts.push_back(-t);
  }
  std::sort(ts.begin(), ts.end());

  SmoothnessProbeResult result;
  ProbeReport& report = result.report;
  report.setColumns({"t", "quotient", "pass"});
  report.setParam("directionNorm", normG);

  for (double t : ts) {
    double norm = mixedNorm(unitF.plus(g.scaled(t)), spec, opts).value;
    double phi = (norm - base) / t;
    bool pass = std::fabs(phi) <= normG + 1e-8;
    result.tValues.push_back(t);
    result.quotient.push_back(phi);
    report.addRow({t, phi, pass ? 1.0 : 0.0}, pass);
  }

  auto monotoneOn = [&](auto keepSign) {
    double prev = -std::numeric_limits<double>::infinity();
    bool ok = true;
    for (std::size_t i = 0; i < result.tValues.size(); ++i) {
      if (!keepSign(result.tValues[i])) continue;
      if (result.quotient[i] < prev - monotoneSlack) ok = false;
      prev = result.quotient[i];
    }
    return ok;
  };
  result.monotonePositive = monotoneOn([](double t) { return t > 0; });
  result.monotoneNegative = monotoneOn([](double t) { return t < 0; });

  double tMin = *std::min_element(tGrid.begin(), tGrid.end());
  double phiPlus = 0.0, phiMinus = 0.0;
  for (std::size_t i = 0; i < result.tValues.size(); ++i) {
    if (result.tValues[i] == tMin) phiPlus = result.quotient[i];
    if (result.tValues[i] == -tMin) phiMinus = result.quotient[i];
  }
  result.twoSidedGap = std::fabs(phiPlus - phiMinus);
  report.setParam("twoSidedGap", result.twoSidedGap);
  report.setParam("monotonePositive", result.monotonePositive ? "true" : "false");
  report.setParam("monotoneNegative", result.monotoneNegative ? "true" : "false");
  return result;
}

MeasureConvergenceResult measureConvergenceProbe(const MixedSpaceSpec& spec,
                                                 const FunctionSequence& F,
                                                 const FunctionSequence& H,
                                                 const MeasureConvergenceParams& params) {
  if (!spec.p.finiteEverywhere() || !spec.q.finiteEverywhere())
    throw std::invalid_argument("measureConvergenceProbe: requires finite exponents");
  if (H.isZero())
    throw std::invalid_argument("measureConvergenceProbe: direction H must be nonzero");

  MeasureConvergenceResult result;
  ProbeReport& report = result.report;

  FunctionSequence direction = H;
  double normH = mixedNorm(direction, spec, params.solver).value;
  if (normH > 1.0) {
    result.directionScale = 1.0 / normH;
    direction = direction.scaled(result.directionScale);
  }
  report.setParam("directionScale", result.directionScale);
  report.setParam("truncation", static_cast<double>(params.truncation));
  report.setColumns({"n", "lambda", "measure", "bound", "pass"});

  const double w = F.grid().cellWidth();
  const double pPlus = spec.p.essSup();

  // measure per lambda, indexed as lambdaGrid, for the monotonicity check
  std::vector<double> previous(params.lambdaGrid.size(),
                               std::numeric_limits<double>::infinity());

  for (int n : params.nGrid) {
    if (n < 1) throw std::invalid_argument("measureConvergenceProbe: nGrid entries must be >= 1");
    FunctionSequence fn = F.plus(direction.scaled(1.0 / n));
    FunctionSequence diff = fn.minus(F);
    double normDiff = mixedNorm(diff, spec, params.solver).value;
    GridFunction magnitude = diff.pointwiseMagnitude(params.truncation);

    for (std::size_t li = 0; li < params.lambdaGrid.size(); ++li) {
      double lambda = params.lambdaGrid[li];
      double measure = 0.0;
      for (int i = 0; i < magnitude.cells(); ++i)
        if (magnitude.value(i) > lambda) measure += w;
      double bound = std::pow(params.truncation / lambda, pPlus) * normDiff;
      bool pass = measure <= bound + params.boundSlack;
      if (!pass) result.allBoundsHold = false;
      if (measure > previous[li] + 1e-12) result.monotone = false;
      previous[li] = measure;
      report.addRow({static_cast<double>(n), lambda, measure, bound, pass ? 1.0 : 0.0}, pass);
      report.noteMargin(bound - measure);
    }
  }
  report.setParam("allBoundsHold", result.allBoundsHold ? "true" : "false");
  report.setParam("monotone", result.monotone ? "true" : "false");
  return result;
}

}  // namespace vexl
