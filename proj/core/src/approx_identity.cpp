#include "vexl/approx_identity.hpp"

#include <algorithm>
#include <cmath>

namespace vexl {

VElement makeVElement(const FunctionSequence& base, const MixedSpaceSpec& spec,
                      const SolverOptions& opts) {
  requireSameGrid(base.grid(), spec.p.grid(), "makeVElement");
  if (!spec.p.finiteEverywhere() || !spec.q.finiteEverywhere())
    throw std::invalid_argument("makeVElement: requires finite exponents");
  for (int k = 0; k < base.size(); ++k)
    for (double v : base.member(k).values())
      if (v < 0.0)
        throw std::invalid_argument("makeVElement: member " + std::to_string(k) +
                                    " has negative values");
  VElement g{base, FunctionSequence(base.grid()), 0.0};
  for (int k = 0; k < base.size(); ++k) g.powered.append(base.member(k).powered(spec.q));
  g.vNorm = vNorm(g, spec, opts);
  return g;
}

double vNorm(const VElement& g, const MixedSpaceSpec& spec, const SolverOptions& opts) {
  Exponent r = quotient(spec.p, spec.q);
  double sum = 0.0;
  for (const auto& member : g.powered.members()) sum += luxemburgNorm(member, r, opts).value;
  return sum;
}

VElement scaledToUnitV(const VElement& g, const MixedSpaceSpec& spec,
                       const SolverOptions& opts) {
  if (g.vNorm <= 1.0) return g;
  double s = 1.0 / g.vNorm;
  VElement out{FunctionSequence(g.base.grid()), g.powered.scaled(s), 0.0};
  for (const auto& member : g.base.members()) {
    GridFunction scaled = member;
    for (int i = 0; i < scaled.cells(); ++i)
      scaled.value(i) = member.value(i) * std::pow(s, 1.0 / spec.q.value(i));
    out.base.append(std::move(scaled));
  }
  out.vNorm = vNorm(out, spec, opts);
  return out;
}

MaximalSumBoundResult maximalSumBoundCheck(const VElement& g, const MollifierSpec& m,
                                           const std::vector<double>& tGrid, double slack) {
  if (tGrid.empty()) throw std::invalid_argument("maximalSumBoundCheck: empty tGrid");
  const Grid& grid = g.powered.grid();
  const int cells = grid.cells();

  MaximalSumBoundResult result;
  result.hypothesisSatisfied = m.isNonnegative() && m.isRadialDecreasing();
  ProbeReport& report = result.report;
  report.setParam("kernelL1", m.l1Norm);
  report.setParam("hypothesisSatisfied", result.hypothesisSatisfied ? "true" : "false");
  report.setColumns({"cell", "lhsSup", "rhsBound", "slack", "pass"});

  // RHS: ||phi||_1 * sum over members of the maximal function of g_nu.
  std::vector<double> rhs(cells, 0.0);
  for (const auto& member : g.powered.members()) {
    GridFunction mf = maximalFunction(member);
    for (int i = 0; i < cells; ++i) rhs[i] += mf.value(i);
  }
  for (double& v : rhs) v *= m.l1Norm;

  // LHS: max over scales of the member-wise Euclidean magnitude of the
  // mollified element.
  std::vector<double> lhs(cells, 0.0);
  for (double t : tGrid) {
    GridFunction kernel = mollifierScale(m, t);
    std::vector<double> sq(cells, 0.0);
    for (const auto& member : g.powered.members()) {
      GridFunction conv = convolve(kernel, member);
      for (int i = 0; i < cells; ++i) sq[i] += conv.value(i) * conv.value(i);
    }
    for (int i = 0; i < cells; ++i) lhs[i] = std::max(lhs[i], std::sqrt(sq[i]));
  }

  result.minSlack = std::numeric_limits<double>::infinity();
  for (int i = 0; i < cells; ++i) {
    double gap = rhs[i] - lhs[i];
    bool pass = lhs[i] <= rhs[i] + slack;
    if (!pass) ++result.violations;
    result.minSlack = std::min(result.minSlack, gap);
    report.noteMargin(gap);
    // Row only where something is happening; all-zero cells carry no news.
    if (lhs[i] != 0.0 || rhs[i] != 0.0)
      report.addRow({static_cast<double>(i), lhs[i], rhs[i], gap, pass ? 1.0 : 0.0}, pass);
  }
  report.setParam("violations", static_cast<double>(result.violations));
  return result;
}

WeakTypeResult weakTypeCheck(const VElement& g, const MixedSpaceSpec& spec,
                             const std::vector<double>& lambdaGrid, double cHat,
                             double slack) {
  Exponent r = quotient(spec.p, spec.q);
  if (!(r.essInf() > 1.0))
    throw std::invalid_argument("weakTypeCheck: requires essInf(p/q) > 1");
  if (g.vNorm > 1.0 + 1e-12)
    throw std::invalid_argument("weakTypeCheck: requires ||g||_V <= 1 (rescale first)");

  const Grid& grid = g.powered.grid();
  const double w = grid.cellWidth();
  const double rPlus = r.essSup();

  std::vector<double> sums(grid.cells(), 0.0);
  for (const auto& member : g.powered.members()) {
    GridFunction mf = maximalFunction(member);
    for (int i = 0; i < grid.cells(); ++i) sums[i] += mf.value(i);
  }

  WeakTypeResult result;
  ProbeReport& report = result.report;
  report.setParam("cHat", cHat);
  report.setParam("rPlus", rPlus);
  report.setParam("vNorm", g.vNorm);
  report.setColumns({"lambda", "measure", "bound", "checked", "pass"});

  for (double lambda : lambdaGrid) {
    if (!(lambda > 0)) throw std::invalid_argument("weakTypeCheck: lambda must be positive");
    double measure = 0.0;
    for (double s : sums)
      if (s > lambda) measure += w;
    double bound = std::pow(cHat, rPlus) * g.vNorm / std::pow(lambda, rPlus);
    bool inRange = lambda < 1.0;  // the inequality is asserted on (0,1) only
    bool pass = !inRange || measure <= bound + slack;
    if (inRange && !pass) result.allHold = false;
    report.addRow({lambda, measure, bound, inRange ? 1.0 : 0.0, pass ? 1.0 : 0.0}, pass,
                  inRange ? "" : "reported-only");
    if (inRange) report.noteMargin(bound - measure);
  }
  return result;
}

ApproxIdentityResult approxIdentityProbe(const VElement& g, const MollifierSpec& m,
                                         const ApproxIdentityParams& params) {
  if (!m.isApproxIdentity)
    throw std::invalid_argument("approxIdentityProbe: kernel mass must be 1");
  if (params.tSeq.empty()) throw std::invalid_argument("approxIdentityProbe: empty tSeq");
  for (std::size_t i = 1; i < params.tSeq.size(); ++i)
    if (!(params.tSeq[i] < params.tSeq[i - 1]))
      throw std::invalid_argument("approxIdentityProbe: tSeq must be strictly decreasing");

  const Grid& grid = g.powered.grid();
  const double w = grid.cellWidth();

  // Region at distance >= margin from every jump of every member.
  std::vector<double> jumps;
  for (const auto& member : g.powered.members()) {
    auto j = member.jumpLocations(0.0);
    jumps.insert(jumps.end(), j.begin(), j.end());
  }
  std::vector<bool> checked(grid.cells(), true);
  for (int i = 0; i < grid.cells(); ++i) {
    double x = grid.midpoint(i);
    for (double jump : jumps) {
      if (std::fabs(x - jump) < params.margin) {
        checked[i] = false;
        break;
      }
    }
  }

  ApproxIdentityResult result;
  ProbeReport& report = result.report;
  for (int i = 0; i < grid.cells(); ++i)
    if (!checked[i]) result.excludedMeasure += w;
  report.setParam("eta", params.eta);
  report.setParam("margin", params.margin);
  report.setParam("jumpCount", static_cast<double>(jumps.size()));
  report.setParam("excludedMeasure", result.excludedMeasure);
  report.setColumns({"t", "exceedanceMeasure", "maxError", "pass"});

  double previousMax = std::numeric_limits<double>::infinity();
  std::vector<double> exceedances;
  for (double t : params.tSeq) {
    GridFunction kernel = mollifierScale(m, t);
    std::vector<double> sq(grid.cells(), 0.0);
    for (const auto& member : g.powered.members()) {
      GridFunction conv = convolve(kernel, member);
      for (int i = 0; i < grid.cells(); ++i) {
        double e = conv.value(i) - member.value(i);
        sq[i] += e * e;
      }
    }
    double exceedance = 0.0;
    double maxError = 0.0;
    for (int i = 0; i < grid.cells(); ++i) {
      if (!checked[i]) continue;
      double err = std::sqrt(sq[i]);
      maxError = std::max(maxError, err);
      if (err > params.eta) exceedance += w;
    }
    bool monotoneOk = maxError <= previousMax + params.monotoneSlack;
    if (!monotoneOk) result.errorMonotone = false;
    previousMax = maxError;
    exceedances.push_back(exceedance);
    report.addRow({t, exceedance, maxError, monotoneOk ? 1.0 : 0.0}, monotoneOk);
  }

  // Largest scale from which the exceedance stays 0 down the sequence.
  result.tThreshold = 0.0;
  for (std::size_t i = 0; i < params.tSeq.size(); ++i) {
    bool zeroFromHere = true;
    for (std::size_t j = i; j < params.tSeq.size(); ++j)
      if (exceedances[j] > 0.0) zeroFromHere = false;
    if (zeroFromHere) {
      result.tThreshold = params.tSeq[i];
      break;
    }
  }
  report.setParam("tThreshold", result.tThreshold);
  return result;
}

}  // namespace vexl
