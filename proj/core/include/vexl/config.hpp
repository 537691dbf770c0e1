#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "vexl/exponent.hpp"
#include "vexl/grid_function.hpp"
#include "vexl/operators.hpp"

namespace vexl {

struct GridConfig {
  double start = -4.0;
  double end = 4.0;
  int cells = 256;
};

/// Exponent descriptors accepted from config: constant, piecewise
/// (breakpoints + values, "inf" allowed), log-perturbation.
struct ExponentDescriptor {
  enum class Kind { Constant, Piecewise, LogPerturbation };
  Kind kind = Kind::Constant;
  double value = 2.0;                               // constant
  std::vector<double> breakpoints;                  // piecewise
  std::vector<double> values;                       // piecewise (inf allowed)
  double pInf = 2.0, amplitude = 1.0;               // log-perturbation

  Exponent build(const Grid& grid) const;
  std::string describe() const;
};

struct FunctionDescriptor {
  enum class Kind { Indicator, Polynomial, Gaussian, Samples };
  Kind kind = Kind::Indicator;
  double a = 0.0, b = 1.0;                          // indicator
  std::vector<double> coeffs;                       // polynomial
  double supportLo = 0.0, supportHi = 1.0;          // polynomial / gaussian
  double center = 0.0, width = 1.0;                 // gaussian
  std::vector<double> samples;                      // samples

  GridFunction build(const Grid& grid) const;
};

struct MollifierDescriptor {
  enum class Kind { Box, Triangle, TruncatedGaussian, Samples };
  Kind kind = Kind::Box;
  double radius = 1.0;      // box
  double sigma = 0.25;      // truncated gaussian
  double window = 2.0;      // reference grid half-width
  std::vector<double> samples;

  /// Builds the kernel on a symmetric reference grid sharing cellWidth.
  MollifierSpec build(double cellWidth) const;
};

struct ProbeConfig {
  std::optional<std::uint64_t> seed;  // mandatory for randomized probes
  int samples = 1000;
  std::vector<double> epsilons{0.5, 1.0, 1.5};
  std::vector<double> lambdas{0.1, 0.25, 0.5, 0.75};
  std::vector<double> tGrid;        // smoothness t's / mollifier scales
  std::vector<int> nGrid{1, 2, 4, 8, 16, 32, 64, 128};
  int truncation = 4;
  double eta = 0.01;
  double margin = 0.05;
};

struct Tolerances {
  double normSolver = 1e-10;
  double equivalenceRel = 1e-6;
  double inequalitySlack = 1e-8;
};

struct RunConfig {
  GridConfig grid;
  ExponentDescriptor p;
  ExponentDescriptor q;
  std::vector<FunctionDescriptor> functions;
  std::vector<FunctionDescriptor> sequence;
  MollifierDescriptor mollifier;
  ProbeConfig probe;
  Tolerances tolerances;
  double lambda = 1.0;  // modular command scale
  std::string outDir = "out";

  Grid buildGrid() const { return Grid(grid.start, grid.end, grid.cells); }
};

/// Parses and validates a JSON config file. Every validation failure
/// names the offending field.
RunConfig parseConfig(const std::string& path);
RunConfig parseConfigText(const std::string& text);

}  // namespace vexl
