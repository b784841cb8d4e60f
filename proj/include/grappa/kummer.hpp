#pragma once

#include "grappa/harmonic.hpp"
#include "grappa/lie.hpp"

namespace grappa {

// Measure valued in the (-n,-2) piece of the Lie algebra, stored as one
// scalar measure per quotient coordinate.
struct LieMeasure {
  int weight = 0;
  std::vector<PPMeasure> coords;
};

// Piecewise polynomial function valued in the (-n,-2) piece.
struct LieFunction {
  int weight = 0;
  std::vector<PPFunction> coords;
};

LieElement measure_mass(const LieAlgebra& lie, const LieMeasure& mu);

// The canonical tower of measures and their potentials normalized to vanish
// at the base vertex. j[k] and mu[k] sit in weight k+1; weight one is zero.
struct KummerMap {
  int base = 0;
  int depth = 0;
  std::vector<LieFunction> j;
  std::vector<LieMeasure> mu;
};

KummerMap kummer_map(const LieAlgebra& lie, int base, int depth);
LieMeasure kummer_measure(const LieAlgebra& lie, int n);

// Values in weights 1..depth at a point.
std::vector<LieElement> kummer_at(const LieAlgebra& lie, const KummerMap& km,
                                  const GraphPoint& p);

// Closed form for the weight two component built from the divisor Laplacian.
LieFunction w2_closed_form(const LieAlgebra& lie, int base);

// The three differential identities satisfied by the map, with the twisted
// monodromy reconstructed from integrals of the map itself.
struct OdeReport {
  bool half_edges = false;
  bool vertices = false;
  bool interior = false;
  bool all() const { return half_edges && vertices && interior; }
};
OdeReport check_kummer_ode(const LieAlgebra& lie, const KummerMap& km);

}  // namespace grappa
