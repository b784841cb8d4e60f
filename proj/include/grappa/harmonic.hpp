#pragma once

#include <optional>
#include <string>

#include "grappa/graph.hpp"
#include "grappa/homology.hpp"
#include "grappa/poly.hpp"

namespace grappa {

// Measure with polynomial densities on edges, atoms at vertices, and formal
// atoms attached to half-edges. Densities are written in the src -> dst
// coordinate of the stored orientation.
struct PPMeasure {
  std::vector<Poly> density;
  RatVec vertex_mass;
  RatVec half_mass;

  static PPMeasure zero(const ReductionGraph& g);
  Rat mass(const ReductionGraph& g) const;
  bool is_zero() const;
};

PPMeasure operator+(const PPMeasure& x, const PPMeasure& y);
PPMeasure operator-(const PPMeasure& x, const PPMeasure& y);
PPMeasure operator*(const Rat& c, const PPMeasure& x);
bool operator==(const PPMeasure& x, const PPMeasure& y);

PPMeasure parse_measure(const ReductionGraph& g, const std::string& json_text);
std::string serialize_measure(const ReductionGraph& g, const PPMeasure& m);

// Continuous piecewise polynomial function: polynomial on each edge, affine
// on each half-edge, with explicit vertex values.
struct PPFunction {
  std::vector<Poly> edge_fn;
  std::vector<Poly> half_fn;
  RatVec vertex_value;

  static PPFunction zero(const ReductionGraph& g);
  Rat value_at(const ReductionGraph& g, const GraphPoint& p) const;
  void check_continuity(const ReductionGraph& g) const;
};

PPFunction operator+(const PPFunction& x, const PPFunction& y);
PPFunction operator-(const PPFunction& x, const PPFunction& y);
PPFunction operator*(const Rat& c, const PPFunction& x);

PPMeasure laplacian(const ReductionGraph& g, const PPFunction& f);

// Solution of laplacian(f) = mu with f = 0 at the base vertex.
PPFunction inv_laplacian(const ReductionGraph& g, const PPMeasure& mu);

// Solution normalized to vanish at an arbitrary base point.
PPFunction potential(const ReductionGraph& g, const PPMeasure& mu, const GraphPoint& base);

Rat integrate(const ReductionGraph& g, const PPFunction& f, const PPMeasure& mu);

// Height pairing of two mass-zero measures.
Rat measure_height(const ReductionGraph& g, const PPMeasure& mu, const PPMeasure& nu);

// Potential of a finite point divisor: subdivides at the support.
struct PointPotential {
  Subdivision sub;
  PPFunction fn;
  Rat value(const ReductionGraph& original, const GraphPoint& p) const;
};
PointPotential point_divisor_potential(const ReductionGraph& g,
                                       const std::vector<std::pair<GraphPoint, Rat>>& divisor);

Rat resistance(const ReductionGraph& g, const GraphPoint& p, const GraphPoint& q);

// Resistance between the endpoints of e with e itself removed; nullopt if the
// removal disconnects them.
std::optional<Rat> complement_resistance(const ReductionGraph& g, int edge);

}  // namespace grappa
