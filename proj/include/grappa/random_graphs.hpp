#pragma once

#include <random>

#include "grappa/graph.hpp"
#include "grappa/harmonic.hpp"

namespace grappa {

struct RandomGraphParams {
  int max_vertices = 6;
  int max_denominator = 4;
  int max_extra_edges = 2;
  long max_genus = 2;
  int max_half_edges = 2;
};

// Connected stable reduction graph with bounded size, deterministic in rng.
ReductionGraph random_stable_graph(std::mt19937& rng, const RandomGraphParams& params);

PPMeasure random_mass_zero_measure(const ReductionGraph& g, std::mt19937& rng,
                                   int max_degree = 3);

GraphPoint random_point(const ReductionGraph& g, std::mt19937& rng);

}  // namespace grappa
