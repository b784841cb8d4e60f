#pragma once

#include <optional>
#include <vector>

#include "grappa/kummer.hpp"
#include "grappa/lie.hpp"

namespace grappa {

// Result of collapsing part of a graph: the reduced graph together with the
// point map and enough chain-level data to push the Lie algebra forward.
// Points map by p -> map_point(p); edges by e@s -> edge_target[e]@(offset + slope*s).
struct GraphReduction {
  ReductionGraph source;
  ReductionGraph graph;
  bool semistable = true;

  std::vector<GraphPoint> vertex_image;
  std::vector<int> edge_target;
  std::vector<Rat> edge_offset;
  std::vector<Rat> edge_slope;
  std::vector<int> half_target;  // -1: the half-edge collapses to its source

  std::vector<int> collapsed_edges;  // source edges absorbed into new_edge
  int new_edge = -1;
  int w0 = -1;  // source vertices spanning the replacement edge
  int w1 = -1;

  GraphPoint map_point(const GraphPoint& p) const;
};

GraphReduction eliminate_half_edge(const ReductionGraph& g, int half);

// Replaces the connected subgraph spanned by c_edges with a single edge from
// w0 to w1 whose length is the effective resistance between them inside C.
GraphReduction resistance_reduce(const ReductionGraph& g, const std::vector<int>& c_edges,
                                 int w0, int w1);

// Generator-level pushforward along a reduction; words map letterwise.
struct LieMap {
  const LieAlgebra* src = nullptr;
  const LieAlgebra* tgt = nullptr;
  std::vector<TensorVec> gen_image;

  TensorVec push_tv(const TensorVec& t) const;
  LieElement push(const LieElement& x) const;
};

LieMap reduction_pushforward(const LieAlgebra& src, const LieAlgebra& tgt,
                             const GraphReduction& red);

// Blocks: circuit components, bridges, half-edges, and positive-genus vertices.
struct Block {
  enum class Kind { two_connected, bridge, half_edge, genus_vertex };
  Kind kind = Kind::two_connected;
  std::vector<int> vertices;
  std::vector<int> edges;
  int half_edge = -1;
  int vertex = -1;
};

struct BlockDecomposition {
  std::vector<Block> blocks;
  std::vector<int> cutvertices;
  std::vector<std::vector<int>> blocks_at_cutvertex;
  std::vector<int> edge_block;
  bool incidence_is_tree = false;
};

bool is_cutvertex(const ReductionGraph& g, int v);
BlockDecomposition block_decomposition(const ReductionGraph& g);

// Non-bridge edges grouped by equality of their dual classes up to sign.
struct CutSystem {
  std::vector<int> edges;
  std::vector<int> signs;  // aligns each member with the class of edges[0]
  Rat total_length;
};

std::vector<CutSystem> maximal_cut_systems(const ReductionGraph& g);

// Isometric involution of a subgraph, stored over the whole graph with the
// identity outside. edge_reversed marks members mapped to themselves or their
// partner with opposite orientation.
struct Involution {
  std::vector<int> vertex_map;
  std::vector<int> edge_map;
  std::vector<bool> edge_reversed;
};

std::optional<Involution> find_swap_involution(const ReductionGraph& g,
                                               const std::vector<int>& component_edges,
                                               int x, int y,
                                               const std::vector<int>& fixed_vertices);

// Decides whether the weight two invariants of two points agree: the harmonic
// criterion over cut-system averages, the direct potential comparison, and a
// witness involution exchanging the points when they do agree.
struct Weight2Fiber {
  bool equal = false;
  bool j2_equal = false;
  ReductionGraph subdivided;
  int x_vertex = -1;
  int y_vertex = -1;
  std::optional<Involution> witness;
};

Weight2Fiber weight2_fiber(const ReductionGraph& g, const GraphPoint& x, const GraphPoint& y);

// Exhaustive scan of a rational grid classifying coincidences of the map in
// low weight.
struct CensusCollision {
  GraphPoint a;
  GraphPoint b;
  bool involution_found = false;
  bool criteria_agree = false;
};

struct InjectivityCensus {
  int denominator = 0;
  int depth = 0;
  std::vector<GraphPoint> points;
  std::vector<CensusCollision> weight2_pairs;
  int deep_collisions = 0;  // pairs equal through the full depth
  bool all_explained = false;
};

InjectivityCensus injectivity_census(const ReductionGraph& g, int denominator, int depth = 3);

}  // namespace grappa
