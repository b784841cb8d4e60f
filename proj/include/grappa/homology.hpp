#pragma once

#include "grappa/graph.hpp"
#include "grappa/linalg.hpp"

namespace grappa {

// Divisors are vectors indexed by vertices; 1-chains are vectors indexed by
// unoriented edges, coefficients taken in the stored src -> dst orientation.

Mat vertex_laplacian(const ReductionGraph& g);

// Solves laplacian * f = d with f(ground) = 0; d must sum to zero.
RatVec grounded_solve(const ReductionGraph& g, const RatVec& d, int ground);

RatVec divisor_potential(const ReductionGraph& g, const RatVec& d);
Rat divisor_height(const ReductionGraph& g, const RatVec& d1, const RatVec& d2);

// First homology with the length pairing.
struct CycleSpace {
  const ReductionGraph* g = nullptr;
  int base = 0;
  std::vector<int> parent_dart;        // dart into each vertex on the BFS tree
  std::vector<int> bfs_order;
  std::vector<bool> edge_in_tree;
  std::vector<int> nontree_edges;      // defining edges of the basis cycles
  std::vector<RatVec> cycles;          // basis, edge coefficients
  Mat gram;                            // pairing matrix on the basis
  Mat gram_inv;

  int dim() const { return static_cast<int>(cycles.size()); }

  // <u, v> = sum_e l(e) u_e v_e.
  Rat pair(const RatVec& u, const RatVec& v) const;

  RatVec boundary(const RatVec& chain) const;          // divisor of a 1-chain
  RatVec gradient_chain(const RatVec& divisor) const;  // adjoint section
  RatVec harmonic_projection(const RatVec& chain) const;

  // Coordinates in the cycle basis of a chain lying in homology.
  RatVec coords_of_cycle(const RatVec& chain) const;

  // Functional coordinates of the dart dual e* in the dual basis.
  RatVec estar_coords(int edge) const;

  // Monodromy image of e* as a homology-basis coordinate vector.
  RatVec n_of_estar(int edge) const;

  // lambda[e][f]: coefficient of edge f in the harmonic cycle of e* so that
  // the chain of N(e*) is sum_f lambda[e][f] f.
  Mat lambda_table() const;

  // Dart functional as edge coefficients: the chain pi(e) / l(e).
  RatVec n_chain(int edge) const;

  // BFS tree path between vertices as a 1-chain.
  RatVec tree_path_chain(int from, int to) const;
  std::vector<int> tree_path_darts(int from, int to) const;
};

CycleSpace build_cycles(const ReductionGraph& g);
CycleSpace build_cycles_with_basis(const ReductionGraph& g, std::vector<RatVec> basis);

}  // namespace grappa
