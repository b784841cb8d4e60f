#pragma once

#include <utility>
#include <vector>

#include "grappa/lie.hpp"

namespace grappa {

// Paths are stored in traversal order: darts[0] is walked first. Composition
// gamma' after gamma concatenates gamma's darts before gamma's.
struct Path {
  int start = 0;
  std::vector<int> darts;
};

using PathCombo = std::vector<std::pair<Rat, Path>>;

int path_end(const ReductionGraph& g, const Path& p);
void check_path(const ReductionGraph& g, const Path& p);
Path compose_paths(const ReductionGraph& g, const Path& first, const Path& then);
Path reverse_path(const ReductionGraph& g, const Path& p);

// Single integral of the harmonic form of basis cycle `letter` over a dart.
Rat dart_integral(const CycleSpace& cyc, int dart, int letter);

// Iterated integral against a word of basis-cycle indices; the first letters
// pair with the earliest darts.
Rat iterated_integral(const LieAlgebra& lie, const Path& p, const std::vector<int>& word);
Rat iterated_integral(const LieAlgebra& lie, const PathCombo& c, const std::vector<int>& word);

int word_weight(const LieAlgebra& lie, const Word& w);
TensorVec tv_concat_trunc(const LieAlgebra& lie, const TensorVec& x, const TensorVec& y,
                          int wmax);

// Group-like image of a dart: exp(l * dart functional), truncated by weight.
TensorVec theta_dart(const LieAlgebra& lie, int dart, int wmax);
TensorVec theta_path(const LieAlgebra& lie, const Path& p, int wmax);
TensorVec theta_combo(const LieAlgebra& lie, const PathCombo& c, int wmax);

// Loop at a chosen vertex conjugating the fundamental loop of basis cycle i
// through the spanning tree.
Path loop_at(const LieAlgebra& lie, int vertex, int i);
Path tree_path(const LieAlgebra& lie, int from, int to);

// Tree path from u to v preceded by products of at most n based loops.
std::vector<Path> spanning_paths(const LieAlgebra& lie, int u, int v, int n);

std::vector<std::vector<int>> h1_words_up_to(int b1, int n);

struct DualityGram {
  std::vector<Path> paths;
  std::vector<std::vector<int>> words;
  Mat gram;  // words x paths
  int rank = 0;
  bool nonsingular = false;
};

DualityGram duality_gram(const LieAlgebra& lie, int u, int v, int n);

// The unique truncated combination with counit 1 and vanishing nonempty
// integrals up to length n.
PathCombo canonical_path(const LieAlgebra& lie, int u, int v, int n);

// Logarithms of the edge trivializations: for every positive edge, graded
// components of weight 1..depth in the monodromy-minus-two column.
struct EdgeLogs {
  int depth = 0;
  std::vector<std::vector<LieElement>> by_edge;
};

EdgeLogs solve_edge_logs(const LieAlgebra& lie, int depth);

// The tensor of the trivialization logarithm attached to a dart; reverse
// darts transport by -exp(l ad).
TensorVec edge_log_tv(const LieAlgebra& lie, const EdgeLogs& logs, int dart, int wmax);

// Image of the monodromy of a path: sum over darts of l(d) *
// theta(prefix) edge_log(d) theta(d and the rest).
TensorVec theta_n_path(const LieAlgebra& lie, const EdgeLogs& logs, const Path& p, int wmax);
TensorVec theta_n_combo(const LieAlgebra& lie, const EdgeLogs& logs, const PathCombo& c,
                        int wmax);

// Two-sided span of the defining relation, for reducing tensor values to a
// canonical form in the quotient algebra.
class TwoSidedIdeal {
 public:
  explicit TwoSidedIdeal(const LieAlgebra& lie) : lie_(&lie) {}
  const WordElim& elim(int w, int m) const;
  TensorVec reduce(const TensorVec& t) const;

 private:
  const LieAlgebra* lie_;
  mutable std::map<std::pair<int, int>, WordElim> elims_;
};

// Existence of a combination over the depth-n spanning paths from u to v
// with counit 1 killed by the monodromy, reduced mod the two-sided relation.
bool invt_path_exists(const LieAlgebra& lie, const EdgeLogs& logs, int u, int v, int n);

}  // namespace grappa
