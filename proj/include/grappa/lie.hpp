#pragma once

#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "grappa/homology.hpp"

namespace grappa {

// Generators of the bigraded Lie algebra attached to a reduction graph:
//   estar:i     dual basis of the cycle basis, bidegree (-1, 0)
//   beta:v:i    one pair per unit of vertex genus, bidegree (-1, -1)
//   betap:v:i
//   h1:i        cycle basis, bidegree (-1, -2)
//   logdelta:h  one per half-edge, bidegree (-2, -2)
enum class GenKind { estar, beta, betap, h1, logdelta };

struct Generator {
  GenKind kind;
  int a = 0;  // estar/h1: basis index; beta/betap: vertex; logdelta: half-edge
  int b = 0;  // beta/betap: genus index
  int w = 0;
  int m = 0;
  std::string name;
};

using Word = std::vector<int>;
using TensorVec = std::map<Word, Rat>;

void tv_accumulate(TensorVec& dst, const TensorVec& src, const Rat& coeff);
TensorVec tv_scale(const Rat& c, const TensorVec& v);
TensorVec tv_concat(const TensorVec& x, const TensorVec& y);
TensorVec tv_bracket(const TensorVec& x, const TensorVec& y);

// Sparse Gaussian eliminator keyed by words; optionally tracks coordinates of
// inserted rows in a tag space.
struct WordElim {
  struct Row {
    TensorVec vec;
    std::map<int, Rat> tags;
  };
  std::map<Word, Row> rows;

  TensorVec reduce(TensorVec v, std::map<int, Rat>* tags_out = nullptr) const;
  bool insert(TensorVec v, std::map<int, Rat> tags);
};

// One bidegree piece of the free Lie algebra together with the quotient by
// the surface relation ideal.
struct LiePiece {
  int w = 0;
  int m = 0;
  std::vector<Word> lyndon;
  std::vector<TensorVec> lyndon_tv;
  std::vector<int> basis;  // indices into lyndon forming the quotient basis
  WordElim elim;           // ideal rows untagged, basis rows tagged

  int free_dim() const { return static_cast<int>(lyndon.size()); }
  int dim() const { return static_cast<int>(basis.size()); }
};

struct LieElement {
  int w = 0;
  int m = 0;
  RatVec coords;

  bool is_zero() const { return is_zero_vec(coords); }
};

class LieAlgebra {
 public:
  explicit LieAlgebra(const ReductionGraph& g);
  LieAlgebra(const ReductionGraph& g, std::vector<RatVec> cycle_basis);

  const ReductionGraph& graph() const { return g_; }
  const std::vector<Generator>& generators() const { return gens_; }
  const CycleSpace& cycle_space() const { return cycles_; }
  const TensorVec& sigma() const { return sigma_; }

  const LiePiece& piece(int w, int m) const;
  int dim(int w, int m) const { return piece(w, m).dim(); }
  int free_dim(int w, int m) const { return piece(w, m).free_dim(); }

  LieElement zero(int w, int m) const;
  // Coordinates of a tensor known to lie in the Lie piece plus the ideal.
  LieElement reduce(const TensorVec& tv, int w, int m) const;
  TensorVec rep(const LieElement& x) const;

  LieElement add(const LieElement& x, const LieElement& y) const;
  LieElement scale(const Rat& c, const LieElement& x) const;
  LieElement bracket(const LieElement& x, const LieElement& y) const;
  LieElement apply_N(const LieElement& x) const;
  TensorVec apply_N_tv(const TensorVec& v) const;

  TensorVec gen_tv(int gen) const;
  TensorVec estar_tv(int edge) const;
  TensorVec h1_tv(const RatVec& basis_coords) const;
  TensorVec n_estar_tv(int edge) const;
  TensorVec logdelta_vertex_tv(int v) const;
  TensorVec logdelta_half_tv(int h) const;

  // Kernel of N^{n-1} on the (-n,-2) piece, as reduced coordinate rows.
  const std::vector<RatVec>& v_basis(int n) const;
  // Coordinates of x (in piece (-n,-2)) with respect to v_basis(n).
  RatVec v_coords(const LieElement& x) const;

  struct WmReport {
    int dim_src = 0;
    int dim_tgt = 0;
    int rank = 0;
    bool bijective = false;
  };
  WmReport wm_check(int n, int i) const;

  std::string basis_tree_json(int w, int m, int k) const;
  std::string free_tree_json(int w, int m, int k) const;

 private:
  void init();
  const std::vector<TensorVec>& ideal_piece(int w, int m) const;

  ReductionGraph g_;
  CycleSpace cycles_;
  std::vector<Generator> gens_;
  std::vector<int> estar_ids_, h1_ids_;
  std::map<std::pair<int, int>, int> beta_ids_, betap_ids_;
  std::vector<int> logdelta_ids_;
  TensorVec sigma_;

  mutable std::recursive_mutex mutex_;
  mutable std::map<std::pair<int, int>, LiePiece> pieces_;
  mutable std::map<std::pair<int, int>, std::vector<TensorVec>> ideal_;
  mutable std::map<Word, TensorVec> bracket_cache_;
  mutable std::map<int, std::vector<RatVec>> v_bases_;
};

bool word_is_lyndon(const Word& w);

}  // namespace grappa
