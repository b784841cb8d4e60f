#include "grappa/homology.hpp"

#include <algorithm>

namespace grappa {

Mat vertex_laplacian(const ReductionGraph& g) {
  const int n = static_cast<int>(g.vertices.size());
  Mat lap(n, n);
  for (const auto& e : g.edges) {
    if (e.src == e.dst) continue;
    const Rat w = Rat(1) / e.length;
    lap.at(e.src, e.src) += w;
    lap.at(e.dst, e.dst) += w;
    lap.at(e.src, e.dst) -= w;
    lap.at(e.dst, e.src) -= w;
  }
  return lap;
}

RatVec grounded_solve(const ReductionGraph& g, const RatVec& d, int ground) {
  const int n = static_cast<int>(g.vertices.size());
  Rat total(0);
  for (const auto& x : d) total += x;
  if (total != 0) throw GraphError("not degree zero");
  const Mat lap = vertex_laplacian(g);
  Mat sys(n - 1, n - 1);
  RatVec rhs;
  rhs.reserve(n - 1);
  int ri = 0;
  for (int r = 0; r < n; ++r) {
    if (r == ground) continue;
    int ci = 0;
    for (int c = 0; c < n; ++c) {
      if (c == ground) continue;
      sys.at(ri, ci++) = lap.at(r, c);
    }
    rhs.push_back(d[r]);
    ++ri;
  }
  const auto sol = solve(sys, rhs);
  if (!sol) throw GraphError("laplacian solve failed");
  RatVec f(n, Rat(0));
  int si = 0;
  for (int v = 0; v < n; ++v) {
    if (v == ground) continue;
    f[v] = (*sol)[si++];
  }
  return f;
}

RatVec divisor_potential(const ReductionGraph& g, const RatVec& d) {
  return grounded_solve(g, d, g.base_vertex());
}

Rat divisor_height(const ReductionGraph& g, const RatVec& d1, const RatVec& d2) {
  Rat total(0);
  for (const auto& x : d1) total += x;
  if (total != 0) throw GraphError("not degree zero");
  const RatVec f = divisor_potential(g, d2);
  return dot(d1, f);
}

Rat CycleSpace::pair(const RatVec& u, const RatVec& v) const {
  Rat s(0);
  for (size_t e = 0; e < g->edges.size(); ++e) s += g->edges[e].length * u[e] * v[e];
  return s;
}

RatVec CycleSpace::boundary(const RatVec& chain) const {
  RatVec d(g->vertices.size(), Rat(0));
  for (size_t e = 0; e < g->edges.size(); ++e) {
    if (chain[e] == 0) continue;
    d[g->edges[e].dst] += chain[e];
    d[g->edges[e].src] -= chain[e];
  }
  return d;
}

RatVec CycleSpace::gradient_chain(const RatVec& divisor) const {
  const RatVec f = divisor_potential(*g, divisor);
  RatVec out(g->edges.size(), Rat(0));
  for (size_t e = 0; e < g->edges.size(); ++e) {
    const Edge& ed = g->edges[e];
    out[e] = (f[ed.dst] - f[ed.src]) / ed.length;
  }
  return out;
}

RatVec CycleSpace::harmonic_projection(const RatVec& chain) const {
  return vec_sub(chain, gradient_chain(boundary(chain)));
}

RatVec CycleSpace::coords_of_cycle(const RatVec& chain) const {
  RatVec pairings(dim(), Rat(0));
  for (int i = 0; i < dim(); ++i) pairings[i] = pair(cycles[i], chain);
  return mat_vec(gram_inv, pairings);
}

RatVec CycleSpace::estar_coords(int edge) const {
  RatVec c(dim(), Rat(0));
  for (int i = 0; i < dim(); ++i) c[i] = cycles[i][edge];
  return c;
}

RatVec CycleSpace::n_of_estar(int edge) const {
  return mat_vec(gram_inv, estar_coords(edge));
}

RatVec CycleSpace::n_chain(int edge) const {
  RatVec chain(g->edges.size(), Rat(0));
  chain[edge] = Rat(1) / g->edges[edge].length;
  return harmonic_projection(chain);
}

Mat CycleSpace::lambda_table() const {
  const int m = static_cast<int>(g->edges.size());
  Mat lam(m, m);
  for (int e = 0; e < m; ++e) {
    const RatVec chain = n_chain(e);
    for (int f = 0; f < m; ++f) lam.at(e, f) = chain[f];
  }
  return lam;
}

std::vector<int> CycleSpace::tree_path_darts(int from, int to) const {
  std::vector<int> up_from, up_to;
  std::vector<bool> seen(g->vertices.size(), false);
  for (int v = from; v >= 0; v = parent_dart[v] < 0 ? -1 : g->dart_source(parent_dart[v]))
    seen[v] = true;
  int meet = to;
  while (!seen[meet]) meet = g->dart_source(parent_dart[meet]);
  for (int v = from; v != meet; v = g->dart_source(parent_dart[v]))
    up_from.push_back(g->dart_opposite(parent_dart[v]));
  for (int v = to; v != meet; v = g->dart_source(parent_dart[v])) up_to.push_back(parent_dart[v]);
  std::reverse(up_to.begin(), up_to.end());
  up_from.insert(up_from.end(), up_to.begin(), up_to.end());
  return up_from;
}

RatVec CycleSpace::tree_path_chain(int from, int to) const {
  RatVec chain(g->edges.size(), Rat(0));
  for (int d : tree_path_darts(from, to))
    chain[g->dart_edge(d)] += g->dart_forward(d) ? Rat(1) : Rat(-1);
  return chain;
}

namespace {

void finish(CycleSpace& cs) {
  const int n = cs.dim();
  cs.gram = Mat(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) cs.gram.at(i, j) = cs.pair(cs.cycles[i], cs.cycles[j]);
  cs.gram_inv = n > 0 ? inverse(cs.gram) : Mat(0, 0);
}

void run_bfs(CycleSpace& cs) {
  const ReductionGraph& g = *cs.g;
  cs.base = g.base_vertex();
  cs.parent_dart.assign(g.vertices.size(), -1);
  cs.edge_in_tree.assign(g.edges.size(), false);
  std::vector<bool> visited(g.vertices.size(), false);
  visited[cs.base] = true;
  cs.bfs_order = {cs.base};
  for (size_t head = 0; head < cs.bfs_order.size(); ++head) {
    const int v = cs.bfs_order[head];
    for (int d : g.out_darts[v]) {
      const int w = g.dart_target(d);
      if (visited[w]) continue;
      visited[w] = true;
      cs.parent_dart[w] = d;
      cs.edge_in_tree[g.dart_edge(d)] = true;
      cs.bfs_order.push_back(w);
    }
  }
}

}  // namespace

CycleSpace build_cycles(const ReductionGraph& g) {
  CycleSpace cs;
  cs.g = &g;
  run_bfs(cs);
  std::vector<int> order(g.edges.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(),
            [&g](int a, int b) { return g.edges[a].id < g.edges[b].id; });
  for (int e : order) {
    if (cs.edge_in_tree[e]) continue;
    cs.nontree_edges.push_back(e);
    RatVec cycle = cs.tree_path_chain(g.edges[e].dst, g.edges[e].src);
    cycle[e] += 1;
    cs.cycles.push_back(std::move(cycle));
  }
  finish(cs);
  return cs;
}

CycleSpace build_cycles_with_basis(const ReductionGraph& g, std::vector<RatVec> basis) {
  CycleSpace cs;
  cs.g = &g;
  run_bfs(cs);
  cs.cycles = std::move(basis);
  for (const auto& c : cs.cycles)
    if (!is_zero_vec(cs.boundary(c))) throw GraphError("not a cycle basis");
  finish(cs);
  return cs;
}

}  // namespace grappa
