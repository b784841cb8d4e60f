#include "grappa/random_graphs.hpp"

namespace grappa {

namespace {

Rat random_length(std::mt19937& rng, int max_den) {
  std::uniform_int_distribution<int> den(1, max_den);
  const int q = den(rng);
  std::uniform_int_distribution<int> num(1, 3 * q);
  return rat_of(num(rng), q);
}

Rat random_rat(std::mt19937& rng, int max_den = 6, int lo = -6, int hi = 6) {
  std::uniform_int_distribution<int> den(1, max_den);
  std::uniform_int_distribution<int> num(lo, hi);
  return rat_of(num(rng), den(rng));
}

}  // namespace

ReductionGraph random_stable_graph(std::mt19937& rng, const RandomGraphParams& params) {
  ReductionGraph g;
  std::uniform_int_distribution<int> nv_dist(1, params.max_vertices);
  const int nv = nv_dist(rng);
  for (int v = 0; v < nv; ++v) {
    std::uniform_int_distribution<long> genus_dist(0, params.max_genus);
    g.vertices.push_back({"v" + std::to_string(v + 1), genus_dist(rng)});
  }
  int edge_count = 0;
  const auto add_edge = [&](int a, int b) {
    Edge e;
    e.id = "e" + std::to_string(++edge_count);
    e.src = a;
    e.dst = b;
    e.length = random_length(rng, params.max_denominator);
    g.edges.push_back(e);
  };
  for (int v = 1; v < nv; ++v) {
    std::uniform_int_distribution<int> parent(0, v - 1);
    add_edge(parent(rng), v);
  }
  std::uniform_int_distribution<int> extra_dist(0, params.max_extra_edges);
  const int extra = extra_dist(rng);
  std::uniform_int_distribution<int> pick(0, nv - 1);
  for (int i = 0; i < extra; ++i) add_edge(pick(rng), pick(rng));

  int half_count = 0;
  std::uniform_int_distribution<int> nh_dist(0, params.max_half_edges);
  const int nh = nh_dist(rng);
  for (int i = 0; i < nh; ++i)
    g.half_edges.push_back({"h" + std::to_string(++half_count), pick(rng)});

  // Repair stability: every vertex needs 2 genus + degree > 2.
  std::vector<long> deg(nv, 0);
  for (const auto& e : g.edges) {
    deg[e.src] += 1;
    deg[e.dst] += 1;
  }
  for (const auto& h : g.half_edges) deg[h.src] += 1;
  for (int v = 0; v < nv; ++v) {
    while (2 * g.vertices[v].genus + deg[v] <= 2) {
      std::uniform_int_distribution<int> coin(0, 1);
      if (coin(rng) == 0 && g.vertices[v].genus < params.max_genus) {
        g.vertices[v].genus += 1;
      } else {
        g.half_edges.push_back({"h" + std::to_string(++half_count), v});
        deg[v] += 1;
      }
    }
  }
  g.rebuild_indices();
  return g;
}

PPMeasure random_mass_zero_measure(const ReductionGraph& g, std::mt19937& rng,
                                   int max_degree) {
  PPMeasure m = PPMeasure::zero(g);
  std::uniform_int_distribution<int> deg_dist(0, max_degree);
  for (size_t e = 0; e < g.edges.size(); ++e) {
    std::vector<Rat> coeffs;
    const int d = deg_dist(rng);
    for (int k = 0; k <= d; ++k) coeffs.push_back(random_rat(rng));
    m.density[e] = Poly(std::move(coeffs));
  }
  for (auto& x : m.vertex_mass) x = random_rat(rng);
  for (auto& x : m.half_mass) x = random_rat(rng);
  m.vertex_mass[0] -= m.mass(g);
  return m;
}

GraphPoint random_point(const ReductionGraph& g, std::mt19937& rng) {
  const int picks = static_cast<int>(g.vertices.size() + g.edges.size() + g.half_edges.size());
  std::uniform_int_distribution<int> pick(0, picks - 1);
  int k = pick(rng);
  if (k < static_cast<int>(g.vertices.size())) return GraphPoint::at_vertex(k);
  k -= static_cast<int>(g.vertices.size());
  std::uniform_int_distribution<int> num(1, 11);
  if (k < static_cast<int>(g.edges.size())) {
    const Rat s = rat_of(num(rng), 12) * g.edges[k].length;
    return make_edge_point(g, k, s);
  }
  k -= static_cast<int>(g.edges.size());
  return make_half_point(g, k, rat_of(num(rng), 12));
}

}  // namespace grappa
