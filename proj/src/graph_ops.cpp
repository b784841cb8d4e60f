#include "grappa/graph_ops.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "grappa/harmonic.hpp"

namespace grappa {

namespace {

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

GraphPoint canonical_edge_point(const ReductionGraph& g, int edge, const Rat& offset) {
  if (offset == 0) return GraphPoint::at_vertex(g.edges[edge].src);
  if (offset == g.edges[edge].length) return GraphPoint::at_vertex(g.edges[edge].dst);
  return make_edge_point(g, edge, offset);
}

}  // namespace

GraphPoint GraphReduction::map_point(const GraphPoint& p) const {
  switch (p.kind) {
    case GraphPoint::Kind::vertex:
      return vertex_image[p.index];
    case GraphPoint::Kind::edge: {
      const Rat off = edge_offset[p.index] + edge_slope[p.index] * p.offset;
      return canonical_edge_point(graph, edge_target[p.index], off);
    }
    default:
      if (half_target[p.index] >= 0) return make_half_point(graph, half_target[p.index], p.offset);
      return vertex_image[source.half_edges[p.index].src];
  }
}

GraphReduction eliminate_half_edge(const ReductionGraph& g, int half) {
  if (half < 0 || half >= static_cast<int>(g.half_edges.size()))
    throw GraphError("half-edge out of range");
  GraphReduction red;
  red.source = g;
  red.graph.vertices = g.vertices;
  red.graph.edges = g.edges;
  for (int h = 0; h < static_cast<int>(g.half_edges.size()); ++h)
    if (h != half) red.graph.half_edges.push_back(g.half_edges[h]);
  red.graph.rebuild_indices();
  red.semistable = red.graph.stability() != Stability::neither;

  for (int v = 0; v < static_cast<int>(g.vertices.size()); ++v)
    red.vertex_image.push_back(GraphPoint::at_vertex(v));
  for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
    red.edge_target.push_back(e);
    red.edge_offset.push_back(Rat(0));
    red.edge_slope.push_back(Rat(1));
  }
  for (int h = 0; h < static_cast<int>(g.half_edges.size()); ++h)
    red.half_target.push_back(h == half ? -1 : red.graph.half_index.at(g.half_edges[h].id));
  return red;
}

GraphReduction resistance_reduce(const ReductionGraph& g, const std::vector<int>& c_edges,
                                 int w0, int w1) {
  if (c_edges.empty()) throw GraphError("contraction subgraph must contain an edge");
  std::set<int> cset;
  for (int e : c_edges) {
    if (e < 0 || e >= static_cast<int>(g.edges.size())) throw GraphError("edge out of range");
    if (!cset.insert(e).second) throw GraphError("repeated edge in contraction subgraph");
  }
  const int nv = static_cast<int>(g.vertices.size());
  if (w0 < 0 || w0 >= nv || w1 < 0 || w1 >= nv || w0 == w1)
    throw GraphError("w0 and w1 must be distinct vertices of C");
  std::set<int> cverts;
  for (int e : cset) {
    cverts.insert(g.edges[e].src);
    cverts.insert(g.edges[e].dst);
  }
  if (!cverts.count(w0) || !cverts.count(w1))
    throw GraphError("w0 and w1 must be distinct vertices of C");
  for (int v : cverts) {
    if (v == w0 || v == w1) continue;
    if (!g.out_halfs[v].empty()) throw GraphError("C violates the interior condition");
    for (int d : g.out_darts[v])
      if (!cset.count(g.dart_edge(d))) throw GraphError("C violates the interior condition");
  }

  ReductionGraph cg;
  std::map<int, int> cvert_local;
  for (int v : cverts) {
    cvert_local[v] = static_cast<int>(cg.vertices.size());
    cg.vertices.push_back({g.vertices[v].id, 0});
  }
  for (int e : cset)
    cg.edges.push_back(
        {g.edges[e].id, cvert_local.at(g.edges[e].src), cvert_local.at(g.edges[e].dst),
         g.edges[e].length});
  cg.rebuild_indices();

  Dsu dsu(static_cast<int>(cg.vertices.size()));
  for (const Edge& e : cg.edges) dsu.unite(e.src, e.dst);
  for (int v = 0; v < static_cast<int>(cg.vertices.size()); ++v)
    if (dsu.find(v) != dsu.find(0)) throw GraphError("contraction subgraph must be connected");

  RatVec dvr(cg.vertices.size(), Rat(0));
  dvr[cvert_local.at(w1)] = 1;
  dvr[cvert_local.at(w0)] = -1;
  RatVec phi = divisor_potential(cg, dvr);
  const Rat ground = phi[cvert_local.at(w0)];
  for (Rat& x : phi) x -= ground;
  const Rat resistance_w = phi[cvert_local.at(w1)];

  GraphReduction red;
  red.source = g;
  red.w0 = w0;
  red.w1 = w1;
  red.collapsed_edges.assign(cset.begin(), cset.end());

  std::vector<int> vmap(g.vertices.size(), -1);
  for (int v = 0; v < nv; ++v) {
    if (cverts.count(v) && v != w0 && v != w1) continue;
    vmap[v] = static_cast<int>(red.graph.vertices.size());
    red.graph.vertices.push_back(g.vertices[v]);
  }
  std::vector<int> emap(g.edges.size(), -1);
  for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
    if (cset.count(e)) continue;
    emap[e] = static_cast<int>(red.graph.edges.size());
    red.graph.edges.push_back(
        {g.edges[e].id, vmap[g.edges[e].src], vmap[g.edges[e].dst], g.edges[e].length});
  }
  std::string new_id;
  for (int e : red.collapsed_edges) {
    if (!new_id.empty()) new_id += "+";
    new_id += g.edges[e].id;
  }
  red.new_edge = static_cast<int>(red.graph.edges.size());
  red.graph.edges.push_back({new_id, vmap[w0], vmap[w1], resistance_w});
  for (const HalfEdge& h : g.half_edges) red.graph.half_edges.push_back({h.id, vmap[h.src]});
  red.graph.rebuild_indices();
  red.semistable = red.graph.stability() != Stability::neither;

  for (int v = 0; v < nv; ++v) {
    if (vmap[v] >= 0)
      red.vertex_image.push_back(GraphPoint::at_vertex(vmap[v]));
    else
      red.vertex_image.push_back(
          canonical_edge_point(red.graph, red.new_edge, phi[cvert_local.at(v)]));
  }
  for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
    if (!cset.count(e)) {
      red.edge_target.push_back(emap[e]);
      red.edge_offset.push_back(Rat(0));
      red.edge_slope.push_back(Rat(1));
    } else {
      const Rat a = phi[cvert_local.at(g.edges[e].src)];
      const Rat b = phi[cvert_local.at(g.edges[e].dst)];
      red.edge_target.push_back(red.new_edge);
      red.edge_offset.push_back(a);
      red.edge_slope.push_back((b - a) / g.edges[e].length);
    }
  }
  for (const HalfEdge& h : g.half_edges)
    red.half_target.push_back(red.graph.half_index.at(h.id));
  return red;
}

TensorVec LieMap::push_tv(const TensorVec& t) const {
  TensorVec out;
  for (const auto& [word, coeff] : t) {
    TensorVec acc;
    acc[Word{}] = Rat(1);
    for (int letter : word) {
      acc = tv_concat(acc, gen_image[letter]);
      if (acc.empty()) break;
    }
    tv_accumulate(out, acc, coeff);
  }
  return out;
}

LieElement LieMap::push(const LieElement& x) const {
  return tgt->reduce(push_tv(src->rep(x)), x.w, x.m);
}

LieMap reduction_pushforward(const LieAlgebra& src, const LieAlgebra& tgt,
                             const GraphReduction& red) {
  LieMap m;
  m.src = &src;
  m.tgt = &tgt;
  const ReductionGraph& gs = src.graph();
  const CycleSpace& cyc = src.cycle_space();
  const int ne = static_cast<int>(gs.edges.size());
  const auto& gens = src.generators();
  m.gen_image.resize(gens.size());

  const auto tgt_gen_word = [&](GenKind kind, const std::string& vertex_id, int b) -> TensorVec {
    const auto& tg = tgt.generators();
    for (size_t i = 0; i < tg.size(); ++i) {
      if (tg[i].kind != kind || tg[i].b != b) continue;
      if (tgt.graph().vertices[tg[i].a].id != vertex_id) continue;
      TensorVec t;
      t[Word{static_cast<int>(i)}] = Rat(1);
      return t;
    }
    throw GraphError("missing generator in reduced graph");
  };

  for (size_t gi = 0; gi < gens.size(); ++gi) {
    const Generator& gen = gens[gi];
    switch (gen.kind) {
      case GenKind::h1: {
        const RatVec& chain = cyc.cycles[gen.a];
        RatVec out_chain(red.graph.edges.size(), Rat(0));
        for (int e = 0; e < ne; ++e) {
          if (chain[e] == 0 || red.edge_slope[e] == 0) continue;
          const int f = red.edge_target[e];
          out_chain[f] +=
              chain[e] * red.edge_slope[e] * gs.edges[e].length / red.graph.edges[f].length;
        }
        m.gen_image[gi] = tgt.h1_tv(tgt.cycle_space().coords_of_cycle(out_chain));
        break;
      }
      case GenKind::estar: {
        RatVec rep_chain(ne, Rat(0));
        for (int j = 0; j < cyc.dim(); ++j) {
          const Rat c = cyc.gram_inv.at(gen.a, j);
          if (c == 0) continue;
          for (int e = 0; e < ne; ++e) rep_chain[e] += c * cyc.cycles[j][e];
        }
        TensorVec img;
        for (int e = 0; e < ne; ++e) {
          const Rat coeff = rep_chain[e] * gs.edges[e].length * red.edge_slope[e];
          if (coeff != 0) tv_accumulate(img, tgt.estar_tv(red.edge_target[e]), coeff);
        }
        m.gen_image[gi] = img;
        break;
      }
      case GenKind::beta:
      case GenKind::betap: {
        const GraphPoint& image = red.vertex_image[gen.a];
        const std::string& id = gs.vertices[gen.a].id;
        if (image.kind == GraphPoint::Kind::vertex && red.graph.vertex_index.count(id))
          m.gen_image[gi] = tgt_gen_word(gen.kind, id, gen.b);
        break;
      }
      case GenKind::logdelta: {
        if (red.half_target[gen.a] >= 0)
          m.gen_image[gi] = tgt.logdelta_half_tv(red.half_target[gen.a]);
        break;
      }
    }
  }
  return m;
}

bool is_cutvertex(const ReductionGraph& g, int v) {
  if (g.vertices[v].genus > 0) return true;
  const int nv = static_cast<int>(g.vertices.size());
  std::map<int, int> dart_node;
  int extra = 0;
  for (int d : g.out_darts[v]) dart_node[d] = nv + extra++;
  const int half_nodes = static_cast<int>(g.out_halfs[v].size());
  const int total = nv + extra + half_nodes;
  Dsu dsu(total);
  for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
    int a = g.edges[e].src;
    int b = g.edges[e].dst;
    const int na = a == v ? dart_node.at(2 * e) : a;
    const int nb = b == v ? dart_node.at(2 * e + 1) : b;
    dsu.unite(na, nb);
  }
  std::set<int> roots;
  for (int n = 0; n < total; ++n)
    if (n != v) roots.insert(dsu.find(n));
  return roots.size() > 1;
}

BlockDecomposition block_decomposition(const ReductionGraph& g) {
  BlockDecomposition out;
  const int nv = static_cast<int>(g.vertices.size());
  const int ne = static_cast<int>(g.edges.size());
  out.edge_block.assign(ne, -1);

  std::vector<int> disc(nv, -1), low(nv, 0);
  std::vector<bool> used(ne, false);
  std::vector<int> edge_stack;
  std::vector<std::vector<int>> comps;
  int timer = 0;

  std::function<void(int, int)> dfs = [&](int u, int parent_edge) {
    disc[u] = low[u] = timer++;
    for (int d : g.out_darts[u]) {
      const int e = g.dart_edge(d);
      const int w = g.dart_target(d);
      if (w == u) {
        if (!used[e]) {
          used[e] = true;
          comps.push_back({e});
        }
        continue;
      }
      if (e == parent_edge) continue;
      if (!used[e]) {
        used[e] = true;
        edge_stack.push_back(e);
      }
      if (disc[w] == -1) {
        dfs(w, e);
        low[u] = std::min(low[u], low[w]);
        if (low[w] >= disc[u]) {
          std::vector<int> comp;
          while (true) {
            const int f = edge_stack.back();
            edge_stack.pop_back();
            comp.push_back(f);
            if (f == e) break;
          }
          comps.push_back(std::move(comp));
        }
      } else {
        low[u] = std::min(low[u], disc[w]);
      }
    }
  };
  for (int v = 0; v < nv; ++v)
    if (disc[v] == -1) dfs(v, -1);

  for (auto& comp : comps) {
    std::sort(comp.begin(), comp.end());
    Block b;
    std::set<int> vs;
    for (int e : comp) {
      vs.insert(g.edges[e].src);
      vs.insert(g.edges[e].dst);
    }
    b.vertices.assign(vs.begin(), vs.end());
    b.edges = comp;
    const bool single_bridge = comp.size() == 1 && g.edges[comp[0]].src != g.edges[comp[0]].dst;
    b.kind = single_bridge ? Block::Kind::bridge : Block::Kind::two_connected;
    for (int e : comp) out.edge_block[e] = static_cast<int>(out.blocks.size());
    out.blocks.push_back(std::move(b));
  }
  for (int h = 0; h < static_cast<int>(g.half_edges.size()); ++h) {
    Block b;
    b.kind = Block::Kind::half_edge;
    b.half_edge = h;
    b.vertices = {g.half_edges[h].src};
    out.blocks.push_back(std::move(b));
  }
  for (int v = 0; v < nv; ++v) {
    if (g.vertices[v].genus == 0) continue;
    Block b;
    b.kind = Block::Kind::genus_vertex;
    b.vertex = v;
    b.vertices = {v};
    out.blocks.push_back(std::move(b));
  }

  for (int v = 0; v < nv; ++v)
    if (is_cutvertex(g, v)) out.cutvertices.push_back(v);
  for (int cv : out.cutvertices) {
    std::vector<int> touching;
    for (int b = 0; b < static_cast<int>(out.blocks.size()); ++b)
      if (std::binary_search(out.blocks[b].vertices.begin(), out.blocks[b].vertices.end(), cv))
        touching.push_back(b);
    out.blocks_at_cutvertex.push_back(std::move(touching));
  }

  const int nodes = static_cast<int>(out.blocks.size() + out.cutvertices.size());
  int incidences = 0;
  Dsu dsu(nodes);
  for (size_t i = 0; i < out.cutvertices.size(); ++i)
    for (int b : out.blocks_at_cutvertex[i]) {
      dsu.unite(b, static_cast<int>(out.blocks.size() + i));
      ++incidences;
    }
  std::set<int> roots;
  for (int n = 0; n < nodes; ++n) roots.insert(dsu.find(n));
  out.incidence_is_tree = roots.size() <= 1 && incidences == nodes - 1;
  if (nodes == 1) out.incidence_is_tree = true;
  return out;
}

std::vector<CutSystem> maximal_cut_systems(const ReductionGraph& g) {
  const CycleSpace cyc = build_cycles(g);
  std::vector<CutSystem> out;
  std::map<RatVec, int> class_index;
  for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
    RatVec coords = cyc.estar_coords(e);
    if (is_zero_vec(coords)) continue;
    int sign = 0;
    for (const Rat& c : coords) {
      if (c != 0) {
        sign = c > 0 ? 1 : -1;
        break;
      }
    }
    if (sign < 0)
      for (Rat& c : coords) c = -c;
    auto [it, fresh] = class_index.try_emplace(coords, static_cast<int>(out.size()));
    if (fresh) out.push_back(CutSystem{});
    CutSystem& sys = out[it->second];
    sys.edges.push_back(e);
    sys.signs.push_back(sign);
    sys.total_length += g.edges[e].length;
  }
  for (CutSystem& sys : out) {
    const int align = sys.signs[0];
    if (align < 0)
      for (int& s : sys.signs) s = -s;
  }
  std::sort(out.begin(), out.end(),
            [](const CutSystem& a, const CutSystem& b) { return a.edges[0] < b.edges[0]; });
  return out;
}

namespace {

struct InvolutionSearch {
  const ReductionGraph& g;
  std::vector<int> verts;
  std::map<int, int> vpos;
  struct LocalEdge {
    int a = 0;
    int b = 0;
    Rat len;
    int gedge = 0;
  };
  std::vector<LocalEdge> ledges;
  std::vector<std::vector<int>> incident;
  std::vector<bool> fixed;
  std::vector<std::vector<Rat>> len_profile;
  std::vector<int> order;
  std::vector<int> sv, se;
  std::vector<bool> srev;
  std::optional<Involution> result;

  explicit InvolutionSearch(const ReductionGraph& graph) : g(graph) {}

  bool vertex_compatible(int u, int t) const {
    if (fixed[u] != fixed[t]) return false;
    if (fixed[u] && u != t) return false;
    if (g.vertices[verts[u]].genus != g.vertices[verts[t]].genus) return false;
    return len_profile[u] == len_profile[t];
  }

  bool neighbors_plausible(int u, int t) const {
    for (int le : incident[u]) {
      const LocalEdge& e = ledges[le];
      const int w = e.a == u ? e.b : e.a;
      if (w == u || sv[w] < 0) continue;
      bool found = false;
      for (int fe : incident[t]) {
        const LocalEdge& f = ledges[fe];
        const int z = f.a == t ? f.b : f.a;
        if (z != t && z == sv[w] && f.len == e.len) {
          found = true;
          break;
        }
      }
      if (!found) return false;
    }
    return true;
  }

  bool assign_vertices(size_t k) {
    if (k == order.size()) return assign_edges(0);
    const int u = order[k];
    if (sv[u] >= 0) return assign_vertices(k + 1);
    for (int t = 0; t < static_cast<int>(verts.size()); ++t) {
      if (sv[t] >= 0 && sv[t] != u) continue;
      if (!vertex_compatible(u, t)) continue;
      sv[u] = t;
      sv[t] = u;
      if (neighbors_plausible(u, t) && neighbors_plausible(t, u)) {
        if (assign_vertices(k + 1)) return true;
      }
      sv[u] = -1;
      if (t != u) sv[t] = -1;
    }
    return false;
  }

  bool assign_edges(int k) {
    const int m = static_cast<int>(ledges.size());
    while (k < m && se[k] >= 0) ++k;
    if (k == m) return finish();
    const LocalEdge& e = ledges[k];
    const int ia = sv[e.a];
    const int ib = sv[e.b];
    for (int f = 0; f < m; ++f) {
      if (se[f] >= 0 && f != k) continue;
      const LocalEdge& fe = ledges[f];
      if (fe.len != e.len) continue;
      const bool straight = fe.a == ia && fe.b == ib;
      const bool crossed = fe.a == ib && fe.b == ia;
      if (!straight && !crossed) continue;
      const bool is_loop = e.a == e.b;
      std::vector<bool> rev_choices;
      if (is_loop)
        rev_choices = {false, true};
      else if (f == k)
        rev_choices = {crossed};
      else
        rev_choices = {crossed};
      for (bool rev : rev_choices) {
        se[k] = f;
        se[f] = k;
        srev[k] = rev;
        srev[f] = rev;
        if (assign_edges(k + 1)) return true;
        se[k] = se[f] = -1;
      }
    }
    return false;
  }

  bool finish() {
    int vorbits = 0;
    for (int u = 0; u < static_cast<int>(verts.size()); ++u)
      if (sv[u] >= u) ++vorbits;
    int eorbits = 0, folded = 0;
    for (int e = 0; e < static_cast<int>(ledges.size()); ++e) {
      if (se[e] >= e) ++eorbits;
      if (se[e] == e && srev[e]) ++folded;
    }
    if (vorbits + folded - eorbits != 1) return false;

    Involution inv;
    inv.vertex_map.resize(g.vertices.size());
    std::iota(inv.vertex_map.begin(), inv.vertex_map.end(), 0);
    inv.edge_map.resize(g.edges.size());
    std::iota(inv.edge_map.begin(), inv.edge_map.end(), 0);
    inv.edge_reversed.assign(g.edges.size(), false);
    for (int u = 0; u < static_cast<int>(verts.size()); ++u)
      inv.vertex_map[verts[u]] = verts[sv[u]];
    for (int e = 0; e < static_cast<int>(ledges.size()); ++e) {
      inv.edge_map[ledges[e].gedge] = ledges[se[e]].gedge;
      inv.edge_reversed[ledges[e].gedge] = srev[e];
    }
    result = inv;
    return true;
  }
};

}  // namespace

std::optional<Involution> find_swap_involution(const ReductionGraph& g,
                                               const std::vector<int>& component_edges,
                                               int x, int y,
                                               const std::vector<int>& fixed_vertices) {
  InvolutionSearch search(g);
  std::set<int> vset;
  for (int e : component_edges) {
    vset.insert(g.edges[e].src);
    vset.insert(g.edges[e].dst);
  }
  if (!vset.count(x) || !vset.count(y) || x == y) return std::nullopt;
  search.verts.assign(vset.begin(), vset.end());
  for (int i = 0; i < static_cast<int>(search.verts.size()); ++i)
    search.vpos[search.verts[i]] = i;

  const std::set<int> fixed_set(fixed_vertices.begin(), fixed_vertices.end());
  search.fixed.resize(search.verts.size());
  for (size_t i = 0; i < search.verts.size(); ++i)
    search.fixed[i] = fixed_set.count(search.verts[i]) > 0;

  search.incident.resize(search.verts.size());
  for (int e : component_edges) {
    InvolutionSearch::LocalEdge le;
    le.a = search.vpos.at(g.edges[e].src);
    le.b = search.vpos.at(g.edges[e].dst);
    le.len = g.edges[e].length;
    le.gedge = e;
    const int idx = static_cast<int>(search.ledges.size());
    search.incident[le.a].push_back(idx);
    if (le.b != le.a) search.incident[le.b].push_back(idx);
    search.ledges.push_back(le);
  }
  search.len_profile.resize(search.verts.size());
  for (size_t u = 0; u < search.verts.size(); ++u) {
    std::vector<Rat> prof;
    for (int le : search.incident[u]) {
      prof.push_back(search.ledges[le].len);
      if (search.ledges[le].a == search.ledges[le].b) prof.push_back(search.ledges[le].len);
    }
    std::sort(prof.begin(), prof.end());
    search.len_profile[u] = std::move(prof);
  }

  const int lx = search.vpos.at(x);
  const int ly = search.vpos.at(y);
  search.sv.assign(search.verts.size(), -1);
  search.se.assign(search.ledges.size(), -1);
  search.srev.assign(search.ledges.size(), false);
  if (!search.vertex_compatible(lx, ly)) return std::nullopt;
  search.sv[lx] = ly;
  search.sv[ly] = lx;

  std::vector<bool> seen(search.verts.size(), false);
  std::vector<int> queue = {lx};
  seen[lx] = true;
  for (size_t head = 0; head < queue.size(); ++head) {
    const int u = queue[head];
    search.order.push_back(u);
    for (int le : search.incident[u]) {
      const auto& e = search.ledges[le];
      for (int w : {e.a, e.b}) {
        if (!seen[w]) {
          seen[w] = true;
          queue.push_back(w);
        }
      }
    }
  }
  if (search.order.size() != search.verts.size()) return std::nullopt;

  search.assign_vertices(0);
  return search.result;
}

Weight2Fiber weight2_fiber(const ReductionGraph& g, const GraphPoint& x, const GraphPoint& y) {
  if (g.stability() != Stability::stable) throw GraphError("unstable graph");
  if (x == y) throw GraphError("points must be distinct");
  Weight2Fiber out;
  const Subdivision sub = subdivide_at(g, {x, y});
  out.subdivided = sub.graph;
  const GraphPoint px = sub.locate(g, x);
  const GraphPoint py = sub.locate(g, y);
  out.x_vertex = px.index;
  out.y_vertex = py.index;
  const ReductionGraph& gg = out.subdivided;

  PPMeasure nu = PPMeasure::zero(gg);
  nu.vertex_mass[py.index] += 1;
  nu.vertex_mass[px.index] -= 1;
  const PPFunction f = inv_laplacian(gg, nu);

  std::vector<Rat> constraints;
  for (const CutSystem& sys : maximal_cut_systems(gg)) {
    Rat total(0);
    for (int e : sys.edges)
      total += gg.edges[e].length *
               (f.vertex_value[gg.edges[e].src] + f.vertex_value[gg.edges[e].dst]) / 2;
    constraints.push_back(total / sys.total_length);
  }
  for (int v = 0; v < static_cast<int>(gg.vertices.size()); ++v)
    if (gg.vertices[v].genus > 0 || !gg.out_halfs[v].empty())
      constraints.push_back(f.vertex_value[v]);
  out.equal = true;
  for (const Rat& c : constraints)
    if (c != constraints[0]) out.equal = false;

  LieAlgebra lie(gg);
  const KummerMap km = kummer_map(lie, gg.base_vertex(), 2);
  const auto jx = kummer_at(lie, km, px);
  const auto jy = kummer_at(lie, km, py);
  out.j2_equal = jx[1].coords == jy[1].coords;

  if (out.equal) {
    const BlockDecomposition bd = block_decomposition(gg);
    for (const Block& b : bd.blocks) {
      if (b.kind != Block::Kind::two_connected) continue;
      if (!std::binary_search(b.vertices.begin(), b.vertices.end(), px.index)) continue;
      if (!std::binary_search(b.vertices.begin(), b.vertices.end(), py.index)) continue;
      std::vector<int> fixed;
      for (int cv : bd.cutvertices)
        if (std::binary_search(b.vertices.begin(), b.vertices.end(), cv)) fixed.push_back(cv);
      out.witness = find_swap_involution(gg, b.edges, px.index, py.index, fixed);
      break;
    }
  }
  return out;
}

InjectivityCensus injectivity_census(const ReductionGraph& g, int denominator, int depth) {
  if (denominator < 1) throw GraphError("denominator must be positive");
  if (depth < 2) throw GraphError("depth must be at least two");
  if (g.stability() != Stability::stable) throw GraphError("unstable graph");

  InjectivityCensus rep;
  rep.denominator = denominator;
  rep.depth = depth;
  for (int v = 0; v < static_cast<int>(g.vertices.size()); ++v)
    rep.points.push_back(GraphPoint::at_vertex(v));
  for (int e = 0; e < static_cast<int>(g.edges.size()); ++e)
    for (int k = 1; rat_of(k, denominator) < g.edges[e].length; ++k)
      rep.points.push_back(make_edge_point(g, e, rat_of(k, denominator)));
  for (int h = 0; h < static_cast<int>(g.half_edges.size()); ++h)
    for (int k = 1; k <= denominator; ++k)
      rep.points.push_back(make_half_point(g, h, rat_of(k, denominator)));

  LieAlgebra lie(g);
  const KummerMap km = kummer_map(lie, g.base_vertex(), depth);
  std::vector<std::vector<LieElement>> values;
  values.reserve(rep.points.size());
  for (const GraphPoint& p : rep.points) values.push_back(kummer_at(lie, km, p));

  const auto key_through = [&](size_t i, int wmax) {
    RatVec key;
    for (int w = 1; w <= wmax; ++w)
      for (const Rat& c : values[i][w - 1].coords) key.push_back(c);
    return key;
  };

  std::map<RatVec, std::vector<int>> shallow;
  for (size_t i = 0; i < rep.points.size(); ++i)
    shallow[key_through(i, 2)].push_back(static_cast<int>(i));
  rep.all_explained = true;
  for (const auto& [key, members] : shallow) {
    for (size_t i = 0; i < members.size(); ++i) {
      for (size_t j = i + 1; j < members.size(); ++j) {
        CensusCollision col;
        col.a = rep.points[members[i]];
        col.b = rep.points[members[j]];
        const Weight2Fiber wf = weight2_fiber(g, col.a, col.b);
        col.involution_found = wf.witness.has_value();
        col.criteria_agree = wf.equal && wf.j2_equal;
        if (!col.involution_found || !col.criteria_agree) rep.all_explained = false;
        rep.weight2_pairs.push_back(std::move(col));
      }
    }
  }
  std::map<RatVec, int> deep;
  for (size_t i = 0; i < rep.points.size(); ++i) ++deep[key_through(i, depth)];
  for (const auto& [key, count] : deep) rep.deep_collisions += count * (count - 1) / 2;
  return rep;
}

}  // namespace grappa
