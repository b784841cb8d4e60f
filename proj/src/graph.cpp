#include "grappa/graph.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

#include "json.hpp"

namespace grappa {

namespace {

using nlohmann::json;

void check_id(const std::string& id) {
  if (id.empty()) throw GraphError("duplicate id");
  for (char c : id)
    if (std::isspace(static_cast<unsigned char>(c)))
      throw GraphError("malformed id");
}

Rat parse_length(const json& j) {
  if (!j.is_string()) throw GraphError("malformed rational");
  Rat r;
  try {
    r = parse_rat(j.get<std::string>());
  } catch (const ParseError&) {
    throw GraphError("malformed rational");
  }
  return r;
}

}  // namespace

long ReductionGraph::total_genus() const {
  long g = betti();
  for (const auto& v : vertices) g += v.genus;
  return g;
}

long ReductionGraph::euler_char() const {
  return 2 - 2 * total_genus() - static_cast<long>(half_edges.size());
}

std::vector<Rat> ReductionGraph::canonical_divisor() const {
  std::vector<Rat> k(vertices.size(), Rat(0));
  for (size_t v = 0; v < vertices.size(); ++v)
    k[v] = Rat(2 * vertices[v].genus + valence(static_cast<int>(v)) - 2);
  return k;
}

Stability ReductionGraph::stability() const {
  bool stable = true;
  for (size_t v = 0; v < vertices.size(); ++v) {
    const long s = 2 * vertices[v].genus + degree(static_cast<int>(v));
    if (s < 2) return Stability::neither;
    if (s == 2) stable = false;
  }
  return stable ? Stability::stable : Stability::semistable;
}

int ReductionGraph::base_vertex() const {
  int best = 0;
  for (size_t v = 1; v < vertices.size(); ++v)
    if (vertices[v].id < vertices[best].id) best = static_cast<int>(v);
  return best;
}

void ReductionGraph::rebuild_indices() {
  vertex_index.clear();
  edge_index.clear();
  half_index.clear();
  std::set<std::string> all_ids;
  const auto claim = [&all_ids](const std::string& id) {
    check_id(id);
    if (!all_ids.insert(id).second) throw GraphError("duplicate id");
  };
  for (size_t i = 0; i < vertices.size(); ++i) {
    claim(vertices[i].id);
    vertex_index[vertices[i].id] = static_cast<int>(i);
  }
  for (size_t i = 0; i < edges.size(); ++i) {
    claim(edges[i].id);
    edge_index[edges[i].id] = static_cast<int>(i);
  }
  for (size_t i = 0; i < half_edges.size(); ++i) {
    claim(half_edges[i].id);
    half_index[half_edges[i].id] = static_cast<int>(i);
  }

  const int nv = static_cast<int>(vertices.size());
  for (const auto& e : edges) {
    if (e.src < 0 || e.src >= nv || e.dst < 0 || e.dst >= nv)
      throw GraphError("dangling endpoint");
    if (e.length <= 0) throw GraphError("non-positive length");
  }
  for (const auto& h : half_edges)
    if (h.src < 0 || h.src >= nv) throw GraphError("dangling endpoint");

  out_darts.assign(nv, {});
  out_halfs.assign(nv, {});
  for (int d = 0; d < num_darts(); ++d) out_darts[dart_source(d)].push_back(d);
  for (size_t i = 0; i < half_edges.size(); ++i)
    out_halfs[half_edges[i].src].push_back(static_cast<int>(i));
  for (auto& darts : out_darts)
    std::sort(darts.begin(), darts.end(), [this](int a, int b) {
      const std::string& ia = edges[a / 2].id;
      const std::string& ib = edges[b / 2].id;
      if (ia != ib) return ia < ib;
      return a < b;
    });
  for (auto& halfs : out_halfs)
    std::sort(halfs.begin(), halfs.end(), [this](int a, int b) {
      return half_edges[a].id < half_edges[b].id;
    });

  if (vertices.empty()) throw GraphError("disconnected graph");
  std::vector<int> comp(nv, -1);
  std::vector<int> stack = {0};
  comp[0] = 0;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int d : out_darts[v]) {
      const int w = dart_target(d);
      if (comp[w] < 0) {
        comp[w] = 0;
        stack.push_back(w);
      }
    }
  }
  for (int v = 0; v < nv; ++v)
    if (comp[v] < 0) throw GraphError("disconnected graph");
}

ReductionGraph parse_graph(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception&) {
    throw GraphError("malformed json");
  }
  if (!j.is_object()) throw GraphError("malformed json");

  ReductionGraph g;
  std::map<std::string, int> vid;
  try {
  for (const auto& jv : j.value("vertices", json::array())) {
    Vertex v;
    v.id = jv.at("id").get<std::string>();
    if (jv.contains("genus")) {
      if (!jv["genus"].is_number_integer() || jv["genus"].get<long>() < 0)
        throw GraphError("malformed genus");
      v.genus = jv["genus"].get<long>();
    }
    g.vertices.push_back(v);
  }
  std::sort(g.vertices.begin(), g.vertices.end(),
            [](const Vertex& a, const Vertex& b) { return a.id < b.id; });
  for (size_t i = 0; i < g.vertices.size(); ++i) vid[g.vertices[i].id] = static_cast<int>(i);

  const auto vertex_of = [&vid](const std::string& id) {
    const auto it = vid.find(id);
    if (it == vid.end()) throw GraphError("dangling endpoint");
    return it->second;
  };

  for (const auto& je : j.value("edges", json::array())) {
    Edge e;
    e.id = je.at("id").get<std::string>();
    e.src = vertex_of(je.at("src").get<std::string>());
    e.dst = vertex_of(je.at("dst").get<std::string>());
    e.length = parse_length(je.at("length"));
    if (e.length <= 0) throw GraphError("non-positive length");
    g.edges.push_back(e);
  }
  std::sort(g.edges.begin(), g.edges.end(),
            [](const Edge& a, const Edge& b) { return a.id < b.id; });
  // Canonical chart per unoriented edge: from the lexicographically smaller
  // endpoint.
  for (auto& e : g.edges)
    if (g.vertices[e.dst].id < g.vertices[e.src].id) std::swap(e.src, e.dst);

  for (const auto& jh : j.value("half_edges", json::array())) {
    HalfEdge h;
    h.id = jh.at("id").get<std::string>();
    h.src = vertex_of(jh.at("src").get<std::string>());
    g.half_edges.push_back(h);
  }
  std::sort(g.half_edges.begin(), g.half_edges.end(),
            [](const HalfEdge& a, const HalfEdge& b) { return a.id < b.id; });
  } catch (const json::exception&) {
    throw GraphError("malformed json");
  }

  g.rebuild_indices();
  return g;
}

ReductionGraph load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw GraphError("cannot open file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_graph(ss.str());
}

std::string serialize_graph(const ReductionGraph& g) {
  json j;
  j["vertices"] = json::array();
  for (const auto& v : g.vertices)
    j["vertices"].push_back({{"id", v.id}, {"genus", v.genus}});
  j["edges"] = json::array();
  for (const auto& e : g.edges)
    j["edges"].push_back({{"id", e.id},
                          {"src", g.vertices[e.src].id},
                          {"dst", g.vertices[e.dst].id},
                          {"length", rat_to_string(e.length)}});
  j["half_edges"] = json::array();
  for (const auto& h : g.half_edges)
    j["half_edges"].push_back({{"id", h.id}, {"src", g.vertices[h.src].id}});
  return j.dump(2) + "\n";
}

std::string graph_hash(const ReductionGraph& g) {
  std::string canon;
  for (const auto& v : g.vertices)
    canon += "v:" + v.id + ":" + std::to_string(v.genus) + ";";
  for (const auto& e : g.edges)
    canon += "e:" + e.id + ":" + g.vertices[e.src].id + ":" + g.vertices[e.dst].id +
             ":" + rat_to_string(e.length) + ";";
  for (const auto& h : g.half_edges) canon += "h:" + h.id + ":" + g.vertices[h.src].id + ";";
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(fnv1a(canon)));
  return std::string(buf);
}

std::string stability_name(Stability s) {
  switch (s) {
    case Stability::stable: return "stable";
    case Stability::semistable: return "semistable";
    default: return "neither";
  }
}

GraphPoint make_edge_point(const ReductionGraph& g, int edge, const Rat& offset) {
  const Edge& e = g.edges[edge];
  if (offset < 0 || offset > e.length) throw GraphError("point outside edge");
  if (offset == 0) return GraphPoint::at_vertex(e.src);
  if (offset == e.length) return GraphPoint::at_vertex(e.dst);
  return {GraphPoint::Kind::edge, edge, offset};
}

GraphPoint make_half_point(const ReductionGraph& g, int half, const Rat& offset) {
  if (offset < 0) throw GraphError("point outside edge");
  if (offset == 0) return GraphPoint::at_vertex(g.half_edges[half].src);
  return {GraphPoint::Kind::half_edge, half, offset};
}

GraphPoint parse_point(const ReductionGraph& g, const std::string& text) {
  const auto vit = g.vertex_index.find(text);
  if (vit != g.vertex_index.end()) return GraphPoint::at_vertex(vit->second);
  const size_t at = text.rfind('@');
  if (at == std::string::npos) throw GraphError("unknown point: " + text);
  std::string name = text.substr(0, at);
  const Rat offset = [&] {
    try {
      return parse_rat(text.substr(at + 1));
    } catch (const ParseError&) {
      throw GraphError("malformed rational");
    }
  }();
  bool reversed = false;
  auto eit = g.edge_index.find(name);
  if (eit == g.edge_index.end() && !name.empty() && name.back() == '\'') {
    name.pop_back();
    eit = g.edge_index.find(name);
    reversed = true;
  }
  if (eit != g.edge_index.end()) {
    const Rat s = reversed ? g.edges[eit->second].length - offset : offset;
    return make_edge_point(g, eit->second, s);
  }
  const auto hit = g.half_index.find(name);
  if (hit != g.half_index.end() && !reversed) return make_half_point(g, hit->second, offset);
  throw GraphError("unknown point: " + text);
}

std::string point_to_string(const ReductionGraph& g, const GraphPoint& p) {
  switch (p.kind) {
    case GraphPoint::Kind::vertex: return g.vertices[p.index].id;
    case GraphPoint::Kind::edge:
      return g.edges[p.index].id + "@" + rat_to_string(p.offset);
    default: return g.half_edges[p.index].id + "@" + rat_to_string(p.offset);
  }
}

GraphPoint Subdivision::locate(const ReductionGraph& original, const GraphPoint& p) const {
  switch (p.kind) {
    case GraphPoint::Kind::vertex:
      return GraphPoint::at_vertex(vertex_map[p.index]);
    case GraphPoint::Kind::edge: {
      const auto& cuts = edge_cuts[p.index];
      const auto& chain = edge_chain[p.index];
      Rat lo(0);
      for (size_t i = 0; i < chain.size(); ++i) {
        const Rat hi = i < cuts.size() ? cuts[i] : original.edges[p.index].length;
        if (p.offset <= hi) return make_edge_point(graph, chain[i], p.offset - lo);
        lo = hi;
      }
      throw GraphError("point outside edge");
    }
    default: {
      const auto& cuts = half_cuts[p.index];
      const auto& chain = half_chain[p.index];
      Rat lo(0);
      for (size_t i = 0; i < chain.size(); ++i) {
        if (p.offset <= cuts[i]) return make_edge_point(graph, chain[i], p.offset - lo);
        lo = cuts[i];
      }
      return make_half_point(graph, half_tail[p.index], p.offset - lo);
    }
  }
}

std::vector<Rat> Subdivision::push_cycle(const ReductionGraph& original,
                                         const std::vector<Rat>& edge_coeffs) const {
  std::vector<Rat> out(graph.edges.size(), Rat(0));
  for (size_t e = 0; e < original.edges.size(); ++e)
    for (int ne : edge_chain[e]) out[ne] += edge_coeffs[e];
  return out;
}

Subdivision subdivide_at(const ReductionGraph& g, const std::vector<GraphPoint>& points) {
  std::vector<std::set<Rat>> edge_cut_sets(g.edges.size());
  std::vector<std::set<Rat>> half_cut_sets(g.half_edges.size());
  for (const auto& p : points) {
    if (p.kind == GraphPoint::Kind::edge) edge_cut_sets[p.index].insert(p.offset);
    if (p.kind == GraphPoint::Kind::half_edge) half_cut_sets[p.index].insert(p.offset);
  }

  Subdivision sub;
  ReductionGraph& ng = sub.graph;
  ng.vertices = g.vertices;
  sub.vertex_map.resize(g.vertices.size());
  std::iota(sub.vertex_map.begin(), sub.vertex_map.end(), 0);

  std::set<std::string> used;
  for (const auto& v : g.vertices) used.insert(v.id);
  for (const auto& e : g.edges) used.insert(e.id);
  for (const auto& h : g.half_edges) used.insert(h.id);
  const auto fresh = [&used](std::string base) {
    while (used.count(base)) base += "_";
    used.insert(base);
    return base;
  };
  const auto add_vertex = [&ng, &fresh](const std::string& base) {
    const int idx = static_cast<int>(ng.vertices.size());
    ng.vertices.push_back({fresh(base), 0});
    return idx;
  };

  sub.edge_chain.resize(g.edges.size());
  sub.edge_cuts.resize(g.edges.size());
  for (size_t e = 0; e < g.edges.size(); ++e) {
    const Edge& orig = g.edges[e];
    const std::vector<Rat> cuts(edge_cut_sets[e].begin(), edge_cut_sets[e].end());
    sub.edge_cuts[e] = cuts;
    if (cuts.empty()) {
      sub.edge_chain[e].push_back(static_cast<int>(ng.edges.size()));
      ng.edges.push_back(orig);
      continue;
    }
    int prev = orig.src;
    Rat lo(0);
    for (size_t i = 0; i <= cuts.size(); ++i) {
      const Rat hi = i < cuts.size() ? cuts[i] : orig.length;
      const int next = i < cuts.size()
                           ? add_vertex(orig.id + "@" + rat_to_string(cuts[i]))
                           : orig.dst;
      Edge part;
      part.id = fresh(orig.id + ":" + std::to_string(i + 1));
      part.src = prev;
      part.dst = next;
      part.length = hi - lo;
      sub.edge_chain[e].push_back(static_cast<int>(ng.edges.size()));
      ng.edges.push_back(part);
      prev = next;
      lo = hi;
    }
  }

  sub.half_chain.resize(g.half_edges.size());
  sub.half_cuts.resize(g.half_edges.size());
  sub.half_tail.resize(g.half_edges.size());
  for (size_t h = 0; h < g.half_edges.size(); ++h) {
    const HalfEdge& orig = g.half_edges[h];
    const std::vector<Rat> cuts(half_cut_sets[h].begin(), half_cut_sets[h].end());
    sub.half_cuts[h] = cuts;
    int prev = orig.src;
    Rat lo(0);
    for (size_t i = 0; i < cuts.size(); ++i) {
      const int next = add_vertex(orig.id + "@" + rat_to_string(cuts[i]));
      Edge part;
      part.id = fresh(orig.id + ":" + std::to_string(i + 1));
      part.src = prev;
      part.dst = next;
      part.length = cuts[i] - lo;
      sub.half_chain[h].push_back(static_cast<int>(ng.edges.size()));
      ng.edges.push_back(part);
      prev = next;
      lo = cuts[i];
    }
    sub.half_tail[h] = static_cast<int>(ng.half_edges.size());
    ng.half_edges.push_back({orig.id, prev});
  }

  ng.rebuild_indices();
  return sub;
}

std::pair<ReductionGraph, std::string> subdivide(const ReductionGraph& g, const GraphPoint& p) {
  Subdivision sub = subdivide_at(g, {p});
  const GraphPoint q = sub.locate(g, p);
  return {sub.graph, sub.graph.vertices[q.index].id};
}

}  // namespace grappa
