#include "grappa/harmonic.hpp"

#include <algorithm>

#include "json.hpp"

namespace grappa {

using nlohmann::json;

PPMeasure PPMeasure::zero(const ReductionGraph& g) {
  PPMeasure m;
  m.density.assign(g.edges.size(), Poly());
  m.vertex_mass.assign(g.vertices.size(), Rat(0));
  m.half_mass.assign(g.half_edges.size(), Rat(0));
  return m;
}

Rat PPMeasure::mass(const ReductionGraph& g) const {
  Rat total(0);
  for (size_t e = 0; e < density.size(); ++e)
    total += density[e].integral(Rat(0), g.edges[e].length);
  for (const auto& x : vertex_mass) total += x;
  for (const auto& x : half_mass) total += x;
  return total;
}

bool PPMeasure::is_zero() const {
  for (const auto& p : density)
    if (!p.is_zero()) return false;
  return is_zero_vec(vertex_mass) && is_zero_vec(half_mass);
}

PPMeasure operator+(const PPMeasure& x, const PPMeasure& y) {
  PPMeasure z = x;
  for (size_t i = 0; i < z.density.size(); ++i) z.density[i] = z.density[i] + y.density[i];
  z.vertex_mass = vec_add(z.vertex_mass, y.vertex_mass);
  z.half_mass = vec_add(z.half_mass, y.half_mass);
  return z;
}

PPMeasure operator-(const PPMeasure& x, const PPMeasure& y) {
  PPMeasure z = x;
  for (size_t i = 0; i < z.density.size(); ++i) z.density[i] = z.density[i] - y.density[i];
  z.vertex_mass = vec_sub(z.vertex_mass, y.vertex_mass);
  z.half_mass = vec_sub(z.half_mass, y.half_mass);
  return z;
}

PPMeasure operator*(const Rat& c, const PPMeasure& x) {
  PPMeasure z = x;
  for (auto& p : z.density) p = c * p;
  z.vertex_mass = vec_scale(c, z.vertex_mass);
  z.half_mass = vec_scale(c, z.half_mass);
  return z;
}

bool operator==(const PPMeasure& x, const PPMeasure& y) {
  return x.density == y.density && x.vertex_mass == y.vertex_mass &&
         x.half_mass == y.half_mass;
}

PPMeasure parse_measure(const ReductionGraph& g, const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception&) {
    throw GraphError("malformed json");
  }
  PPMeasure m = PPMeasure::zero(g);
  const auto rat_at = [](const json& v) {
    if (!v.is_string()) throw GraphError("malformed rational");
    try {
      return parse_rat(v.get<std::string>());
    } catch (const ParseError&) {
      throw GraphError("malformed rational");
    }
  };
  try {
    for (const auto& je : j.value("edges", json::array())) {
      const auto it = g.edge_index.find(je.at("id").get<std::string>());
      if (it == g.edge_index.end()) throw GraphError("unknown edge");
      std::vector<Rat> coeffs;
      for (const auto& c : je.at("density")) coeffs.push_back(rat_at(c));
      m.density[it->second] = Poly(std::move(coeffs));
    }
    for (const auto& jv : j.value("vertices", json::array())) {
      const auto it = g.vertex_index.find(jv.at("id").get<std::string>());
      if (it == g.vertex_index.end()) throw GraphError("unknown vertex");
      m.vertex_mass[it->second] = rat_at(jv.at("mass"));
    }
    for (const auto& jh : j.value("half_edges", json::array())) {
      const auto it = g.half_index.find(jh.at("id").get<std::string>());
      if (it == g.half_index.end()) throw GraphError("unknown half-edge");
      m.half_mass[it->second] = rat_at(jh.at("mass"));
    }
  } catch (const json::exception&) {
    throw GraphError("malformed json");
  }
  return m;
}

std::string serialize_measure(const ReductionGraph& g, const PPMeasure& m) {
  json j;
  j["edges"] = json::array();
  for (size_t e = 0; e < g.edges.size(); ++e) {
    if (m.density[e].is_zero()) continue;
    json coeffs = json::array();
    for (const auto& c : m.density[e].c) coeffs.push_back(rat_to_string(c));
    j["edges"].push_back({{"id", g.edges[e].id}, {"density", coeffs}});
  }
  j["vertices"] = json::array();
  for (size_t v = 0; v < g.vertices.size(); ++v) {
    if (m.vertex_mass[v] == 0) continue;
    j["vertices"].push_back({{"id", g.vertices[v].id}, {"mass", rat_to_string(m.vertex_mass[v])}});
  }
  j["half_edges"] = json::array();
  for (size_t h = 0; h < g.half_edges.size(); ++h) {
    if (m.half_mass[h] == 0) continue;
    j["half_edges"].push_back({{"id", g.half_edges[h].id}, {"mass", rat_to_string(m.half_mass[h])}});
  }
  return j.dump(2) + "\n";
}

PPFunction PPFunction::zero(const ReductionGraph& g) {
  PPFunction f;
  f.edge_fn.assign(g.edges.size(), Poly());
  f.half_fn.assign(g.half_edges.size(), Poly());
  f.vertex_value.assign(g.vertices.size(), Rat(0));
  return f;
}

Rat PPFunction::value_at(const ReductionGraph& g, const GraphPoint& p) const {
  switch (p.kind) {
    case GraphPoint::Kind::vertex: return vertex_value[p.index];
    case GraphPoint::Kind::edge: return edge_fn[p.index].eval(p.offset);
    default: return half_fn[p.index].eval(p.offset);
  }
}

void PPFunction::check_continuity(const ReductionGraph& g) const {
  for (size_t e = 0; e < g.edges.size(); ++e) {
    if (edge_fn[e].eval(Rat(0)) != vertex_value[g.edges[e].src] ||
        edge_fn[e].eval(g.edges[e].length) != vertex_value[g.edges[e].dst])
      throw GraphError("discontinuous function");
  }
  for (size_t h = 0; h < g.half_edges.size(); ++h) {
    if (half_fn[h].degree() > 1) throw GraphError("non-affine half-edge function");
    if (half_fn[h].eval(Rat(0)) != vertex_value[g.half_edges[h].src])
      throw GraphError("discontinuous function");
  }
}

PPFunction operator+(const PPFunction& x, const PPFunction& y) {
  PPFunction z = x;
  for (size_t i = 0; i < z.edge_fn.size(); ++i) z.edge_fn[i] = z.edge_fn[i] + y.edge_fn[i];
  for (size_t i = 0; i < z.half_fn.size(); ++i) z.half_fn[i] = z.half_fn[i] + y.half_fn[i];
  z.vertex_value = vec_add(z.vertex_value, y.vertex_value);
  return z;
}

PPFunction operator-(const PPFunction& x, const PPFunction& y) {
  PPFunction z = x;
  for (size_t i = 0; i < z.edge_fn.size(); ++i) z.edge_fn[i] = z.edge_fn[i] - y.edge_fn[i];
  for (size_t i = 0; i < z.half_fn.size(); ++i) z.half_fn[i] = z.half_fn[i] - y.half_fn[i];
  z.vertex_value = vec_sub(z.vertex_value, y.vertex_value);
  return z;
}

PPFunction operator*(const Rat& c, const PPFunction& x) {
  PPFunction z = x;
  for (auto& p : z.edge_fn) p = c * p;
  for (auto& p : z.half_fn) p = c * p;
  z.vertex_value = vec_scale(c, z.vertex_value);
  return z;
}

PPMeasure laplacian(const ReductionGraph& g, const PPFunction& f) {
  PPMeasure mu = PPMeasure::zero(g);
  for (size_t e = 0; e < g.edges.size(); ++e)
    mu.density[e] = Rat(-1) * f.edge_fn[e].derivative().derivative();
  RatVec slope_sum(g.vertices.size(), Rat(0));
  for (size_t e = 0; e < g.edges.size(); ++e) {
    const Poly d = f.edge_fn[e].derivative();
    slope_sum[g.edges[e].src] += d.eval(Rat(0));
    slope_sum[g.edges[e].dst] -= d.eval(g.edges[e].length);
  }
  for (size_t h = 0; h < g.half_edges.size(); ++h) {
    const Rat slope = f.half_fn[h].coeff(1);
    slope_sum[g.half_edges[h].src] += slope;
    mu.half_mass[h] = slope;
  }
  for (size_t v = 0; v < g.vertices.size(); ++v) mu.vertex_mass[v] = -slope_sum[v];
  return mu;
}

PPFunction inv_laplacian(const ReductionGraph& g, const PPMeasure& mu) {
  if (mu.mass(g) != 0) throw GraphError("not mass zero");

  // Edge correction with value zero at both endpoints and second derivative
  // equal to minus the density.
  std::vector<Poly> phi(g.edges.size());
  for (size_t e = 0; e < g.edges.size(); ++e) {
    const Poly hh = mu.density[e].antiderivative().antiderivative();
    const Rat l = g.edges[e].length;
    Poly lin = Poly(std::vector<Rat>{Rat(0), hh.eval(l) / l});
    phi[e] = lin - hh;
  }

  RatVec d(g.vertices.size(), Rat(0));
  for (size_t v = 0; v < g.vertices.size(); ++v) d[v] = mu.vertex_mass[v];
  for (size_t h = 0; h < g.half_edges.size(); ++h) d[g.half_edges[h].src] += mu.half_mass[h];
  for (size_t e = 0; e < g.edges.size(); ++e) {
    const Poly dphi = phi[e].derivative();
    d[g.edges[e].src] += dphi.eval(Rat(0));
    d[g.edges[e].dst] -= dphi.eval(g.edges[e].length);
  }

  const RatVec w = grounded_solve(g, d, g.base_vertex());

  PPFunction f = PPFunction::zero(g);
  f.vertex_value = w;
  for (size_t e = 0; e < g.edges.size(); ++e) {
    const Edge& ed = g.edges[e];
    const Poly interp(std::vector<Rat>{w[ed.src], (w[ed.dst] - w[ed.src]) / ed.length});
    f.edge_fn[e] = phi[e] + interp;
  }
  for (size_t h = 0; h < g.half_edges.size(); ++h)
    f.half_fn[h] = Poly(std::vector<Rat>{w[g.half_edges[h].src], mu.half_mass[h]});
  return f;
}

PPFunction potential(const ReductionGraph& g, const PPMeasure& mu, const GraphPoint& base) {
  PPFunction f = inv_laplacian(g, mu);
  const Rat shift = f.value_at(g, base);
  if (shift == 0) return f;
  PPFunction c = PPFunction::zero(g);
  for (auto& p : c.edge_fn) p = Poly(shift);
  for (auto& p : c.half_fn) p = Poly(shift);
  for (auto& v : c.vertex_value) v = shift;
  return f - c;
}

Rat integrate(const ReductionGraph& g, const PPFunction& f, const PPMeasure& mu) {
  Rat total(0);
  for (size_t e = 0; e < g.edges.size(); ++e) {
    if (mu.density[e].is_zero()) continue;
    total += (f.edge_fn[e] * mu.density[e]).integral(Rat(0), g.edges[e].length);
  }
  for (size_t v = 0; v < g.vertices.size(); ++v)
    if (mu.vertex_mass[v] != 0) total += mu.vertex_mass[v] * f.vertex_value[v];
  for (size_t h = 0; h < g.half_edges.size(); ++h)
    if (mu.half_mass[h] != 0) total += mu.half_mass[h] * f.vertex_value[g.half_edges[h].src];
  return total;
}

Rat measure_height(const ReductionGraph& g, const PPMeasure& mu, const PPMeasure& nu) {
  if (nu.mass(g) != 0) throw GraphError("not mass zero");
  return integrate(g, inv_laplacian(g, mu), nu);
}

Rat PointPotential::value(const ReductionGraph& original, const GraphPoint& p) const {
  return fn.value_at(sub.graph, sub.locate(original, p));
}

PointPotential point_divisor_potential(
    const ReductionGraph& g, const std::vector<std::pair<GraphPoint, Rat>>& divisor) {
  std::vector<GraphPoint> pts;
  for (const auto& [p, c] : divisor) pts.push_back(p);
  PointPotential pp{subdivide_at(g, pts), {}};
  PPMeasure mu = PPMeasure::zero(pp.sub.graph);
  for (const auto& [p, c] : divisor) {
    const GraphPoint q = pp.sub.locate(g, p);
    if (q.kind != GraphPoint::Kind::vertex) throw GraphError("point not subdivided");
    mu.vertex_mass[q.index] += c;
  }
  pp.fn = inv_laplacian(pp.sub.graph, mu);
  return pp;
}

Rat resistance(const ReductionGraph& g, const GraphPoint& p, const GraphPoint& q) {
  if (p == q) return Rat(0);
  const PointPotential pp =
      point_divisor_potential(g, {{q, Rat(1)}, {p, Rat(-1)}});
  return pp.value(g, q) - pp.value(g, p);
}

std::optional<Rat> complement_resistance(const ReductionGraph& g, int edge) {
  ReductionGraph h;
  h.vertices = g.vertices;
  for (size_t e = 0; e < g.edges.size(); ++e)
    if (static_cast<int>(e) != edge) h.edges.push_back(g.edges[e]);
  // Half-edges are irrelevant for resistance.
  const int s = g.edges[edge].src;
  const int t = g.edges[edge].dst;
  if (s == t) return Rat(0);
  // Restrict to the component of s.
  std::vector<int> comp(h.vertices.size(), -1);
  std::vector<int> stack = {s};
  comp[s] = 0;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (const auto& e : h.edges) {
      if (e.src == v && comp[e.dst] < 0) {
        comp[e.dst] = 0;
        stack.push_back(e.dst);
      }
      if (e.dst == v && comp[e.src] < 0) {
        comp[e.src] = 0;
        stack.push_back(e.src);
      }
    }
  }
  if (comp[t] < 0) return std::nullopt;
  ReductionGraph r;
  std::vector<int> vmap(h.vertices.size(), -1);
  for (size_t v = 0; v < h.vertices.size(); ++v) {
    if (comp[v] < 0) continue;
    vmap[v] = static_cast<int>(r.vertices.size());
    r.vertices.push_back(h.vertices[v]);
  }
  for (auto e : h.edges) {
    if (comp[e.src] < 0) continue;
    e.src = vmap[e.src];
    e.dst = vmap[e.dst];
    r.edges.push_back(e);
  }
  r.rebuild_indices();
  return resistance(r, GraphPoint::at_vertex(vmap[s]), GraphPoint::at_vertex(vmap[t]));
}

}  // namespace grappa
