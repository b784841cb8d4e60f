#include "grappa/kummer.hpp"

#include <cstddef>
#include <vector>

namespace grappa {

namespace {

LieElement ad_estar(const LieAlgebra& lie, int e, const LieElement& x) {
  return lie.reduce(tv_bracket(lie.estar_tv(e), lie.rep(x)), x.w - 1, x.m);
}

// Lie-valued polynomial on one edge, one element per power of s.
using LiePoly = std::vector<LieElement>;

LiePoly edge_lie_poly(const LieAlgebra& lie, const LieFunction& f, int e) {
  int deg = 0;
  for (const auto& c : f.coords) deg = std::max(deg, c.edge_fn[e].degree());
  LiePoly out(static_cast<size_t>(deg) + 1, lie.zero(-f.weight, -2));
  for (size_t i = 0; i < f.coords.size(); ++i)
    for (int t = 0; t <= deg; ++t)
      out[t].coords[i] = f.coords[i].edge_fn[e].coeff(t);
  return out;
}

LiePoly lp_derivative(const LieAlgebra& lie, const LiePoly& p) {
  if (p.size() <= 1) return {lie.zero(p.empty() ? -1 : p[0].w, -2)};
  LiePoly out;
  out.reserve(p.size() - 1);
  for (size_t t = 1; t < p.size(); ++t) out.push_back(lie.scale(Rat(static_cast<int>(t)), p[t]));
  return out;
}

LiePoly lp_ad_estar(const LieAlgebra& lie, int e, const LiePoly& p) {
  LiePoly out;
  out.reserve(p.size());
  for (const auto& x : p) out.push_back(ad_estar(lie, e, x));
  return out;
}

void lp_accumulate(const LieAlgebra& lie, LiePoly& acc, const LiePoly& p, const Rat& c) {
  while (acc.size() < p.size()) acc.push_back(lie.zero(p[0].w, p[0].m));
  for (size_t t = 0; t < p.size(); ++t) acc[t] = lie.add(acc[t], lie.scale(c, p[t]));
}

LieElement edge_integral(const LieAlgebra& lie, const LieFunction& f, int e, const Rat& l) {
  LieElement out = lie.zero(-f.weight, -2);
  for (size_t i = 0; i < f.coords.size(); ++i)
    out.coords[i] = f.coords[i].edge_fn[e].integral(Rat(0), l);
  return out;
}

// Weight k part of the twisted monodromy of the base loop system, one
// element per positive edge.
std::vector<LieElement> twisted_monodromy_terms(const LieAlgebra& lie, const KummerMap& km,
                                                const Mat& lambda, int k) {
  const ReductionGraph& g = lie.graph();
  const int ne = static_cast<int>(g.edges.size());
  std::vector<LieElement> out(static_cast<size_t>(ne), lie.zero(-k, -2));
  if (k == 1) {
    for (int e = 0; e < ne; ++e) out[e] = lie.reduce(lie.n_estar_tv(e), -1, -2);
    return out;
  }
  const LieFunction& f = km.j[static_cast<size_t>(k) - 2];
  std::vector<LieElement> adj(static_cast<size_t>(ne), lie.zero(-k, -2));
  for (int ep = 0; ep < ne; ++ep) {
    const LieElement integ = edge_integral(lie, f, ep, g.edges[ep].length);
    adj[ep] = ad_estar(lie, ep, integ);
  }
  for (int e = 0; e < ne; ++e)
    for (int ep = 0; ep < ne; ++ep)
      if (lambda.at(e, ep) != 0) out[e] = lie.add(out[e], lie.scale(lambda.at(e, ep), adj[ep]));
  return out;
}

void shift_constant(PPFunction& f, Rat c) {
  if (c == 0) return;
  const Poly shift(c);
  for (auto& p : f.edge_fn) p = p - shift;
  for (auto& p : f.half_fn) p = p - shift;
  for (auto& v : f.vertex_value) v -= c;
}

}  // namespace

LieElement measure_mass(const LieAlgebra& lie, const LieMeasure& mu) {
  LieElement out = lie.zero(-mu.weight, -2);
  for (size_t i = 0; i < mu.coords.size(); ++i) out.coords[i] = mu.coords[i].mass(lie.graph());
  return out;
}

KummerMap kummer_map(const LieAlgebra& lie, int base, int depth) {
  const ReductionGraph& g = lie.graph();
  if (base < 0 || base >= static_cast<int>(g.vertices.size()))
    throw GraphError("base vertex out of range");
  if (depth < 1) throw GraphError("depth must be positive");

  KummerMap km;
  km.base = base;
  km.depth = depth;
  const Mat lambda = lie.cycle_space().lambda_table();

  for (int n = 1; n <= depth; ++n) {
    const int d = lie.dim(-n, -2);
    LieMeasure mu;
    mu.weight = n;
    mu.coords.assign(static_cast<size_t>(d), PPMeasure::zero(g));

    if (n == 2) {
      for (size_t e = 0; e < g.edges.size(); ++e) {
        const int ei = static_cast<int>(e);
        const LieElement dens =
            lie.reduce(tv_bracket(lie.n_estar_tv(ei), lie.estar_tv(ei)), -2, -2);
        for (int i = 0; i < d; ++i)
          if (dens.coords[i] != 0) mu.coords[i].density[e] = Poly(dens.coords[i]);
      }
      for (size_t v = 0; v < g.vertices.size(); ++v) {
        const LieElement atom = lie.reduce(lie.logdelta_vertex_tv(static_cast<int>(v)), -2, -2);
        for (int i = 0; i < d; ++i) mu.coords[i].vertex_mass[v] = atom.coords[i];
      }
      for (size_t h = 0; h < g.half_edges.size(); ++h) {
        const LieElement atom = lie.reduce(lie.logdelta_half_tv(static_cast<int>(h)), -2, -2);
        for (int i = 0; i < d; ++i) mu.coords[i].half_mass[h] = atom.coords[i];
      }
    } else if (n >= 3) {
      const std::vector<LieElement> nb = twisted_monodromy_terms(lie, km, lambda, n - 1);
      for (size_t e = 0; e < g.edges.size(); ++e) {
        const int ei = static_cast<int>(e);
        LiePoly dens(1, lie.zero(-n, -2));
        lp_accumulate(lie, dens,
                      lp_ad_estar(lie, ei,
                                  lp_derivative(lie, edge_lie_poly(lie, km.j[n - 2], ei))),
                      Rat(-2));
        if (n >= 4)
          lp_accumulate(
              lie, dens,
              lp_ad_estar(lie, ei, lp_ad_estar(lie, ei, edge_lie_poly(lie, km.j[n - 3], ei))),
              Rat(1));
        dens[0] = lie.add(dens[0], lie.scale(Rat(-1), ad_estar(lie, ei, nb[e])));
        for (int i = 0; i < d; ++i) {
          std::vector<Rat> cs(dens.size(), Rat(0));
          for (size_t t = 0; t < dens.size(); ++t) cs[t] = dens[t].coords[i];
          mu.coords[i].density[e] = Poly(cs);
        }
      }
    }

    LieFunction f;
    f.weight = n;
    f.coords.reserve(static_cast<size_t>(d));
    for (int i = 0; i < d; ++i) {
      PPFunction fi = inv_laplacian(g, mu.coords[i]);
      shift_constant(fi, fi.vertex_value[base]);
      f.coords.push_back(std::move(fi));
    }

    km.mu.push_back(std::move(mu));
    km.j.push_back(std::move(f));
  }
  return km;
}

LieMeasure kummer_measure(const LieAlgebra& lie, int n) {
  return kummer_map(lie, lie.graph().base_vertex(), n).mu.back();
}

std::vector<LieElement> kummer_at(const LieAlgebra& lie, const KummerMap& km,
                                  const GraphPoint& p) {
  const ReductionGraph& g = lie.graph();
  std::vector<LieElement> out;
  out.reserve(km.j.size());
  for (const auto& f : km.j) {
    LieElement x = lie.zero(-f.weight, -2);
    for (size_t i = 0; i < f.coords.size(); ++i) x.coords[i] = f.coords[i].value_at(g, p);
    out.push_back(std::move(x));
  }
  return out;
}

LieFunction w2_closed_form(const LieAlgebra& lie, int base) {
  const ReductionGraph& g = lie.graph();
  if (base < 0 || base >= static_cast<int>(g.vertices.size()))
    throw GraphError("base vertex out of range");
  const int d = lie.dim(-2, -2);

  std::vector<LieElement> be;
  be.reserve(g.edges.size());
  for (size_t e = 0; e < g.edges.size(); ++e) {
    const int ei = static_cast<int>(e);
    be.push_back(lie.reduce(tv_bracket(lie.estar_tv(ei), lie.n_estar_tv(ei)), -2, -2));
  }
  std::vector<LieElement> lh;
  lh.reserve(g.half_edges.size());
  for (size_t h = 0; h < g.half_edges.size(); ++h)
    lh.push_back(lie.reduce(lie.logdelta_half_tv(static_cast<int>(h)), -2, -2));

  std::vector<LieElement> dv;
  dv.reserve(g.vertices.size());
  for (size_t v = 0; v < g.vertices.size(); ++v)
    dv.push_back(lie.reduce(lie.logdelta_vertex_tv(static_cast<int>(v)), -2, -2));
  for (size_t e = 0; e < g.edges.size(); ++e) {
    const Rat half_l = g.edges[e].length / 2;
    dv[g.edges[e].src] = lie.add(dv[g.edges[e].src], lie.scale(-half_l, be[e]));
    dv[g.edges[e].dst] = lie.add(dv[g.edges[e].dst], lie.scale(-half_l, be[e]));
  }
  for (size_t h = 0; h < g.half_edges.size(); ++h)
    dv[g.half_edges[h].src] = lie.add(dv[g.half_edges[h].src], lh[h]);

  LieFunction w;
  w.weight = 2;
  w.coords.reserve(static_cast<size_t>(d));
  for (int i = 0; i < d; ++i) {
    RatVec divisor(g.vertices.size(), Rat(0));
    for (size_t v = 0; v < g.vertices.size(); ++v) divisor[v] = dv[v].coords[i];
    const RatVec phi = divisor_potential(g, divisor);

    PPFunction fi = PPFunction::zero(g);
    fi.vertex_value = phi;
    for (size_t e = 0; e < g.edges.size(); ++e) {
      const Edge& ed = g.edges[e];
      const Poly quad =
          be[e].coords[i] * Poly(std::vector<Rat>{Rat(0), -ed.length / 2, Rat(1) / 2});
      const Poly interp(std::vector<Rat>{phi[ed.src], (phi[ed.dst] - phi[ed.src]) / ed.length});
      fi.edge_fn[e] = quad + interp;
    }
    for (size_t h = 0; h < g.half_edges.size(); ++h)
      fi.half_fn[h] = Poly(std::vector<Rat>{phi[g.half_edges[h].src], lh[h].coords[i]});
    shift_constant(fi, fi.vertex_value[base]);
    w.coords.push_back(std::move(fi));
  }
  return w;
}

OdeReport check_kummer_ode(const LieAlgebra& lie, const KummerMap& km) {
  const ReductionGraph& g = lie.graph();
  const Mat lambda = lie.cycle_space().lambda_table();
  OdeReport rep;
  rep.half_edges = true;
  rep.vertices = true;
  rep.interior = true;

  for (int n = 1; n <= km.depth; ++n) {
    const LieFunction& jn = km.j[static_cast<size_t>(n) - 1];
    const int d = lie.dim(-n, -2);

    for (size_t h = 0; h < g.half_edges.size(); ++h) {
      const LieElement target = n == 2 ? lie.reduce(lie.logdelta_half_tv(static_cast<int>(h)), -2, -2)
                                       : lie.zero(-n, -2);
      for (int i = 0; i < d; ++i)
        if (jn.coords[i].half_fn[h].coeff(1) != target.coords[i]) rep.half_edges = false;
    }

    for (size_t v = 0; v < g.vertices.size(); ++v) {
      LieElement target = n == 2
                              ? lie.scale(Rat(-1), lie.reduce(lie.logdelta_vertex_tv(static_cast<int>(v)), -2, -2))
                              : lie.zero(-n, -2);
      for (int i = 0; i < d; ++i) {
        Rat outgoing(0);
        for (size_t e = 0; e < g.edges.size(); ++e) {
          const Poly der = jn.coords[i].edge_fn[e].derivative();
          if (g.edges[e].src == static_cast<int>(v)) outgoing += der.eval(Rat(0));
          if (g.edges[e].dst == static_cast<int>(v)) outgoing -= der.eval(g.edges[e].length);
        }
        for (size_t h = 0; h < g.half_edges.size(); ++h)
          if (g.half_edges[h].src == static_cast<int>(v)) outgoing += jn.coords[i].half_fn[h].coeff(1);
        if (outgoing != target.coords[i]) rep.vertices = false;
      }
    }

    if (n < 2) continue;
    const std::vector<LieElement> nb = twisted_monodromy_terms(lie, km, lambda, n - 1);
    for (size_t e = 0; e < g.edges.size(); ++e) {
      const int ei = static_cast<int>(e);
      LiePoly lhs(1, lie.zero(-n, -2));
      lp_accumulate(lie, lhs,
                    lp_derivative(lie, lp_derivative(lie, edge_lie_poly(lie, jn, ei))), Rat(1));
      lp_accumulate(lie, lhs,
                    lp_ad_estar(lie, ei,
                                lp_derivative(lie, edge_lie_poly(lie, km.j[n - 2], ei))),
                    Rat(-2));
      if (n >= 4)
        lp_accumulate(
            lie, lhs,
            lp_ad_estar(lie, ei, lp_ad_estar(lie, ei, edge_lie_poly(lie, km.j[n - 3], ei))),
            Rat(1));
      const LieElement rhs = ad_estar(lie, ei, nb[e]);
      for (size_t t = 0; t < lhs.size(); ++t) {
        const LieElement want = t == 0 ? rhs : lie.zero(-n, -2);
        for (int i = 0; i < lie.dim(-n, -2); ++i)
          if (lhs[t].coords[i] != want.coords[i]) rep.interior = false;
      }
    }
  }
  return rep;
}

}  // namespace grappa
