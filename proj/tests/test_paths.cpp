#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "grappa/paths.hpp"

#include "helpers.hpp"

using namespace grappa;

namespace {

using IntWord = std::vector<int>;

void shuffles_into(const IntWord& a, size_t ia, const IntWord& b, size_t ib, IntWord& cur,
                   std::vector<IntWord>& out) {
  if (ia == a.size() && ib == b.size()) {
    out.push_back(cur);
    return;
  }
  if (ia < a.size()) {
    cur.push_back(a[ia]);
    shuffles_into(a, ia + 1, b, ib, cur, out);
    cur.pop_back();
  }
  if (ib < b.size()) {
    cur.push_back(b[ib]);
    shuffles_into(a, ia, b, ib + 1, cur, out);
    cur.pop_back();
  }
}

std::vector<IntWord> shuffles(const IntWord& a, const IntWord& b) {
  std::vector<IntWord> out;
  IntWord cur;
  shuffles_into(a, 0, b, 0, cur, out);
  return out;
}

Rat combo_integral(const LieAlgebra& lie, const PathCombo& c, const IntWord& w) {
  return iterated_integral(lie, c, w);
}

PathCombo compose_combos(const ReductionGraph& g, const PathCombo& first,
                         const PathCombo& then) {
  PathCombo out;
  for (const auto& [ca, pa] : first) {
    for (const auto& [cb, pb] : then) {
      out.push_back({ca * cb, compose_paths(g, pa, pb)});
    }
  }
  return out;
}

}  // namespace

TEST_CASE("single dart integrals") {
  const ReductionGraph g = load_bundled("g_loop");
  LieAlgebra lie(g);
  Path loop{0, {0}};
  CHECK(iterated_integral(lie, loop, {}) == 1);
  CHECK(iterated_integral(lie, loop, {0}) == 1);
  CHECK(iterated_integral(lie, loop, {0, 0}) == rat_of(1, 2));
  CHECK(iterated_integral(lie, loop, {0, 0, 0}) == rat_of(1, 6));
  Path rev{0, {1}};
  CHECK(iterated_integral(lie, rev, {0}) == -1);
  CHECK(iterated_integral(lie, rev, {0, 0}) == rat_of(1, 2));
}

TEST_CASE("backtracking kills every nonempty word") {
  const ReductionGraph g = load_bundled("g_ban3");
  LieAlgebra lie(g);
  Path back{0, {0, 1}};
  CHECK(iterated_integral(lie, back, {}) == 1);
  for (IntWord w : std::vector<IntWord>{{0}, {1}, {0, 1}, {1, 0}, {0, 0}, {1, 1, 0}}) {
    CAPTURE(w.size());
    CHECK(iterated_integral(lie, back, w) == 0);
  }
}

TEST_CASE("loop integrals reproduce the cycle pairing") {
  for (const char* name : {"g_ban3", "fig8", "ban112"}) {
    const ReductionGraph g = load_bundled(name);
    LieAlgebra lie(g);
    const CycleSpace& cyc = lie.cycle_space();
    for (int i = 0; i < cyc.dim(); ++i) {
      Path li = loop_at(lie, g.base_vertex(), i);
      for (int j = 0; j < cyc.dim(); ++j) {
        CHECK(iterated_integral(lie, li, {j}) == cyc.gram.at(i, j));
      }
    }
  }
}

TEST_CASE("composition splits words between the factors") {
  const ReductionGraph g = load_bundled("g_ban3");
  LieAlgebra lie(g);
  int b = g.base_vertex();
  std::vector<Path> loops = {loop_at(lie, b, 0), loop_at(lie, b, 1),
                             compose_paths(g, loop_at(lie, b, 0), loop_at(lie, b, 1))};
  std::vector<IntWord> words = {{0}, {1}, {0, 1}, {1, 0}, {0, 0, 1}, {1, 0, 1}};
  for (const Path& a : loops) {
    for (const Path& c : loops) {
      Path ac = compose_paths(g, a, c);
      for (const IntWord& w : words) {
        Rat expect = 0;
        for (size_t i = 0; i <= w.size(); ++i) {
          IntWord early(w.begin(), w.begin() + i);
          IntWord late(w.begin() + i, w.end());
          expect += iterated_integral(lie, a, early) * iterated_integral(lie, c, late);
        }
        CHECK(iterated_integral(lie, ac, w) == expect);
      }
    }
  }
}

TEST_CASE("integrals are group-like for the shuffle product") {
  const ReductionGraph g = load_bundled("fig8");
  LieAlgebra lie(g);
  int b = g.base_vertex();
  Path p = compose_paths(g, loop_at(lie, b, 0),
                         compose_paths(g, loop_at(lie, b, 1), loop_at(lie, b, 0)));
  std::vector<std::pair<IntWord, IntWord>> cases = {
      {{0}, {1}}, {{0}, {0}}, {{0, 1}, {1}}, {{1, 0}, {0, 1}}};
  for (const auto& [wa, wb] : cases) {
    Rat lhs = 0;
    for (const IntWord& s : shuffles(wa, wb)) lhs += iterated_integral(lie, p, s);
    CHECK(lhs == iterated_integral(lie, p, wa) * iterated_integral(lie, p, wb));
  }
}

TEST_CASE("reversal acts by the antipode") {
  const ReductionGraph g = load_bundled("g_ban3");
  LieAlgebra lie(g);
  int b = g.base_vertex();
  Path p = compose_paths(g, loop_at(lie, b, 0), loop_at(lie, b, 1));
  Path q = reverse_path(g, p);
  std::vector<IntWord> words = {{0}, {1}, {0, 1}, {1, 1}, {0, 1, 0}, {1, 0, 0}};
  for (const IntWord& w : words) {
    IntWord r(w.rbegin(), w.rend());
    Rat sign = w.size() % 2 == 0 ? 1 : -1;
    CHECK(iterated_integral(lie, q, w) == sign * iterated_integral(lie, p, r));
  }
}

TEST_CASE("products of augmentation ideal elements are nilpotent") {
  const ReductionGraph g = load_bundled("fig8");
  LieAlgebra lie(g);
  int b = g.base_vertex();
  Path constant{b, {}};
  auto aug = [&](int i) {
    PathCombo c;
    c.push_back({Rat(1), loop_at(lie, b, i)});
    c.push_back({Rat(-1), constant});
    return c;
  };
  PathCombo two = compose_combos(g, aug(0), aug(1));
  CHECK(combo_integral(lie, two, {}) == 0);
  CHECK(combo_integral(lie, two, {0}) == 0);
  CHECK(combo_integral(lie, two, {1}) == 0);
  CHECK(combo_integral(lie, two, {0, 1}) != 0);
  PathCombo three = compose_combos(g, two, aug(0));
  for (IntWord w : std::vector<IntWord>{{}, {0}, {1}, {0, 0}, {0, 1}, {1, 0}, {1, 1}}) {
    CHECK(combo_integral(lie, three, w) == 0);
  }
}

TEST_CASE("theta of a path tabulates its iterated integrals") {
  const ReductionGraph g = load_bundled("g_ban3");
  LieAlgebra lie(g);
  int b = g.base_vertex();
  Path p = compose_paths(g, loop_at(lie, b, 0), loop_at(lie, b, 1));
  TensorVec th = theta_path(lie, p, 3);
  const auto& gens = lie.generators();
  for (const auto& [word, coeff] : th) {
    IntWord letters;
    bool pure = true;
    for (int gid : word) {
      if (gens[gid].kind != GenKind::estar) pure = false;
      letters.push_back(gens[gid].a);
    }
    REQUIRE(pure);
    CHECK(coeff == iterated_integral(lie, p, letters));
  }
  CHECK(th.at(Word{}) == 1);
}

TEST_CASE("duality gram examples") {
  SUBCASE("bridge graph has only the empty word") {
    const ReductionGraph g = load_bundled("g_bridge");
    LieAlgebra lie(g);
    DualityGram d = duality_gram(lie, 0, 1, 2);
    CHECK(d.rank == 1);
    CHECK(d.nonsingular);
  }
  SUBCASE("loop graph at depth two") {
    const ReductionGraph g = load_bundled("g_loop");
    LieAlgebra lie(g);
    DualityGram d = duality_gram(lie, 0, 0, 2);
    CHECK(d.gram.rows == 3);
    CHECK(d.rank == 3);
    CHECK(d.nonsingular);
  }
  SUBCASE("triple banana at depth one") {
    const ReductionGraph g = load_bundled("g_ban3");
    LieAlgebra lie(g);
    DualityGram d = duality_gram(lie, 0, 0, 1);
    CHECK(d.gram.rows == 3);
    CHECK(d.rank == 3);
    CHECK(d.nonsingular);
  }
  SUBCASE("nonsingular through depth three") {
    for (const char* name : {"g_loop", "g_ban3", "fig8", "ban112"}) {
      const ReductionGraph g = load_bundled(name);
      LieAlgebra lie(g);
      for (int n = 1; n <= 3; ++n) {
        CAPTURE(name);
        CAPTURE(n);
        DualityGram d = duality_gram(lie, 0, 0, n);
        CHECK(d.nonsingular);
      }
    }
  }
}

TEST_CASE("canonical path examples and groupoid laws") {
  const ReductionGraph g = load_bundled("g_ban3");
  LieAlgebra lie(g);
  int n = 3;
  std::vector<IntWord> words = h1_words_up_to(lie.cycle_space().dim(), n);

  SUBCASE("constant path at a point") {
    PathCombo c = canonical_path(lie, 0, 0, n);
    REQUIRE(c.size() == 1);
    CHECK(c[0].first == 1);
    CHECK(c[0].second.darts.empty());
  }

  SUBCASE("bridge is its own canonical path") {
    LieAlgebra bridge(load_bundled("g_bridge"));
    PathCombo c = canonical_path(bridge, 0, 1, 2);
    REQUIRE(c.size() == 1);
    CHECK(c[0].first == 1);
    REQUIRE(c[0].second.darts.size() == 1);
    CHECK(c[0].second.darts[0] == 0);
  }

  SUBCASE("inverse law") {
    PathCombo uv = canonical_path(lie, 0, 1, n);
    PathCombo vu = canonical_path(lie, 1, 0, n);
    PathCombo rev;
    for (const auto& [coeff, p] : vu) rev.push_back({coeff, reverse_path(g, p)});
    for (const IntWord& w : words) {
      CHECK(combo_integral(lie, uv, w) == combo_integral(lie, rev, w));
    }
  }

  SUBCASE("composition law") {
    PathCombo uv = canonical_path(lie, 0, 1, n);
    PathCombo vu = canonical_path(lie, 1, 0, n);
    PathCombo loop = compose_combos(g, uv, vu);
    for (const IntWord& w : words) {
      Rat expect = w.empty() ? 1 : 0;
      CHECK(combo_integral(lie, loop, w) == expect);
    }
  }
}

TEST_CASE("canonical path along a subdivided edge") {
  const ReductionGraph g = load_bundled("g_ban3");
  GraphPoint pt = parse_point(g, "e1@1/3");
  auto [sub, vid] = subdivide(g, pt);
  LieAlgebra lie(sub);
  int b = sub.vertex_index.at("v");
  int u = sub.vertex_index.at("u");
  int x = sub.vertex_index.at(vid);
  int n = 3;
  std::vector<IntWord> words = h1_words_up_to(lie.cycle_space().dim(), n);

  PathCombo lhs = canonical_path(lie, b, x, n);

  int seg = sub.edge_index.at("e1:1");
  REQUIRE(sub.edges[seg].src == u);
  REQUIRE(sub.edges[seg].dst == x);
  Path es{u, {2 * seg}};

  TensorVec star = tv_scale(rat_of(-1, 3), lie.estar_tv(seg));
  TensorVec correction;
  correction[Word{}] = 1;
  TensorVec power;
  power[Word{}] = 1;
  Rat fact = 1;
  for (int k = 1; k <= n; ++k) {
    power = tv_concat_trunc(lie, power, star, n);
    fact *= k;
    tv_accumulate(correction, power, Rat(1) / fact);
  }

  DualityGram d = duality_gram(lie, b, b, n);
  RatVec rhs(d.gram.rows, Rat(0));
  for (int r = 0; r < d.gram.rows; ++r) {
    Word w;
    for (int letter : d.words[r]) w.push_back(letter);
    auto it = correction.find(w);
    rhs[r] = it == correction.end() ? Rat(0) : it->second;
  }
  auto sol = solve(d.gram, rhs);
  REQUIRE(sol);
  PathCombo x_combo;
  for (size_t i = 0; i < d.paths.size(); ++i) {
    if ((*sol)[i] != 0) x_combo.push_back({(*sol)[i], d.paths[i]});
  }
  for (int r = 0; r < d.gram.rows; ++r) {
    CHECK(combo_integral(lie, x_combo, d.words[r]) == rhs[r]);
  }

  PathCombo can_bu = canonical_path(lie, b, u, n);
  PathCombo rhs_combo;
  for (const auto& [cx, px] : x_combo) {
    for (const auto& [cc, pc] : can_bu) {
      rhs_combo.push_back({cx * cc, compose_paths(sub, compose_paths(sub, px, pc), es)});
    }
  }
  for (const IntWord& w : words) {
    CHECK(combo_integral(lie, lhs, w) == combo_integral(lie, rhs_combo, w));
  }
}

TEST_CASE("edge trivialization logs on the loop graph") {
  const ReductionGraph g = load_bundled("g_loop");
  LieAlgebra lie(g);
  EdgeLogs logs = solve_edge_logs(lie, 3);
  REQUIRE(logs.by_edge.size() == 1);
  CHECK(logs.by_edge[0][0].coords == RatVec{Rat(1)});
  REQUIRE(lie.dim(-2, -2) == 1);
  CHECK(logs.by_edge[0][1].coords == RatVec{rat_of(1, 2)});
}

TEST_CASE("edge trivialization laws plug back in") {
  for (const char* name : {"g_loop", "g_ban3", "ban112", "x0_style", "c4_stab"}) {
    CAPTURE(name);
    const ReductionGraph g = load_bundled(name);
    LieAlgebra lie(g);
    int depth = 3;
    EdgeLogs logs = solve_edge_logs(lie, depth);
    const CycleSpace& cyc = lie.cycle_space();

    for (int v = 0; v < static_cast<int>(g.vertices.size()); ++v) {
      TensorVec total;
      for (int d : g.out_darts[v]) {
        tv_accumulate(total, edge_log_tv(lie, logs, d, depth), Rat(1));
      }
      tv_accumulate(total, lie.logdelta_vertex_tv(v), Rat(-1));
      for (int h : g.out_halfs[v]) tv_accumulate(total, lie.logdelta_half_tv(h), Rat(-1));
      for (int k = 1; k <= depth; ++k) {
        TensorVec part;
        for (const auto& [w, c] : total) {
          if (word_weight(lie, w) == k) part[w] = c;
        }
        CAPTURE(k);
        CHECK(lie.reduce(part, -k, -2).is_zero());
      }
    }

    for (int i = 0; i < cyc.dim(); ++i) {
      TensorVec total;
      for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
        Rat mult = cyc.cycles[i][e];
        if (mult == 0) continue;
        Rat l = g.edges[e].length;
        TensorVec star = lie.estar_tv(e);
        TensorVec cur;
        for (int k = 1; k <= depth; ++k) tv_accumulate(cur, lie.rep(logs.by_edge[e][k - 1]), Rat(1));
        Rat lt = l;
        Rat fact = 1;
        tv_accumulate(total, cur, mult * lt);
        for (int t = 1; t <= depth; ++t) {
          cur = tv_bracket(star, cur);
          lt *= -l;
          fact *= t + 1;
          tv_accumulate(total, cur, mult * lt / fact);
        }
      }
      for (int k = 1; k <= depth; ++k) {
        TensorVec part;
        for (const auto& [w, c] : total) {
          if (word_weight(lie, w) == k) part[w] = c;
        }
        LieElement got = lie.reduce(part, -k, -2);
        if (k == 1) {
          RatVec unit(cyc.dim(), Rat(0));
          unit[i] = 1;
          LieElement want = lie.reduce(lie.h1_tv(unit), -1, -2);
          CHECK(got.coords == want.coords);
        } else {
          CAPTURE(k);
          CHECK(got.is_zero());
        }
      }
    }
  }
}

TEST_CASE("two-sided reduction kills the relation span") {
  const ReductionGraph g = load_bundled("g_ban3");
  LieAlgebra lie(g);
  TwoSidedIdeal ideal(lie);
  CHECK(ideal.reduce(lie.sigma()).empty());
  TensorVec padded = tv_concat(lie.gen_tv(0), tv_concat(lie.sigma(), lie.gen_tv(2)));
  CHECK(ideal.reduce(padded).empty());
  TensorVec nonzero = lie.rep(lie.reduce(lie.logdelta_vertex_tv(0), -2, -2));
  CHECK(ideal.reduce(lie.gen_tv(0)) == lie.gen_tv(0));
  (void)nonzero;
}

TEST_CASE("invariant combinations detect the banana symmetry") {
  const ReductionGraph g = load_bundled("g_ban3");
  LieAlgebra lie(g);
  EdgeLogs logs2 = solve_edge_logs(lie, 2);
  EdgeLogs logs3 = solve_edge_logs(lie, 3);
  int u = g.vertex_index.at("u");
  int v = g.vertex_index.at("v");
  CHECK(invt_path_exists(lie, logs2, u, v, 2));
  CHECK_FALSE(invt_path_exists(lie, logs3, u, v, 3));
}

TEST_CASE("invariant combinations on the subdivided loop") {
  const ReductionGraph g = load_bundled("g_loop");
  Subdivision sub = subdivide_at(g, {parse_point(g, "e@1/3"), parse_point(g, "e@2/3")});
  const ReductionGraph& s = sub.graph;
  LieAlgebra lie(s);
  int x = s.vertex_index.at("e@1/3");
  int y = s.vertex_index.at("e@2/3");
  EdgeLogs logs2 = solve_edge_logs(lie, 2);
  EdgeLogs logs3 = solve_edge_logs(lie, 3);
  CHECK(invt_path_exists(lie, logs2, x, y, 2));
  CHECK_FALSE(invt_path_exists(lie, logs3, x, y, 3));

  Subdivision other = subdivide_at(g, {parse_point(g, "e@1/6"), parse_point(g, "e@1/3")});
  LieAlgebra lie2(other.graph);
  EdgeLogs o2 = solve_edge_logs(lie2, 2);
  CHECK_FALSE(invt_path_exists(lie2, o2, other.graph.vertex_index.at("e@1/6"),
                               other.graph.vertex_index.at("e@1/3"), 2));
}

TEST_CASE("path monodromy values on the subdivided loop") {
  const ReductionGraph g = load_bundled("g_loop");
  Subdivision sub = subdivide_at(g, {parse_point(g, "e@1/3")});
  const ReductionGraph& s = sub.graph;
  LieAlgebra lie(s);
  TwoSidedIdeal ideal(lie);
  int b = s.vertex_index.at("v");
  int x = s.vertex_index.at("e@1/3");
  EdgeLogs logs = solve_edge_logs(lie, 3);
  PathCombo can = canonical_path(lie, b, x, 3);
  TensorVec red = ideal.reduce(theta_n_combo(lie, logs, can, 3));

  RatVec unit(1, Rat(1));
  TensorVec xi = lie.estar_tv(0);
  TensorVec zeta = lie.h1_tv(unit);
  TensorVec c = tv_bracket(xi, zeta);
  TensorVec expect;
  tv_accumulate(expect, c, rat_of(1, 9));
  tv_accumulate(expect, tv_bracket(xi, c), rat_of(1, 81));
  expect = ideal.reduce(expect);

  TensorVec diff = red;
  tv_accumulate(diff, expect, Rat(-1));
  for (const auto& [w, coeff] : diff) {
    int k = word_weight(lie, w);
    if (k < 2 || k > 3) continue;
    CAPTURE(k);
    CHECK(coeff == 0);
  }
}
