#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "grappa/homology.hpp"
#include "grappa/random_graphs.hpp"
#include "helpers.hpp"

using namespace grappa;

TEST_CASE("cycle basis of the 3-banana") {
  const auto g = load_bundled("g_ban3");
  const auto cs = build_cycles(g);
  REQUIRE(cs.dim() == 2);
  // Tree is {e1}; basis cycles are e2 - e1 and e3 - e1.
  CHECK(cs.cycles[0] == RatVec{rat_of(-1), rat_of(1), rat_of(0)});
  CHECK(cs.cycles[1] == RatVec{rat_of(-1), rat_of(0), rat_of(1)});
  CHECK(cs.gram.at(0, 0) == 2);
  CHECK(cs.gram.at(0, 1) == 1);
  CHECK(cs.gram.at(1, 1) == 2);
}

TEST_CASE("boundary and projection split chains orthogonally") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 25; ++trial) {
    const auto g = random_stable_graph(rng, {});
    const auto cs = build_cycles(g);
    RatVec chain(g.edges.size(), Rat(0));
    std::uniform_int_distribution<int> coeff(-3, 3);
    for (auto& c : chain) c = coeff(rng);
    const RatVec harm = cs.harmonic_projection(chain);
    const RatVec grad = vec_sub(chain, harm);
    CHECK(is_zero_vec(cs.boundary(harm)));
    CHECK(cs.pair(harm, grad) == 0);
    // The harmonic part is orthogonal to every gradient chain.
    if (g.vertices.size() > 1) {
      RatVec div(g.vertices.size(), Rat(0));
      div[0] = 1;
      div[g.vertices.size() - 1] -= 1;
      if (!is_zero_vec(div)) CHECK(cs.pair(harm, cs.gradient_chain(div)) == 0);
    }
    // Idempotence.
    CHECK(cs.harmonic_projection(harm) == harm);
  }
}

TEST_CASE("monodromy coefficients") {
  const auto g = load_bundled("g_ban3");
  const auto cs = build_cycles(g);
  // lambda_{e,e} = 1/l - <de,de>/l^2 and lambda_{e,f} = -<de,df>/(l(e)l(f)).
  const Mat lam = cs.lambda_table();
  for (int e = 0; e < 3; ++e) {
    const RatVec de = cs.boundary([&] {
      RatVec c(3, Rat(0));
      c[e] = 1;
      return c;
    }());
    for (int f = 0; f < 3; ++f) {
      const RatVec df = cs.boundary([&] {
        RatVec c(3, Rat(0));
        c[f] = 1;
        return c;
      }());
      const Rat le = g.edges[e].length;
      const Rat lf = g.edges[f].length;
      Rat expected = -divisor_height(g, de, df) / (le * lf);
      if (e == f) expected += Rat(1) / le;
      CHECK(lam.at(e, f) == expected);
    }
  }
}

TEST_CASE("monodromy chain lies in homology and pairs correctly") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const auto g = random_stable_graph(rng, {});
    const auto cs = build_cycles(g);
    if (cs.dim() == 0) continue;
    for (size_t e = 0; e < g.edges.size(); ++e) {
      const RatVec chain = cs.n_chain(static_cast<int>(e));
      CHECK(is_zero_vec(cs.boundary(chain)));
      // <N(e*) chain, z> = e*(z) for every cycle z.
      for (const auto& z : cs.cycles)
        CHECK(cs.pair(chain, z) == z[e]);
      // Coordinates agree with the gram-inverse route.
      CHECK(cs.coords_of_cycle(chain) == cs.n_of_estar(static_cast<int>(e)));
    }
  }
}

TEST_CASE("bridges have zero monodromy") {
  const auto g = load_bundled("g_bridge");
  const auto cs = build_cycles(g);
  CHECK(cs.dim() == 0);
  CHECK(is_zero_vec(cs.n_chain(0)));
}

TEST_CASE("divisor height examples") {
  const auto g = load_bundled("g_ban3");
  // <v - u, v - u> with three parallel unit edges: 1/3.
  RatVec d(2, Rat(0));
  d[0] = -1;
  d[1] = 1;
  CHECK(divisor_height(g, d, d) == rat_of(1, 3));
  CHECK_THROWS_WITH(divisor_height(g, RatVec{rat_of(1), rat_of(0)}, d), "not degree zero");
}
