#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "grappa/graph.hpp"
#include "helpers.hpp"

using namespace grappa;

TEST_CASE("bundled graphs load and classify") {
  CHECK(load_bundled("g_loop").stability() == Stability::stable);
  CHECK(load_bundled("g_ban3").stability() == Stability::stable);
  CHECK(load_bundled("g_bridge").stability() == Stability::stable);
  CHECK(load_bundled("fig8").stability() == Stability::stable);
  CHECK(load_bundled("c4_stab").stability() == Stability::stable);
  CHECK(load_bundled("ban112").stability() == Stability::stable);
  CHECK(load_bundled("x0_style").stability() == Stability::semistable);
}

TEST_CASE("invariants") {
  const auto g = load_bundled("x0_style");
  CHECK(g.betti() == 2);
  CHECK(g.total_genus() == 4);
  CHECK(g.euler_char() == -6);

  const auto loop = load_bundled("g_loop");
  CHECK(loop.betti() == 1);
  CHECK(loop.total_genus() == 1);
  CHECK(loop.euler_char() == -1);
  CHECK(loop.degree(0) == 3);

  const auto ban = load_bundled("g_ban3");
  CHECK(ban.betti() == 2);
  CHECK(ban.total_genus() == 2);
  CHECK(ban.canonical_divisor() == std::vector<Rat>{rat_of(1), rat_of(1)});

  const auto bridge = load_bundled("g_bridge");
  CHECK(bridge.betti() == 0);
  CHECK(bridge.total_genus() == 2);
  CHECK(bridge.canonical_divisor() == std::vector<Rat>{rat_of(1), rat_of(1)});
}

TEST_CASE("validation errors") {
  CHECK_THROWS_WITH(parse_graph(R"({"vertices":[{"id":"u"}],"edges":[
    {"id":"e","src":"u","dst":"w","length":"1"}],"half_edges":[]})"),
                    "dangling endpoint");
  CHECK_THROWS_WITH(parse_graph(R"({"vertices":[{"id":"u"},{"id":"u"}],
    "edges":[],"half_edges":[]})"),
                    "duplicate id");
  CHECK_THROWS_WITH(parse_graph(R"({"vertices":[{"id":"u"},{"id":"v"}],
    "edges":[],"half_edges":[]})"),
                    "disconnected graph");
  CHECK_THROWS_WITH(parse_graph(R"({"vertices":[{"id":"u"}],"edges":[
    {"id":"e","src":"u","dst":"u","length":"0"}],"half_edges":[]})"),
                    "non-positive length");
  CHECK_THROWS_WITH(parse_graph(R"({"vertices":[{"id":"u"}],"edges":[
    {"id":"e","src":"u","dst":"u","length":"x"}],"half_edges":[]})"),
                    "malformed rational");
  CHECK_THROWS_WITH(parse_graph(R"({"vertices":[{"id":"u"}],"edges":[
    {"id":"e","src":"u","dst":"u","length":"-1/2"}],"half_edges":[]})"),
                    "non-positive length");
}

TEST_CASE("round trip") {
  const auto g = load_bundled("ban112");
  const auto g2 = parse_graph(serialize_graph(g));
  CHECK(graph_hash(g) == graph_hash(g2));
  CHECK(serialize_graph(g) == serialize_graph(g2));
}

TEST_CASE("points") {
  const auto g = load_bundled("ban112");
  const GraphPoint p = parse_point(g, "e3@1/3");
  CHECK(p.kind == GraphPoint::Kind::edge);
  CHECK(p.offset == rat_of(1, 3));
  CHECK(point_to_string(g, p) == "e3@1/3");
  const GraphPoint q = parse_point(g, "e3'@1/3");
  CHECK(q.offset == rat_of(5, 3));
  CHECK(parse_point(g, "e1@0").kind == GraphPoint::Kind::vertex);
  CHECK(point_to_string(g, parse_point(g, "e1@1")) == "v");
  CHECK(parse_point(g, "u") == GraphPoint::at_vertex(0));
  CHECK_THROWS(parse_point(g, "e1@3/2"));
  CHECK_THROWS(parse_point(g, "w"));
  const auto loop = load_bundled("g_loop");
  const GraphPoint hp = parse_point(loop, "h@2/3");
  CHECK(hp.kind == GraphPoint::Kind::half_edge);
}

TEST_CASE("subdivision splits edges and half-edges") {
  const auto g = load_bundled("g_loop");
  const GraphPoint x = parse_point(g, "e@1/3");
  const GraphPoint y = parse_point(g, "h@1/2");
  const Subdivision sub = subdivide_at(g, {x, y});
  CHECK(sub.graph.vertices.size() == 3);
  CHECK(sub.graph.edges.size() == 3);
  CHECK(sub.graph.half_edges.size() == 1);
  CHECK(sub.graph.half_edges[0].id == "h");
  // Interior subdivision vertices are 2-valent genus 0, so a stable graph
  // subdivides to a semistable one; invalid graphs stay invalid.
  CHECK(sub.graph.stability() == Stability::semistable);
  CHECK(sub.graph.total_genus() == g.total_genus());
  CHECK(sub.graph.euler_char() == g.euler_char());
  const GraphPoint lx = sub.locate(g, x);
  CHECK(lx.kind == GraphPoint::Kind::vertex);
  const GraphPoint mid = sub.locate(g, parse_point(g, "e@2/3"));
  CHECK(mid.kind == GraphPoint::Kind::edge);
  CHECK(mid.offset == rat_of(1, 3));
  const GraphPoint hq = sub.locate(g, parse_point(g, "h@3/4"));
  CHECK(hq.kind == GraphPoint::Kind::half_edge);
  CHECK(hq.offset == rat_of(1, 4));
}

TEST_CASE("single point subdivide returns the new vertex id") {
  const auto g = load_bundled("g_ban3");
  const auto [sg, vid] = subdivide(g, parse_point(g, "e1@1/2"));
  CHECK(sg.vertices.size() == 3);
  CHECK(sg.edge_index.count("e1:1") == 1);
  CHECK(sg.edges[sg.edge_index.at("e1:1")].length == rat_of(1, 2));
  CHECK(sg.vertex_index.count(vid) == 1);
  const auto [same, uid] = subdivide(g, parse_point(g, "u"));
  CHECK(uid == "u");
  CHECK(same.vertices.size() == 2);
}

TEST_CASE("single vertex graph") {
  const auto g = parse_graph(R"({"vertices":[{"id":"w","genus":2}],
    "edges":[],"half_edges":[]})");
  CHECK(g.stability() == Stability::stable);
  CHECK(g.betti() == 0);
  CHECK(g.total_genus() == 2);
}
