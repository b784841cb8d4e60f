#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "grappa/rational.hpp"

namespace grappa {

struct GraphError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Vertex {
  std::string id;
  long genus = 0;
};

// Unoriented edge record; darts 2k and 2k+1 are the two orientations.
struct Edge {
  std::string id;
  int src = -1;
  int dst = -1;
  Rat length;
};

struct HalfEdge {
  std::string id;
  int src = -1;
};

enum class Stability { stable, semistable, neither };

struct ReductionGraph {
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;
  std::vector<HalfEdge> half_edges;

  std::map<std::string, int> vertex_index;
  std::map<std::string, int> edge_index;
  std::map<std::string, int> half_index;

  std::vector<std::vector<int>> out_darts;  // per vertex, sorted by dart id
  std::vector<std::vector<int>> out_halfs;  // per vertex, sorted by id

  int num_darts() const { return 2 * static_cast<int>(edges.size()); }
  int dart_edge(int d) const { return d / 2; }
  bool dart_forward(int d) const { return (d & 1) == 0; }
  int dart_opposite(int d) const { return d ^ 1; }
  int dart_source(int d) const {
    const Edge& e = edges[d / 2];
    return (d & 1) == 0 ? e.src : e.dst;
  }
  int dart_target(int d) const { return dart_source(d ^ 1); }
  const Rat& dart_length(int d) const { return edges[d / 2].length; }

  long degree(int v) const {
    return static_cast<long>(out_darts[v].size() + out_halfs[v].size());
  }

  int betti() const {
    return static_cast<int>(edges.size()) - static_cast<int>(vertices.size()) + 1;
  }
  long total_genus() const;
  // Euler characteristic of the punctured curve: 2 - 2 total_genus - #half_edges.
  long euler_char() const;
  // Edge valence only (darts out of v), without half-edges.
  long valence(int v) const { return static_cast<long>(out_darts[v].size()); }
  std::vector<Rat> canonical_divisor() const;
  Stability stability() const;

  // Index of the lexicographically smallest vertex id.
  int base_vertex() const;

  void rebuild_indices();
};

// Point of the geometric realization in canonical form.
struct GraphPoint {
  enum class Kind { vertex, edge, half_edge };
  Kind kind = Kind::vertex;
  int index = 0;
  Rat offset;  // from edge src / half-edge source; 0 < offset < length on edges

  static GraphPoint at_vertex(int v) { return {Kind::vertex, v, Rat(0)}; }

  bool operator==(const GraphPoint& o) const {
    return kind == o.kind && index == o.index && offset == o.offset;
  }
  bool operator<(const GraphPoint& o) const {
    if (kind != o.kind) return kind < o.kind;
    if (index != o.index) return index < o.index;
    return offset < o.offset;
  }
};

ReductionGraph parse_graph(const std::string& json_text);
ReductionGraph load_graph_file(const std::string& path);
std::string serialize_graph(const ReductionGraph& g);
std::string graph_hash(const ReductionGraph& g);
std::string stability_name(Stability s);

// Canonicalizes: edge endpoints become vertices, offsets are range-checked.
GraphPoint make_edge_point(const ReductionGraph& g, int edge, const Rat& offset);
GraphPoint make_half_point(const ReductionGraph& g, int half, const Rat& offset);
GraphPoint parse_point(const ReductionGraph& g, const std::string& text);
std::string point_to_string(const ReductionGraph& g, const GraphPoint& p);

// Result of subdividing at a finite set of points.
struct Subdivision {
  ReductionGraph graph;
  // Per original edge, the chain of new edge indices from src to dst and the
  // cut offsets between them (increasing, exclusive).
  std::vector<std::vector<int>> edge_chain;
  std::vector<std::vector<Rat>> edge_cuts;
  // Per original half-edge, new edge indices outward plus the final half-edge.
  std::vector<std::vector<int>> half_chain;
  std::vector<std::vector<Rat>> half_cuts;
  std::vector<int> half_tail;
  // Original vertex index -> new vertex index.
  std::vector<int> vertex_map;

  GraphPoint locate(const ReductionGraph& original, const GraphPoint& p) const;
  // Sends a cycle written in original edge coordinates to new edge coordinates.
  std::vector<Rat> push_cycle(const ReductionGraph& original,
                              const std::vector<Rat>& edge_coeffs) const;
};

Subdivision subdivide_at(const ReductionGraph& g, const std::vector<GraphPoint>& points);

// Single-point form; returns the id of the vertex sitting at p.
std::pair<ReductionGraph, std::string> subdivide(const ReductionGraph& g, const GraphPoint& p);

}  // namespace grappa
