#ifndef PS_MULTIGRAPH_HPP
#define PS_MULTIGRAPH_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "ps/int_matrix.hpp"

namespace ps {

// One directed edge. Source and target may coincide (loop).
struct Edge {
  int id;
  int source;
  int target;

  bool operator==(const Edge&) const = default;
};

// Finite directed multigraph. Vertices are the dense indices 0..n-1 and edge
// ids are dense 0..m-1 in construction order, so parallel edges stay distinct
// records. The zero-vertex graph is a legal value. Values are immutable after
// construction; every "mutation" below builds a new graph.
class Multigraph {
 public:
  Multigraph() = default;
  Multigraph(int vertex_count, const std::vector<std::pair<int, int>>& endpoints);

  int vertex_count() const { return vertex_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int id) const;

  int out_degree(int v) const;
  int in_degree(int v) const;

  bool operator==(const Multigraph&) const = default;

 private:
  int vertex_count_ = 0;
  std::vector<Edge> edges_;
};

// Entry (i, j) counts the edges from vertex i to vertex j.
IntMatrix adjacency_matrix(const Multigraph& g);

// Result of deleting one vertex: the smaller graph plus both index maps.
// vertex_map[w] = w for w < v, w - 1 for w > v, -1 for v itself.
// edge_map[e] = the surviving edge's new dense id, -1 if e touched v.
struct VertexDeletion {
  Multigraph graph;
  std::vector<int> vertex_map;
  std::vector<int> edge_map;
};

VertexDeletion delete_vertex(const Multigraph& g, int v);

// Line-oriented text format:
//   # comment (blank lines are skipped too)
//   vertices <n>
//   edge <src> <dst>
// Vertices are 0-based; a repeated edge line is a parallel edge. Parse errors
// report the offending line number. The serializer emits the same format with
// edges in id order, so parse(serialize(g)) == g.
Multigraph parse_graph(std::istream& in);
Multigraph parse_graph(const std::string& text);
std::string serialize_graph(const Multigraph& g);

// Deterministic in (max_vertices, max_edges, seed): vertex count uniform in
// [0, max_vertices], edge count uniform in [0, max_edges] (0 when there are
// no vertices), endpoints uniform and independent.
Multigraph random_graph(int max_vertices, int max_edges, std::uint64_t seed);

}  // namespace ps

#endif  // PS_MULTIGRAPH_HPP
