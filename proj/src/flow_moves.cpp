#include "ps/flow_moves.hpp"

#include <numeric>
#include <utility>

#include "ps/errors.hpp"

namespace ps {

const char* to_string(VertexKind kind) {
  switch (kind) {
    case VertexKind::source:
      return "source";
    case VertexKind::sink:
      return "sink";
    case VertexKind::isolated:
      return "isolated";
    case VertexKind::internal:
      return "internal";
  }
  return "internal";
}

VertexKind classify_vertex(const Multigraph& g, int v) {
  if (v < 0 || v >= g.vertex_count()) throw domain_error("vertex index out of range");
  const int in = g.in_degree(v);
  const int out = g.out_degree(v);
  if (in == 0 && out == 0) return VertexKind::isolated;
  if (in == 0) return VertexKind::source;
  if (out == 0) return VertexKind::sink;
  return VertexKind::internal;
}

Multigraph eliminate(const Multigraph& g, int v) {
  if (classify_vertex(g, v) == VertexKind::internal)
    throw domain_error("vertex " + std::to_string(v) +
                       " is internal; only sources, sinks and isolated vertices can go");
  return delete_vertex(g, v).graph;
}

ReductionTrace reduce_to_closure(const Multigraph& g) {
  ReductionTrace trace;
  trace.vertex_map.resize(static_cast<std::size_t>(g.vertex_count()));
  std::iota(trace.vertex_map.begin(), trace.vertex_map.end(), 0);
  trace.edge_map.resize(static_cast<std::size_t>(g.edge_count()));
  std::iota(trace.edge_map.begin(), trace.edge_map.end(), 0);

  std::vector<int> origin = trace.vertex_map;  // current index -> original index
  Multigraph cur = g;
  for (;;) {
    int victim = -1;
    VertexKind kind = VertexKind::internal;
    for (int v = 0; v < cur.vertex_count(); ++v) {
      kind = classify_vertex(cur, v);
      if (kind != VertexKind::internal) {
        victim = v;
        break;
      }
    }
    if (victim < 0) break;

    trace.steps.push_back(ReductionStep{origin[static_cast<std::size_t>(victim)], kind});
    VertexDeletion del = delete_vertex(cur, victim);
    for (int& image : trace.vertex_map)
      if (image >= 0) image = del.vertex_map[static_cast<std::size_t>(image)];
    for (int& image : trace.edge_map)
      if (image >= 0) image = del.edge_map[static_cast<std::size_t>(image)];
    std::vector<int> next_origin(static_cast<std::size_t>(del.graph.vertex_count()));
    for (int w = 0; w < cur.vertex_count(); ++w) {
      const int mapped = del.vertex_map[static_cast<std::size_t>(w)];
      if (mapped >= 0) next_origin[static_cast<std::size_t>(mapped)] = origin[static_cast<std::size_t>(w)];
    }
    origin = std::move(next_origin);
    cur = std::move(del.graph);
  }
  trace.final = std::move(cur);
  return trace;
}

}  // namespace ps
