#ifndef PS_FLOW_MOVES_HPP
#define PS_FLOW_MOVES_HPP

#include <string>
#include <vector>

#include "ps/multigraph.hpp"

namespace ps {

enum class VertexKind { source, sink, isolated, internal };

const char* to_string(VertexKind kind);

// source: in-degree 0 and out-degree > 0; sink: the reverse; isolated: both
// 0. A looped vertex feeds both of its own degrees, so it is internal.
VertexKind classify_vertex(const Multigraph& g, int v);

// Deletes a source, sink or isolated vertex. Such a vertex lies on no
// circuit, so the circuit structure, and with it the Parry-Sullivan number,
// is untouched. Throws on internal vertices.
Multigraph eliminate(const Multigraph& g, int v);

struct ReductionStep {
  int original_vertex;  // index in the graph the reduction started from
  VertexKind kind;      // classification at deletion time

  bool operator==(const ReductionStep&) const = default;
};

struct ReductionTrace {
  std::vector<ReductionStep> steps;
  Multigraph final;
  std::vector<int> vertex_map;  // input vertex -> final vertex, -1 if deleted
  std::vector<int> edge_map;    // input edge -> final edge, -1 if deleted
};

// Repeatedly eliminates the lowest-indexed non-internal vertex until every
// remaining vertex is internal. Deterministic, idempotent, and invisible to
// the circuit list modulo the returned relabeling maps.
ReductionTrace reduce_to_closure(const Multigraph& g);

}  // namespace ps

#endif  // PS_FLOW_MOVES_HPP
