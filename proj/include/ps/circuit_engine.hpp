#ifndef PS_CIRCUIT_ENGINE_HPP
#define PS_CIRCUIT_ENGINE_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ps/bigint.hpp"
#include "ps/exact_linear.hpp"
#include "ps/multigraph.hpp"

namespace ps {

// Circuit enumeration and the family walk are exponential in the worst case;
// these caps make them fail loudly instead of hanging. Both are configurable
// per call and from the CLI.
inline constexpr std::int64_t kDefaultCircuitCap = 1'000'000;
inline constexpr std::int64_t kDefaultNodeCap = 10'000'000;

// A set of edges that can be arranged into a directed cycle whose sources are
// pairwise distinct. The edge set is the circuit's identity; cycle_order is
// its canonical arrangement, starting at the smallest vertex. A loop is a
// circuit of length 1; parallel edges give distinct circuits.
struct Circuit {
  std::vector<int> edge_ids;     // ascending
  std::vector<int> vertex_set;   // ascending; exactly the sources of the edges
  std::vector<int> cycle_order;  // edge ids in traversal order

  int length() const { return static_cast<int>(edge_ids.size()); }
  int min_vertex() const { return vertex_set.front(); }

  bool operator==(const Circuit&) const = default;
};

// "(v0 -e3-> v1 -e7-> v0)"
std::string to_string(const Multigraph& g, const Circuit& c);

// Every circuit of g exactly once, sorted by (min vertex, length,
// cycle_order). Throws resource_limit_error past the cap.
std::vector<Circuit> enumerate_circuits(const Multigraph& g,
                                        std::int64_t cap = kDefaultCircuitCap);

// rho(v) = target of the unique family edge leaving v, or v itself when no
// family edge does. Throws if the family is not vertex-disjoint.
Permutation induced_permutation(const Multigraph& g, const std::vector<Circuit>& family);

// Counts of even-sized and odd-sized vertex-disjoint circuit families. The
// empty family counts as even, so value() is the Parry-Sullivan number when
// the counts cover the whole circuit list.
struct SignedCount {
  Int even = 0;
  Int odd = 0;

  Int value() const { return even - odd; }

  bool operator==(const SignedCount&) const = default;
};

// Conflict relation over an enumerated circuit list: two circuits conflict
// exactly when their vertex sets intersect. Vertex-disjoint families are the
// independent sets of this graph.
class ConflictGraph {
 public:
  ConflictGraph(const Multigraph& g, const std::vector<Circuit>& circuits);

  int circuit_count() const { return count_; }
  bool conflict(int a, int b) const;

  // Materialized neighbor lists; quadratic, intended for small lists.
  std::vector<std::vector<int>> adjacency() const;

 private:
  int count_ = 0;
  int words_ = 0;
  std::vector<std::uint64_t> masks_;  // one vertex bitset per circuit
};

// Walks every vertex-disjoint family of `circuits` exactly once (the empty
// family included) with a +/- accumulator, never materializing the family
// list. Each visited family costs one node against the cap.
SignedCount signed_family_count(const Multigraph& g, const std::vector<Circuit>& circuits,
                                std::int64_t node_cap = kDefaultNodeCap);

// signed_family_count over the full circuit list. Equals ps_via_determinant
// on every graph.
Int ps_via_circuits(const Multigraph& g, std::int64_t circuit_cap = kDefaultCircuitCap,
                    std::int64_t node_cap = kDefaultNodeCap);

struct VertexDisjointFamily {
  std::vector<int> circuit_indices;  // ascending, into the canonical circuit list
  Permutation induced;               // cached induced permutation

  bool operator==(const VertexDisjointFamily&) const = default;
};

// The full family list, in walk order (lexicographic by circuit indices).
// Memory-hungry by design; the cap bounds how many families come back.
std::vector<VertexDisjointFamily> materialize_families(
    const Multigraph& g, const std::vector<Circuit>& circuits,
    std::int64_t family_cap = kDefaultNodeCap);

// Signed family counts split by induced permutation. Permutations with no
// family are absent; the class values sum to ps_via_circuits.
std::map<Permutation, SignedCount> group_by_induced_permutation(
    const Multigraph& g, std::int64_t circuit_cap = kDefaultCircuitCap,
    std::int64_t node_cap = kDefaultNodeCap);

// One row per rho in S_n, in lexicographic order: the class's signed family
// count next to the signed elementary product of I - A. The columns agree on
// every graph; a row where they differ would falsify the determinant
// identity, which is exactly what the fuzz harness looks for.
struct ClassProductRow {
  Permutation rho;
  Int class_value;  // 0 when no family induces rho
  Int elementary_product;
  bool equal;
};

std::vector<ClassProductRow> verify_class_products(
    const Multigraph& g, int factorial_limit = kDefaultFactorialLimit,
    std::int64_t circuit_cap = kDefaultCircuitCap, std::int64_t node_cap = kDefaultNodeCap);

}  // namespace ps

#endif  // PS_CIRCUIT_ENGINE_HPP
