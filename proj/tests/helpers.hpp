#ifndef PS_TESTS_HELPERS_HPP
#define PS_TESTS_HELPERS_HPP

#include <utility>
#include <vector>

#include "ps/multigraph.hpp"

namespace helpers {

// The running example used across the suite and the README walkthrough.
// Three mutually reachable vertices, a loop on 1 and on 2, and a chord 1->2:
//   e0: 0->1   e1: 1->0   e2: 0->2   e3: 2->0
//   e4: 1->1   e5: 2->2   e6: 1->2
// Its five circuits {e0,e1}, {e2,e3}, {e0,e6,e3}, {e4}, {e5} support exactly
// nine vertex-disjoint families, 4 even and 5 odd.
inline ps::Multigraph worked_example() {
  return ps::Multigraph(3, {{0, 1}, {1, 0}, {0, 2}, {2, 0}, {1, 1}, {2, 2}, {1, 2}});
}

// 0 -> 1 -> ... -> n-1
inline ps::Multigraph chain(int n) {
  std::vector<std::pair<int, int>> endpoints;
  for (int i = 0; i + 1 < n; ++i) endpoints.emplace_back(i, i + 1);
  return ps::Multigraph(n, endpoints);
}

// one loop on each of n vertices
inline ps::Multigraph disjoint_loops(int n) {
  std::vector<std::pair<int, int>> endpoints;
  for (int i = 0; i < n; ++i) endpoints.emplace_back(i, i);
  return ps::Multigraph(n, endpoints);
}

// a single vertex carrying k loops
inline ps::Multigraph loop_bouquet(int k) {
  std::vector<std::pair<int, int>> endpoints;
  for (int i = 0; i < k; ++i) endpoints.emplace_back(0, 0);
  return ps::Multigraph(1, endpoints);
}

// acyclic skeleton of g: keeps only edges that go strictly upward
inline ps::Multigraph dag_from(const ps::Multigraph& g) {
  std::vector<std::pair<int, int>> endpoints;
  for (const ps::Edge& e : g.edges())
    if (e.source < e.target) endpoints.emplace_back(e.source, e.target);
  return ps::Multigraph(g.vertex_count(), endpoints);
}

// relabels vertices by the given image list (a bijection on 0..n-1)
inline ps::Multigraph relabel(const ps::Multigraph& g, const std::vector<int>& images) {
  std::vector<std::pair<int, int>> endpoints;
  for (const ps::Edge& e : g.edges())
    endpoints.emplace_back(images[static_cast<std::size_t>(e.source)],
                           images[static_cast<std::size_t>(e.target)]);
  return ps::Multigraph(g.vertex_count(), endpoints);
}

}  // namespace helpers

#endif  // PS_TESTS_HELPERS_HPP
