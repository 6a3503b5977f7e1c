#include "ps/circuit_engine.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <utility>

#include "ps/errors.hpp"

namespace ps {

namespace {

Circuit make_circuit(const Multigraph& g, std::vector<int> cycle_order) {
  Circuit c;
  c.cycle_order = std::move(cycle_order);
  c.edge_ids = c.cycle_order;
  std::sort(c.edge_ids.begin(), c.edge_ids.end());
  c.vertex_set.reserve(c.cycle_order.size());
  for (int eid : c.cycle_order) c.vertex_set.push_back(g.edge(eid).source);
  std::sort(c.vertex_set.begin(), c.vertex_set.end());
  return c;
}

}  // namespace

std::string to_string(const Multigraph& g, const Circuit& c) {
  std::ostringstream out;
  out << '(';
  for (int eid : c.cycle_order) {
    const Edge& e = g.edge(eid);
    out << e.source << " -e" << e.id << "-> ";
  }
  out << g.edge(c.cycle_order.front()).source << ')';
  return out.str();
}

// Johnson-style elementary-cycle search, adapted to multigraphs by walking
// out-edges instead of neighbors, so parallel edges yield distinct circuits.
// Every circuit is found at its minimum vertex s exactly once: the path is a
// simple vertex path from s and the closing edge lands back on s.
std::vector<Circuit> enumerate_circuits(const Multigraph& g, std::int64_t cap) {
  if (cap <= 0) throw domain_error("circuit cap must be positive");
  const int n = g.vertex_count();
  std::vector<Circuit> out;
  auto emit = [&](const std::vector<int>& cycle_edges) {
    if (static_cast<std::int64_t>(out.size()) >= cap)
      throw resource_limit_error("more than " + std::to_string(cap) +
                                 " circuits (circuit cap)");
    out.push_back(make_circuit(g, cycle_edges));
  };

  // out-edge and in-neighbor lists in edge-id order; loops kept apart
  std::vector<std::vector<std::pair<int, int>>> adj(static_cast<std::size_t>(n));
  std::vector<std::vector<int>> radj(static_cast<std::size_t>(n));
  std::vector<std::vector<int>> loops(static_cast<std::size_t>(n));
  for (const Edge& e : g.edges()) {
    if (e.source == e.target) {
      loops[static_cast<std::size_t>(e.source)].push_back(e.id);
    } else {
      adj[static_cast<std::size_t>(e.source)].push_back({e.id, e.target});
      radj[static_cast<std::size_t>(e.target)].push_back(e.source);
    }
  }

  std::vector<char> fwd(static_cast<std::size_t>(n));
  std::vector<char> bwd(static_cast<std::size_t>(n));
  std::vector<char> in_comp(static_cast<std::size_t>(n));
  std::vector<int> stack;

  for (int s = 0; s < n; ++s) {
    for (int eid : loops[static_cast<std::size_t>(s)]) emit({eid});

    // restrict the non-loop search to vertices >= s lying on a cycle through
    // s: reachable from s and reaching s
    std::fill(fwd.begin(), fwd.end(), 0);
    std::fill(bwd.begin(), bwd.end(), 0);
    fwd[static_cast<std::size_t>(s)] = 1;
    stack.assign(1, s);
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (const auto& [eid, w] : adj[static_cast<std::size_t>(v)]) {
        (void)eid;
        if (w >= s && !fwd[static_cast<std::size_t>(w)]) {
          fwd[static_cast<std::size_t>(w)] = 1;
          stack.push_back(w);
        }
      }
    }
    bwd[static_cast<std::size_t>(s)] = 1;
    stack.assign(1, s);
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int u : radj[static_cast<std::size_t>(v)]) {
        if (u >= s && !bwd[static_cast<std::size_t>(u)]) {
          bwd[static_cast<std::size_t>(u)] = 1;
          stack.push_back(u);
        }
      }
    }
    int comp_size = 0;
    for (int v = 0; v < n; ++v) {
      in_comp[static_cast<std::size_t>(v)] = fwd[static_cast<std::size_t>(v)] &&
                                             bwd[static_cast<std::size_t>(v)];
      comp_size += in_comp[static_cast<std::size_t>(v)];
    }
    if (comp_size < 2) continue;

    std::vector<char> blocked(static_cast<std::size_t>(n), 0);
    std::vector<std::vector<int>> block_list(static_cast<std::size_t>(n));
    std::vector<int> path;

    std::function<void(int)> unblock = [&](int u) {
      if (!blocked[static_cast<std::size_t>(u)]) return;
      blocked[static_cast<std::size_t>(u)] = 0;
      std::vector<int> pending;
      pending.swap(block_list[static_cast<std::size_t>(u)]);
      for (int w : pending) unblock(w);
    };

    std::function<bool(int)> search = [&](int v) -> bool {
      bool found = false;
      blocked[static_cast<std::size_t>(v)] = 1;
      for (const auto& [eid, w] : adj[static_cast<std::size_t>(v)]) {
        if (!in_comp[static_cast<std::size_t>(w)]) continue;
        if (w == s) {
          path.push_back(eid);
          emit(path);
          path.pop_back();
          found = true;
        } else if (!blocked[static_cast<std::size_t>(w)]) {
          path.push_back(eid);
          if (search(w)) found = true;
          path.pop_back();
        }
      }
      if (found) {
        unblock(v);
      } else {
        // v currently reaches no circuit; stay blocked until some successor
        // opens up again
        for (const auto& [eid, w] : adj[static_cast<std::size_t>(v)]) {
          (void)eid;
          if (in_comp[static_cast<std::size_t>(w)])
            block_list[static_cast<std::size_t>(w)].push_back(v);
        }
      }
      return found;
    };

    search(s);
  }

  std::sort(out.begin(), out.end(), [](const Circuit& a, const Circuit& b) {
    if (a.min_vertex() != b.min_vertex()) return a.min_vertex() < b.min_vertex();
    if (a.length() != b.length()) return a.length() < b.length();
    return a.cycle_order < b.cycle_order;
  });
  return out;
}

Permutation induced_permutation(const Multigraph& g, const std::vector<Circuit>& family) {
  const int n = g.vertex_count();
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 0);
  std::vector<char> owned(static_cast<std::size_t>(n), 0);
  for (const Circuit& c : family) {
    for (int eid : c.cycle_order) {
      const Edge& e = g.edge(eid);
      // every circuit vertex sources exactly one of its edges, so an owned
      // source is exactly a vertex shared between two circuits
      if (owned[static_cast<std::size_t>(e.source)])
        throw domain_error("family is not vertex-disjoint");
      owned[static_cast<std::size_t>(e.source)] = 1;
      images[static_cast<std::size_t>(e.source)] = e.target;
    }
  }
  return Permutation(std::move(images));
}

ConflictGraph::ConflictGraph(const Multigraph& g, const std::vector<Circuit>& circuits)
    : count_(static_cast<int>(circuits.size())), words_((g.vertex_count() + 63) / 64) {
  masks_.assign(static_cast<std::size_t>(count_) * static_cast<std::size_t>(words_), 0);
  for (int c = 0; c < count_; ++c)
    for (int v : circuits[static_cast<std::size_t>(c)].vertex_set)
      masks_[static_cast<std::size_t>(c) * static_cast<std::size_t>(words_) +
             static_cast<std::size_t>(v / 64)] |= std::uint64_t(1) << (v % 64);
}

bool ConflictGraph::conflict(int a, int b) const {
  const std::uint64_t* ma = masks_.data() + static_cast<std::size_t>(a) * words_;
  const std::uint64_t* mb = masks_.data() + static_cast<std::size_t>(b) * words_;
  for (int w = 0; w < words_; ++w)
    if (ma[w] & mb[w]) return true;
  return false;
}

std::vector<std::vector<int>> ConflictGraph::adjacency() const {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(count_));
  for (int a = 0; a < count_; ++a)
    for (int b = a + 1; b < count_; ++b)
      if (conflict(a, b)) {
        adj[static_cast<std::size_t>(a)].push_back(b);
        adj[static_cast<std::size_t>(b)].push_back(a);
      }
  return adj;
}

namespace {

// Visits every vertex-disjoint family exactly once, in lexicographic order of
// circuit indices, maintaining the induced permutation's image list in place.
// Memory stays proportional to the recursion depth times the candidate lists.
template <typename Visit>
void walk_families(const Multigraph& g, const std::vector<Circuit>& circuits,
                   std::int64_t node_cap, Visit&& visit) {
  if (node_cap <= 0) throw domain_error("node cap must be positive");
  const ConflictGraph conflicts(g, circuits);
  const int n = g.vertex_count();
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 0);
  std::vector<int> chosen;
  std::int64_t nodes = 0;

  auto touch = [&] {
    if (++nodes > node_cap)
      throw resource_limit_error("more than " + std::to_string(node_cap) +
                                 " families visited (node cap)");
  };
  auto apply = [&](int k) {
    for (int eid : circuits[static_cast<std::size_t>(k)].cycle_order) {
      const Edge& e = g.edge(eid);
      images[static_cast<std::size_t>(e.source)] = e.target;
    }
  };
  auto undo = [&](int k) {
    for (int eid : circuits[static_cast<std::size_t>(k)].cycle_order) {
      const Edge& e = g.edge(eid);
      images[static_cast<std::size_t>(e.source)] = e.source;
    }
  };

  touch();
  visit(static_cast<const std::vector<int>&>(chosen),
        static_cast<const std::vector<int>&>(images));

  std::function<void(const std::vector<int>&)> rec = [&](const std::vector<int>& cands) {
    for (std::size_t t = 0; t < cands.size(); ++t) {
      const int k = cands[t];
      chosen.push_back(k);
      apply(k);
      touch();
      visit(static_cast<const std::vector<int>&>(chosen),
            static_cast<const std::vector<int>&>(images));
      std::vector<int> tail;
      tail.reserve(cands.size() - t - 1);
      for (std::size_t u = t + 1; u < cands.size(); ++u)
        if (!conflicts.conflict(k, cands[u])) tail.push_back(cands[u]);
      if (!tail.empty()) rec(tail);
      undo(k);
      chosen.pop_back();
    }
  };

  std::vector<int> all(circuits.size());
  std::iota(all.begin(), all.end(), 0);
  if (!all.empty()) rec(all);
}

}  // namespace

SignedCount signed_family_count(const Multigraph& g, const std::vector<Circuit>& circuits,
                                std::int64_t node_cap) {
  SignedCount sc;
  walk_families(g, circuits, node_cap, [&](const std::vector<int>& chosen, const std::vector<int>&) {
    if (chosen.size() % 2 == 0)
      ++sc.even;
    else
      ++sc.odd;
  });
  return sc;
}

Int ps_via_circuits(const Multigraph& g, std::int64_t circuit_cap, std::int64_t node_cap) {
  return signed_family_count(g, enumerate_circuits(g, circuit_cap), node_cap).value();
}

std::vector<VertexDisjointFamily> materialize_families(const Multigraph& g,
                                                       const std::vector<Circuit>& circuits,
                                                       std::int64_t family_cap) {
  std::vector<VertexDisjointFamily> out;
  walk_families(g, circuits, family_cap,
                [&](const std::vector<int>& chosen, const std::vector<int>& images) {
                  out.push_back(VertexDisjointFamily{chosen, Permutation(images)});
                });
  return out;
}

std::map<Permutation, SignedCount> group_by_induced_permutation(const Multigraph& g,
                                                                std::int64_t circuit_cap,
                                                                std::int64_t node_cap) {
  const auto circuits = enumerate_circuits(g, circuit_cap);
  std::map<Permutation, SignedCount> classes;
  walk_families(g, circuits, node_cap,
                [&](const std::vector<int>& chosen, const std::vector<int>& images) {
                  SignedCount& sc = classes[Permutation(images)];
                  if (chosen.size() % 2 == 0)
                    ++sc.even;
                  else
                    ++sc.odd;
                });
  return classes;
}

std::vector<ClassProductRow> verify_class_products(const Multigraph& g, int factorial_limit,
                                                   std::int64_t circuit_cap,
                                                   std::int64_t node_cap) {
  const int n = g.vertex_count();
  if (n > factorial_limit)
    throw resource_limit_error("vertex count " + std::to_string(n) +
                               " exceeds the factorial limit " + std::to_string(factorial_limit));
  const auto classes = group_by_induced_permutation(g, circuit_cap, node_cap);
  const IntMatrix m = identity_minus(adjacency_matrix(g));
  std::vector<ClassProductRow> rows;
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 0);
  do {
    Permutation rho(images);
    Int class_value = 0;
    if (auto it = classes.find(rho); it != classes.end()) class_value = it->second.value();
    Int product = signed_elementary_product(m, rho);
    const bool equal = class_value == product;
    rows.push_back(ClassProductRow{std::move(rho), std::move(class_value), std::move(product), equal});
  } while (std::next_permutation(images.begin(), images.end()));
  return rows;
}

}  // namespace ps
