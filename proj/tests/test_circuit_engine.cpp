#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include <doctest.h>

#include "helpers.hpp"
#include "oracles.hpp"
#include "ps/circuit_engine.hpp"
#include "ps/errors.hpp"
#include "ps/exact_linear.hpp"

using ps::Circuit;
using ps::Int;
using ps::Multigraph;
using ps::Permutation;

namespace {

std::vector<std::vector<int>> edge_id_sets(const std::vector<Circuit>& circuits) {
  std::vector<std::vector<int>> out;
  out.reserve(circuits.size());
  for (const Circuit& c : circuits) out.push_back(c.edge_ids);
  std::sort(out.begin(), out.end());
  return out;
}

// small graphs with parallel edges, loops, empty graphs; edge counts stay
// within the oracle's bitmask range
std::vector<Multigraph> oracle_corpus() {
  std::vector<Multigraph> graphs;
  graphs.push_back(helpers::worked_example());
  graphs.push_back(Multigraph());
  graphs.push_back(helpers::chain(4));
  graphs.push_back(helpers::disjoint_loops(3));
  graphs.push_back(helpers::loop_bouquet(4));
  graphs.push_back(Multigraph(2, {{0, 1}, {0, 1}, {1, 0}, {1, 0}, {1, 0}}));
  for (std::uint64_t seed = 0; seed < 150; ++seed) graphs.push_back(ps::random_graph(5, 9, seed));
  // seeds that once exposed a stale component-membership bug in the search
  for (std::uint64_t seed : {77ull, 132ull, 159ull, 422ull, 463ull, 529ull})
    graphs.push_back(ps::random_graph(6, 10, seed));
  return graphs;
}

}  // namespace

TEST_CASE("worked example yields its five canonical circuits") {
  const Multigraph g = helpers::worked_example();
  const auto circuits = ps::enumerate_circuits(g);
  REQUIRE(circuits.size() == 5);
  CHECK(ps::to_string(g, circuits[0]) == "(0 -e0-> 1 -e1-> 0)");
  CHECK(ps::to_string(g, circuits[1]) == "(0 -e2-> 2 -e3-> 0)");
  CHECK(ps::to_string(g, circuits[2]) == "(0 -e0-> 1 -e6-> 2 -e3-> 0)");
  CHECK(ps::to_string(g, circuits[3]) == "(1 -e4-> 1)");
  CHECK(ps::to_string(g, circuits[4]) == "(2 -e5-> 2)");

  CHECK(circuits[2].edge_ids == std::vector<int>{0, 3, 6});
  CHECK(circuits[2].vertex_set == std::vector<int>{0, 1, 2});
  CHECK(circuits[2].cycle_order == std::vector<int>{0, 6, 3});
  CHECK(circuits[2].length() == 3);
  CHECK(circuits[2].min_vertex() == 0);
  CHECK(circuits[3].length() == 1);
  CHECK(circuits[3].min_vertex() == 1);
}

TEST_CASE("a circuit whose minimum vertex is below a later start is found once") {
  // regression: this graph's 2-cycle {e2,e4} and 3-cycle {e1,e2,e3} were once
  // also emitted from start 1 because membership flags below the start kept
  // their previous values
  const Multigraph g = ps::random_graph(6, 10, 77);
  REQUIRE(g.vertex_count() == 3);
  const auto circuits = ps::enumerate_circuits(g);
  CHECK(circuits.size() == 4);
  const auto sets = edge_id_sets(circuits);
  CHECK(std::adjacent_find(sets.begin(), sets.end()) == sets.end());
  CHECK(ps::ps_via_circuits(g) == ps::ps_via_determinant(g));
}

TEST_CASE("enumeration matches the subset oracle across the corpus") {
  for (const Multigraph& g : oracle_corpus()) {
    const auto got = edge_id_sets(ps::enumerate_circuits(g));
    const auto want = oracle::all_circuits(g);
    CHECK(got == want);
  }
}

TEST_CASE("enumerated circuits satisfy their structural invariants") {
  for (const Multigraph& g : oracle_corpus()) {
    const auto circuits = ps::enumerate_circuits(g);
    for (const Circuit& c : circuits) {
      CHECK(std::is_sorted(c.edge_ids.begin(), c.edge_ids.end()));
      CHECK(std::is_sorted(c.vertex_set.begin(), c.vertex_set.end()));
      CHECK(oracle::is_circuit(g, c.edge_ids));
      REQUIRE(c.cycle_order.size() == c.edge_ids.size());

      // cycle_order is the edge set arranged into a cycle from the min vertex
      auto sorted_order = c.cycle_order;
      std::sort(sorted_order.begin(), sorted_order.end());
      CHECK(sorted_order == c.edge_ids);
      CHECK(g.edge(c.cycle_order.front()).source == c.min_vertex());
      for (std::size_t i = 0; i + 1 < c.cycle_order.size(); ++i)
        CHECK(g.edge(c.cycle_order[i]).target == g.edge(c.cycle_order[i + 1]).source);
      CHECK(g.edge(c.cycle_order.back()).target == c.min_vertex());

      std::vector<int> sources;
      for (int eid : c.cycle_order) sources.push_back(g.edge(eid).source);
      std::sort(sources.begin(), sources.end());
      CHECK(sources == c.vertex_set);
    }
    // canonical output order
    CHECK(std::is_sorted(circuits.begin(), circuits.end(), [](const Circuit& a, const Circuit& b) {
      if (a.min_vertex() != b.min_vertex()) return a.min_vertex() < b.min_vertex();
      if (a.length() != b.length()) return a.length() < b.length();
      return a.cycle_order < b.cycle_order;
    }));
  }
}

TEST_CASE("parallel edges multiply circuits") {
  // 2 edges one way, 3 back: every pairing is its own 2-cycle
  const Multigraph g(2, {{0, 1}, {0, 1}, {1, 0}, {1, 0}, {1, 0}});
  CHECK(ps::enumerate_circuits(g).size() == 6);
  CHECK(ps::enumerate_circuits(helpers::loop_bouquet(3)).size() == 3);
}

TEST_CASE("the circuit cap cuts enumeration short") {
  const Multigraph g = helpers::worked_example();
  CHECK_THROWS_AS(ps::enumerate_circuits(g, 4), ps::resource_limit_error);
  CHECK(ps::enumerate_circuits(g, 5).size() == 5);
  CHECK_THROWS_AS(ps::enumerate_circuits(g, 0), ps::domain_error);
}

TEST_CASE("induced permutation of the empty family is the identity") {
  const Multigraph g = helpers::worked_example();
  CHECK(ps::induced_permutation(g, {}) == Permutation::identity(3));
}

TEST_CASE("induced permutation follows family edges") {
  const Multigraph g = helpers::worked_example();
  const auto circuits = ps::enumerate_circuits(g);
  CHECK(ps::induced_permutation(g, {circuits[0]}) == Permutation({1, 0, 2}));
  CHECK(ps::induced_permutation(g, {circuits[2]}) == Permutation({1, 2, 0}));
  CHECK(ps::induced_permutation(g, {circuits[3], circuits[4]}) == Permutation::identity(3));
  CHECK(ps::induced_permutation(g, {circuits[0], circuits[4]}) == Permutation({1, 0, 2}));
}

TEST_CASE("induced permutation rejects overlapping circuits") {
  const Multigraph g = helpers::worked_example();
  const auto circuits = ps::enumerate_circuits(g);
  // circuits 0 and 2 share vertices 0 and 1
  CHECK_THROWS_AS(ps::induced_permutation(g, {circuits[0], circuits[2]}), ps::domain_error);
  CHECK_THROWS_AS(ps::induced_permutation(g, {circuits[3], circuits[3]}), ps::domain_error);
}

TEST_CASE("conflict graph relates circuits sharing a vertex") {
  const Multigraph g = helpers::worked_example();
  const auto circuits = ps::enumerate_circuits(g);
  const ps::ConflictGraph cg(g, circuits);
  REQUIRE(cg.circuit_count() == 5);
  const std::vector<std::vector<int>> expected = {
      {1, 2, 3}, {0, 2, 4}, {0, 1, 3, 4}, {0, 2}, {1, 2}};
  CHECK(cg.adjacency() == expected);
  for (int a = 0; a < 5; ++a)
    for (int b = 0; b < 5; ++b) {
      std::vector<int> common;
      std::set_intersection(circuits[a].vertex_set.begin(), circuits[a].vertex_set.end(),
                            circuits[b].vertex_set.begin(), circuits[b].vertex_set.end(),
                            std::back_inserter(common));
      CHECK(cg.conflict(a, b) == !common.empty());
    }
}

TEST_CASE("worked example has four even and five odd families") {
  const Multigraph g = helpers::worked_example();
  const ps::SignedCount sc = ps::signed_family_count(g, ps::enumerate_circuits(g));
  CHECK(sc.even == 4);
  CHECK(sc.odd == 5);
  CHECK(sc.value() == -1);
}

TEST_CASE("an empty graph has exactly the empty family") {
  const Multigraph g;
  const ps::SignedCount sc = ps::signed_family_count(g, ps::enumerate_circuits(g));
  CHECK(sc.even == 1);
  CHECK(sc.odd == 0);
  CHECK(ps::ps_via_circuits(g) == 1);
}

TEST_CASE("n disjoint loops split the power set evenly") {
  for (int n = 1; n <= 10; ++n) {
    const Multigraph g = helpers::disjoint_loops(n);
    const ps::SignedCount sc = ps::signed_family_count(g, ps::enumerate_circuits(g));
    const Int half = Int(1) << (n - 1);
    CHECK(sc.even == half);
    CHECK(sc.odd == half);
    CHECK(sc.value() == 0);
  }
}

TEST_CASE("family counts match the subset oracle across the corpus") {
  for (const Multigraph& g : oracle_corpus()) {
    const auto circuits = ps::enumerate_circuits(g);
    if (circuits.size() > 16) continue;
    const auto [even, odd] = oracle::family_counts(g, edge_id_sets(circuits));
    const ps::SignedCount sc = ps::signed_family_count(g, circuits);
    CHECK(sc.even == even);
    CHECK(sc.odd == odd);
  }
}

TEST_CASE("signed enumeration equals the determinant across the corpus") {
  for (const Multigraph& g : oracle_corpus())
    CHECK(ps::ps_via_circuits(g) == ps::ps_via_determinant(g));
}

TEST_CASE("the node cap cuts the family walk short") {
  const Multigraph g = helpers::worked_example();
  const auto circuits = ps::enumerate_circuits(g);
  CHECK_THROWS_AS(ps::signed_family_count(g, circuits, 8), ps::resource_limit_error);
  CHECK(ps::signed_family_count(g, circuits, 9).value() == -1);
  CHECK_THROWS_AS(ps::signed_family_count(g, circuits, 0), ps::domain_error);
}

TEST_CASE("materialized families come back in walk order with cached permutations") {
  const Multigraph g = helpers::worked_example();
  const auto circuits = ps::enumerate_circuits(g);
  const auto families = ps::materialize_families(g, circuits);
  REQUIRE(families.size() == 9);
  const std::vector<std::vector<int>> expected_indices = {
      {}, {0}, {0, 4}, {1}, {1, 3}, {2}, {3}, {3, 4}, {4}};
  for (std::size_t i = 0; i < families.size(); ++i) {
    CHECK(families[i].circuit_indices == expected_indices[i]);
    std::vector<Circuit> members;
    for (int k : families[i].circuit_indices) members.push_back(circuits[k]);
    CHECK(families[i].induced == ps::induced_permutation(g, members));
  }
}

TEST_CASE("materialized families respect the family cap") {
  const Multigraph g = helpers::worked_example();
  const auto circuits = ps::enumerate_circuits(g);
  CHECK_THROWS_AS(ps::materialize_families(g, circuits, 5), ps::resource_limit_error);
}

TEST_CASE("class grouping splits the worked example into four classes") {
  const auto classes = ps::group_by_induced_permutation(helpers::worked_example());
  REQUIRE(classes.size() == 4);
  CHECK(classes.at(Permutation({0, 1, 2})) == ps::SignedCount{2, 2});
  CHECK(classes.at(Permutation({1, 0, 2})) == ps::SignedCount{1, 1});
  CHECK(classes.at(Permutation({1, 2, 0})) == ps::SignedCount{0, 1});
  CHECK(classes.at(Permutation({2, 1, 0})) == ps::SignedCount{1, 1});
}

TEST_CASE("class values sum to the signed family count") {
  for (const Multigraph& g : oracle_corpus()) {
    Int total = 0;
    for (const auto& [rho, sc] : ps::group_by_induced_permutation(g)) total += sc.value();
    CHECK(total == ps::ps_via_circuits(g));
  }
}

TEST_CASE("class products verify on the worked example") {
  const auto rows = ps::verify_class_products(helpers::worked_example());
  REQUIRE(rows.size() == 6);
  CHECK(std::is_sorted(rows.begin(), rows.end(),
                       [](const auto& a, const auto& b) { return a.rho < b.rho; }));
  for (const auto& row : rows) {
    CHECK(row.equal);
    CHECK(row.class_value == row.elementary_product);
  }
  CHECK(rows[0].rho == Permutation({0, 1, 2}));
  CHECK(rows[0].class_value == 0);
  // the 3-cycle class carries the whole number
  CHECK(rows[1].rho == Permutation({0, 2, 1}));
  CHECK(rows[1].class_value == 0);
  CHECK(rows[3].rho == Permutation({1, 2, 0}));
  CHECK(rows[3].class_value == -1);
}

TEST_CASE("class products on an acyclic graph are nonzero only at the identity") {
  const auto rows = ps::verify_class_products(helpers::chain(3));
  for (const auto& row : rows) {
    CHECK(row.equal);
    if (row.rho == Permutation::identity(3))
      CHECK(row.class_value == 1);
    else
      CHECK(row.class_value == 0);
  }
}

TEST_CASE("class products count parallel-edge multiplicity") {
  const Multigraph g(2, {{0, 1}, {0, 1}, {1, 0}, {1, 0}, {1, 0}});
  const auto rows = ps::verify_class_products(g);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].rho == Permutation({0, 1}));
  CHECK(rows[0].class_value == 1);
  CHECK(rows[0].equal);
  CHECK(rows[1].rho == Permutation({1, 0}));
  CHECK(rows[1].class_value == -6);
  CHECK(rows[1].elementary_product == -6);
  CHECK(rows[1].equal);
}

TEST_CASE("class products verify across the corpus") {
  for (const Multigraph& g : oracle_corpus()) {
    if (g.vertex_count() > 5) continue;
    for (const auto& row : ps::verify_class_products(g)) CHECK(row.equal);
  }
}

TEST_CASE("class product verification respects the factorial limit") {
  CHECK_THROWS_AS(ps::verify_class_products(helpers::disjoint_loops(9)), ps::resource_limit_error);
  CHECK_NOTHROW(ps::verify_class_products(helpers::disjoint_loops(3), 3));
  CHECK_THROWS_AS(ps::verify_class_products(helpers::disjoint_loops(4), 3),
                  ps::resource_limit_error);
}
