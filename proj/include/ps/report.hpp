#ifndef PS_REPORT_HPP
#define PS_REPORT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ps/bigint.hpp"
#include "ps/circuit_engine.hpp"
#include "ps/flow_moves.hpp"
#include "ps/multigraph.hpp"

namespace ps {

enum class Method { determinant, circuits, leibniz, all };

// Accepts "det", "circuits", "leibniz", "all".
Method parse_method(const std::string& name);

struct Caps {
  std::int64_t circuits = kDefaultCircuitCap;
  std::int64_t nodes = kDefaultNodeCap;
};

// One computed route. skipped is "" when value holds, else "cap" (a
// user-configurable cap cut enumeration short) or "limit" (the Leibniz
// factorial limit).
struct MethodResult {
  std::optional<Int> value;
  std::string skipped;
};

struct FamilyEntry {
  std::string text;    // "{}" or "{(0 -e0-> 1 -e1-> 0), (2 -e5-> 2)}"
  std::string parity;  // "even" | "odd"
};

struct ClassEntry {
  std::string permutation;
  SignedCount count;
  std::vector<FamilyEntry> families;
};

struct FamilySection {
  Int total = 0;
  SignedCount counts;
  std::vector<ClassEntry> classes;  // sorted by permutation image list
};

struct CircuitSection {
  std::vector<std::string> circuits;  // canonical order
  std::optional<FamilySection> families;
};

struct ReduceSection {
  std::vector<ReductionStep> steps;
  std::string final_graph;  // serialized text
  Int ps_before = 0;
  Int ps_after = 0;
  bool preserved = false;
};

// The one value every subcommand renders, to text or JSON, with unused
// sections absent. Both renderers are pure functions of this struct.
struct Report {
  std::string command;
  int vertex_count = 0;
  int edge_count = 0;
  std::optional<MethodResult> ps_determinant;
  std::optional<MethodResult> ps_circuits;
  std::optional<MethodResult> ps_leibniz;
  std::optional<SignedCount> family_counts;
  std::optional<bool> agreement;  // all computed values coincide
  std::optional<CircuitSection> circuit_section;
  std::optional<ReduceSection> reduce_section;
  bool cap_hit = false;  // some requested route was cut short
};

Report run_compute(const Multigraph& g, Method method, const Caps& caps,
                   int factorial_limit = kDefaultFactorialLimit);
Report run_circuits(const Multigraph& g, bool with_families, const Caps& caps);
Report run_reduce(const Multigraph& g);

std::string render_text(const Report& r);
nlohmann::ordered_json render_json(const Report& r);

// 0 success/agreement, 3 cap or limit cut a route short, 4 computed values
// disagree (4 wins when both hold).
int exit_code(const Report& r);

struct FuzzParams {
  int max_vertices = 6;
  int max_edges = 10;
  std::int64_t cases = 100;
  std::uint64_t seed = 0;
  Caps caps;
  bool inject_sign_flip = false;  // self-test hook: corrupt case 0 on purpose
};

struct FuzzFailure {
  std::int64_t case_index = 0;
  std::uint64_t case_seed = 0;  // feeds random_graph directly
  std::vector<std::string> errors;
};

struct FuzzSummary {
  FuzzParams params;
  std::int64_t cases_run = 0;
  std::int64_t passed = 0;
  std::vector<FuzzFailure> failures;
};

// Case i draws random_graph(max_vertices, max_edges, seed + i) and checks:
// determinant == circuits (== Leibniz within the factorial limit),
// det(I - A) == det(I - A^T), per-class signed products (n <= 5), and that
// reduce_to_closure preserves the number and the circuit list.
FuzzSummary run_fuzz(const FuzzParams& params);

std::string render_text(const FuzzSummary& s);
nlohmann::ordered_json render_json(const FuzzSummary& s);
int exit_code(const FuzzSummary& s);

}  // namespace ps

#endif  // PS_REPORT_HPP
