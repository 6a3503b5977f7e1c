#include "ps/report.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <sstream>
#include <utility>

#include "ps/errors.hpp"

namespace ps {

namespace {

// JSON numbers carry exact integers only up to 64 bits; anything wider goes
// out as a decimal string.
nlohmann::ordered_json json_int(const Int& v) {
  static const Int lo = std::numeric_limits<std::int64_t>::min();
  static const Int hi = std::numeric_limits<std::int64_t>::max();
  if (v >= lo && v <= hi) return v.convert_to<std::int64_t>();
  return v.str();
}

nlohmann::ordered_json method_json(const MethodResult& r) {
  if (r.value) return json_int(*r.value);
  return "skipped(" + r.skipped + ")";
}

std::string method_text(const MethodResult& r) {
  if (r.value) return r.value->str();
  return "skipped(" + r.skipped + ")";
}

std::string family_text(const Multigraph& g, const std::vector<Circuit>& circuits,
                        const VertexDisjointFamily& family) {
  std::string out = "{";
  for (std::size_t i = 0; i < family.circuit_indices.size(); ++i) {
    if (i) out += ", ";
    out += to_string(g, circuits[static_cast<std::size_t>(family.circuit_indices[i])]);
  }
  out += "}";
  return out;
}

}  // namespace

Method parse_method(const std::string& name) {
  if (name == "det") return Method::determinant;
  if (name == "circuits") return Method::circuits;
  if (name == "leibniz") return Method::leibniz;
  if (name == "all") return Method::all;
  throw domain_error("unknown method '" + name + "'");
}

Report run_compute(const Multigraph& g, Method method, const Caps& caps, int factorial_limit) {
  Report r;
  r.command = "compute";
  r.vertex_count = g.vertex_count();
  r.edge_count = g.edge_count();

  const bool want_det = method == Method::determinant || method == Method::all;
  const bool want_circuits = method == Method::circuits || method == Method::all;
  const bool want_leibniz = method == Method::leibniz || method == Method::all;

  if (want_det) r.ps_determinant = MethodResult{ps_via_determinant(g), ""};

  if (want_circuits) {
    try {
      const auto circuits = enumerate_circuits(g, caps.circuits);
      const SignedCount counts = signed_family_count(g, circuits, caps.nodes);
      r.ps_circuits = MethodResult{counts.value(), ""};
      r.family_counts = counts;
    } catch (const resource_limit_error&) {
      r.ps_circuits = MethodResult{std::nullopt, "cap"};
      r.cap_hit = true;
    }
  }

  if (want_leibniz) {
    if (g.vertex_count() <= factorial_limit) {
      r.ps_leibniz =
          MethodResult{leibniz_determinant(identity_minus(adjacency_matrix(g)), factorial_limit), ""};
    } else {
      // under --method all the expansion is only a cross-check, so skipping
      // it is not an error; asking for it explicitly is
      r.ps_leibniz = MethodResult{std::nullopt, "limit"};
      if (method == Method::leibniz) r.cap_hit = true;
    }
  }

  std::vector<const Int*> values;
  for (const auto* mr : {&r.ps_determinant, &r.ps_circuits, &r.ps_leibniz})
    if (*mr && (*mr)->value) values.push_back(&*(*mr)->value);
  bool agree = true;
  for (const Int* v : values) agree = agree && *v == *values.front();
  r.agreement = agree;
  return r;
}

Report run_circuits(const Multigraph& g, bool with_families, const Caps& caps) {
  Report r;
  r.command = "circuits";
  r.vertex_count = g.vertex_count();
  r.edge_count = g.edge_count();

  const auto circuits = enumerate_circuits(g, caps.circuits);
  CircuitSection section;
  section.circuits.reserve(circuits.size());
  for (const Circuit& c : circuits) section.circuits.push_back(to_string(g, c));

  if (with_families) {
    const auto families = materialize_families(g, circuits, caps.nodes);
    std::map<Permutation, std::vector<const VertexDisjointFamily*>> by_class;
    for (const auto& family : families) by_class[family.induced].push_back(&family);

    FamilySection fams;
    for (const auto& [rho, members] : by_class) {
      ClassEntry entry;
      entry.permutation = to_string(rho);
      for (const VertexDisjointFamily* family : members) {
        const bool even = family->circuit_indices.size() % 2 == 0;
        if (even)
          ++entry.count.even;
        else
          ++entry.count.odd;
        entry.families.push_back(
            FamilyEntry{family_text(g, circuits, *family), even ? "even" : "odd"});
      }
      fams.counts.even += entry.count.even;
      fams.counts.odd += entry.count.odd;
      fams.classes.push_back(std::move(entry));
    }
    fams.total = fams.counts.even + fams.counts.odd;
    section.families = std::move(fams);
  }

  r.circuit_section = std::move(section);
  return r;
}

Report run_reduce(const Multigraph& g) {
  Report r;
  r.command = "reduce";
  r.vertex_count = g.vertex_count();
  r.edge_count = g.edge_count();

  ReductionTrace trace = reduce_to_closure(g);
  ReduceSection section;
  section.steps = trace.steps;
  section.final_graph = serialize_graph(trace.final);
  section.ps_before = ps_via_determinant(g);
  section.ps_after = ps_via_determinant(trace.final);
  section.preserved = section.ps_before == section.ps_after;
  r.reduce_section = std::move(section);
  return r;
}

std::string render_text(const Report& r) {
  std::ostringstream out;
  out << "graph: " << r.vertex_count << " vertices, " << r.edge_count << " edges\n";
  if (r.ps_determinant) out << "ps (determinant): " << method_text(*r.ps_determinant) << "\n";
  if (r.ps_circuits) out << "ps (circuits): " << method_text(*r.ps_circuits) << "\n";
  if (r.family_counts)
    out << "families: " << r.family_counts->even << " even, " << r.family_counts->odd
        << " odd\n";
  if (r.ps_leibniz) out << "ps (leibniz): " << method_text(*r.ps_leibniz) << "\n";
  if (r.agreement) out << "agreement: " << (*r.agreement ? "yes" : "no") << "\n";

  if (r.circuit_section) {
    const auto& section = *r.circuit_section;
    out << "circuits (" << section.circuits.size() << "):\n";
    for (std::size_t i = 0; i < section.circuits.size(); ++i)
      out << "  [" << i << "] " << section.circuits[i] << "\n";
    if (section.families) {
      const auto& fams = *section.families;
      out << "families (" << fams.total << " total: " << fams.counts.even << " even, "
          << fams.counts.odd << " odd):\n";
      for (const ClassEntry& entry : fams.classes) {
        out << "  class " << entry.permutation << " (even " << entry.count.even << ", odd "
            << entry.count.odd << ", value " << entry.count.value() << "):\n";
        for (const FamilyEntry& family : entry.families)
          out << "    " << family.parity << (family.parity == "odd" ? "  " : " ")
              << family.text << "\n";
      }
    }
  }

  if (r.reduce_section) {
    const auto& section = *r.reduce_section;
    out << "trace (" << section.steps.size() << " steps):\n";
    for (const ReductionStep& step : section.steps)
      out << "  eliminate vertex " << step.original_vertex << " (" << to_string(step.kind)
          << ")\n";
    out << "final graph:\n" << section.final_graph;
    out << "ps before: " << section.ps_before << "\n";
    out << "ps after: " << section.ps_after << "\n";
    out << "preserved: " << (section.preserved ? "yes" : "no") << "\n";
  }
  return out.str();
}

nlohmann::ordered_json render_json(const Report& r) {
  nlohmann::ordered_json j;
  j["command"] = r.command;
  j["graph"] = {{"vertices", r.vertex_count}, {"edges", r.edge_count}};
  if (r.ps_determinant) j["ps_determinant"] = method_json(*r.ps_determinant);
  if (r.ps_circuits) j["ps_circuits"] = method_json(*r.ps_circuits);
  if (r.ps_leibniz) j["ps_leibniz"] = method_json(*r.ps_leibniz);
  if (r.family_counts) {
    j["even_families"] = json_int(r.family_counts->even);
    j["odd_families"] = json_int(r.family_counts->odd);
  }
  if (r.agreement) j["agreement"] = *r.agreement;

  if (r.circuit_section) {
    const auto& section = *r.circuit_section;
    j["circuit_count"] = section.circuits.size();
    j["circuits"] = section.circuits;
    if (section.families) {
      const auto& fams = *section.families;
      nlohmann::ordered_json jf;
      jf["total"] = json_int(fams.total);
      jf["even"] = json_int(fams.counts.even);
      jf["odd"] = json_int(fams.counts.odd);
      jf["classes"] = nlohmann::ordered_json::array();
      for (const ClassEntry& entry : fams.classes) {
        nlohmann::ordered_json jc;
        jc["permutation"] = entry.permutation;
        jc["even"] = json_int(entry.count.even);
        jc["odd"] = json_int(entry.count.odd);
        jc["value"] = json_int(entry.count.value());
        jc["families"] = nlohmann::ordered_json::array();
        for (const FamilyEntry& family : entry.families)
          jc["families"].push_back({{"family", family.text}, {"parity", family.parity}});
        jf["classes"].push_back(std::move(jc));
      }
      j["families"] = std::move(jf);
    }
  }

  if (r.reduce_section) {
    const auto& section = *r.reduce_section;
    j["trace"] = nlohmann::ordered_json::array();
    for (const ReductionStep& step : section.steps)
      j["trace"].push_back({{"vertex", step.original_vertex}, {"kind", to_string(step.kind)}});
    j["final_graph"] = section.final_graph;
    j["ps_before"] = json_int(section.ps_before);
    j["ps_after"] = json_int(section.ps_after);
    j["preserved"] = section.preserved;
  }
  return j;
}

int exit_code(const Report& r) {
  if (r.agreement && !*r.agreement) return 4;
  if (r.reduce_section && !r.reduce_section->preserved) return 4;
  if (r.cap_hit) return 3;
  return 0;
}

namespace {

std::vector<std::string> check_fuzz_case(const Multigraph& g, const FuzzParams& params,
                                         bool inject) {
  std::vector<std::string> errors;
  const Int det = ps_via_determinant(g);

  std::optional<Int> circ;
  try {
    circ = ps_via_circuits(g, params.caps.circuits, params.caps.nodes);
  } catch (const resource_limit_error& e) {
    errors.push_back(std::string("resource limit: ") + e.what());
  }
  if (circ) {
    const Int reported = inject ? Int(*circ + 1) : *circ;
    if (reported != det)
      errors.push_back("ps mismatch: determinant " + det.str() + " vs circuits " +
                       reported.str());
  }

  if (g.vertex_count() <= kDefaultFactorialLimit) {
    const Int leib = leibniz_determinant(identity_minus(adjacency_matrix(g)));
    if (leib != det)
      errors.push_back("ps mismatch: determinant " + det.str() + " vs leibniz " + leib.str());
  }

  const Int det_t = determinant(identity_minus(transpose(adjacency_matrix(g))));
  if (det_t != det)
    errors.push_back("transpose mismatch: det(I-A) " + det.str() + " vs det(I-A^T) " +
                     det_t.str());

  if (g.vertex_count() <= 5) {
    try {
      for (const auto& row :
           verify_class_products(g, kDefaultFactorialLimit, params.caps.circuits, params.caps.nodes))
        if (!row.equal)
          errors.push_back("class " + to_string(row.rho) + ": signed count " +
                           row.class_value.str() + " vs elementary product " +
                           row.elementary_product.str());
    } catch (const resource_limit_error& e) {
      errors.push_back(std::string("resource limit: ") + e.what());
    }
  }

  try {
    const ReductionTrace trace = reduce_to_closure(g);
    if (ps_via_determinant(trace.final) != det)
      errors.push_back("reduction changed ps (determinant route)");
    if (circ && ps_via_circuits(trace.final, params.caps.circuits, params.caps.nodes) != *circ)
      errors.push_back("reduction changed ps (circuits route)");

    const auto before = enumerate_circuits(g, params.caps.circuits);
    const auto after = enumerate_circuits(trace.final, params.caps.circuits);
    std::set<std::vector<int>> mapped;
    bool mappable = true;
    for (const Circuit& c : before) {
      std::vector<int> ids;
      ids.reserve(c.edge_ids.size());
      for (int eid : c.edge_ids) {
        const int to = trace.edge_map[static_cast<std::size_t>(eid)];
        if (to < 0) {
          mappable = false;
          break;
        }
        ids.push_back(to);
      }
      if (!mappable) break;
      std::sort(ids.begin(), ids.end());
      mapped.insert(std::move(ids));
    }
    std::set<std::vector<int>> final_sets;
    for (const Circuit& c : after) final_sets.insert(c.edge_ids);
    if (!mappable)
      errors.push_back("reduction deleted a circuit edge");
    else if (mapped != final_sets)
      errors.push_back("reduction changed the circuit list");

    if (!reduce_to_closure(trace.final).steps.empty())
      errors.push_back("reduction is not idempotent");
  } catch (const resource_limit_error& e) {
    errors.push_back(std::string("resource limit: ") + e.what());
  }

  return errors;
}

}  // namespace

FuzzSummary run_fuzz(const FuzzParams& params) {
  if (params.max_vertices < 0 || params.max_edges < 0 || params.cases < 0)
    throw domain_error("fuzz parameters must be non-negative");
  FuzzSummary summary;
  summary.params = params;
  for (std::int64_t i = 0; i < params.cases; ++i) {
    const std::uint64_t case_seed = params.seed + static_cast<std::uint64_t>(i);
    const Multigraph g = random_graph(params.max_vertices, params.max_edges, case_seed);
    auto errors = check_fuzz_case(g, params, params.inject_sign_flip && i == 0);
    ++summary.cases_run;
    if (errors.empty())
      ++summary.passed;
    else
      summary.failures.push_back(FuzzFailure{i, case_seed, std::move(errors)});
  }
  return summary;
}

std::string render_text(const FuzzSummary& s) {
  std::ostringstream out;
  out << "fuzz: max_vertices=" << s.params.max_vertices << " max_edges=" << s.params.max_edges
      << " cases=" << s.params.cases << " seed=" << s.params.seed << "\n";
  for (const FuzzFailure& failure : s.failures) {
    out << "case " << failure.case_index << " (seed " << failure.case_seed << "):\n";
    for (const std::string& error : failure.errors) out << "  - " << error << "\n";
  }
  out << "passed " << s.passed << "/" << s.cases_run << "\n";
  return out.str();
}

nlohmann::ordered_json render_json(const FuzzSummary& s) {
  nlohmann::ordered_json j;
  j["command"] = "fuzz";
  j["max_vertices"] = s.params.max_vertices;
  j["max_edges"] = s.params.max_edges;
  j["cases"] = s.params.cases;
  j["seed"] = s.params.seed;
  j["cases_run"] = s.cases_run;
  j["passed"] = s.passed;
  j["failures"] = nlohmann::ordered_json::array();
  for (const FuzzFailure& failure : s.failures)
    j["failures"].push_back({{"case", failure.case_index},
                             {"seed", failure.case_seed},
                             {"errors", failure.errors}});
  return j;
}

int exit_code(const FuzzSummary& s) {
  if (s.failures.empty()) return 0;
  for (const FuzzFailure& failure : s.failures)
    for (const std::string& error : failure.errors)
      if (error.rfind("resource limit:", 0) != 0) return 4;
  return 3;
}

}  // namespace ps
