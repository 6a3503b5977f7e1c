// psgraph: Parry-Sullivan numbers of directed multigraphs, computed by
// independent methods that are required to agree.

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "ps/errors.hpp"
#include "ps/multigraph.hpp"
#include "ps/report.hpp"

namespace {

// PS_DEFAULT_CAPS overrides the built-in caps, e.g. "circuits=5000,nodes=200000".
// Malformed entries are warned about and skipped; explicit flags still win.
ps::Caps caps_from_env() {
  ps::Caps caps;
  const char* text = std::getenv("PS_DEFAULT_CAPS");
  if (!text) return caps;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    bool ok = false;
    const auto eq = item.find('=');
    if (eq != std::string::npos) {
      const std::string key = item.substr(0, eq);
      try {
        std::size_t used = 0;
        const long long value = std::stoll(item.substr(eq + 1), &used);
        if (used == item.size() - eq - 1 && value > 0) {
          if (key == "circuits") {
            caps.circuits = value;
            ok = true;
          } else if (key == "nodes") {
            caps.nodes = value;
            ok = true;
          }
        }
      } catch (const std::exception&) {
      }
    }
    if (!ok) std::cerr << "psgraph: ignoring malformed PS_DEFAULT_CAPS entry '" << item << "'\n";
  }
  return caps;
}

ps::Multigraph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ps::parse_error(0, "cannot open '" + path + "'");
  return ps::parse_graph(in);
}

template <typename Result>
int finish(const Result& result, bool json) {
  if (json)
    std::cout << ps::render_json(result).dump(2) << "\n";
  else
    std::cout << ps::render_text(result);
  return ps::exit_code(result);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Parry-Sullivan number of a directed multigraph: exact determinant, "
               "signed circuit-family count, and a permutation-expansion cross-check"};
  app.require_subcommand(1);

  const ps::Caps env_caps = caps_from_env();

  std::string input;
  std::string method = "all";
  bool json = false;
  bool families = false;
  ps::Caps caps = env_caps;
  ps::FuzzParams fuzz;
  fuzz.caps = env_caps;

  CLI::App* compute = app.add_subcommand(
      "compute", "compute the Parry-Sullivan number and cross-check the methods");
  compute->add_option("--input", input, "graph file")->required();
  compute->add_option("--method", method, "det|circuits|leibniz|all")
      ->check(CLI::IsMember({"det", "circuits", "leibniz", "all"}))
      ->capture_default_str();
  compute->add_option("--circuit-cap", caps.circuits, "max circuits to enumerate")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  compute->add_option("--node-cap", caps.nodes, "max families to visit")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  compute->add_flag("--json", json, "machine-readable output");

  CLI::App* circuits_cmd =
      app.add_subcommand("circuits", "list the circuits in canonical order");
  circuits_cmd->add_option("--input", input, "graph file")->required();
  circuits_cmd->add_flag("--families", families,
                         "also list every vertex-disjoint family, grouped by induced permutation");
  circuits_cmd->add_flag("--json", json, "machine-readable output");

  CLI::App* fuzz_cmd = app.add_subcommand(
      "fuzz", "random cross-verification of every method against every other");
  fuzz_cmd->add_option("--max-vertices", fuzz.max_vertices, "vertex bound")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  fuzz_cmd->add_option("--max-edges", fuzz.max_edges, "edge bound")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  fuzz_cmd->add_option("--cases", fuzz.cases, "number of cases")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  fuzz_cmd->add_option("--seed", fuzz.seed, "base seed; case i uses seed + i")
      ->capture_default_str();
  fuzz_cmd->add_flag("--json", json, "machine-readable output");

  CLI::App* reduce_cmd = app.add_subcommand(
      "reduce", "eliminate sources, sinks and isolated vertices until none remain");
  reduce_cmd->add_option("--input", input, "graph file")->required();
  reduce_cmd->add_flag("--json", json, "machine-readable output");

  CLI11_PARSE(app, argc, argv);

  try {
    if (compute->parsed())
      return finish(ps::run_compute(load_graph(input), ps::parse_method(method), caps), json);
    if (circuits_cmd->parsed())
      return finish(ps::run_circuits(load_graph(input), families, caps), json);
    if (reduce_cmd->parsed()) return finish(ps::run_reduce(load_graph(input)), json);
    if (fuzz_cmd->parsed()) {
      const char* flip = std::getenv("PS_FUZZ_INJECT_SIGN_FLIP");
      fuzz.inject_sign_flip = flip != nullptr && std::strcmp(flip, "") != 0 &&
                              std::strcmp(flip, "0") != 0;
      return finish(ps::run_fuzz(fuzz), json);
    }
  } catch (const ps::parse_error& e) {
    std::cerr << "psgraph: parse error: " << e.what() << "\n";
    return 2;
  } catch (const ps::resource_limit_error& e) {
    std::cerr << "psgraph: resource limit: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "psgraph: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
