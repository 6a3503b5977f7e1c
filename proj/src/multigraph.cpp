#include "ps/multigraph.hpp"

#include <istream>
#include <limits>
#include <random>
#include <sstream>

#include "ps/errors.hpp"

namespace ps {

Multigraph::Multigraph(int vertex_count, const std::vector<std::pair<int, int>>& endpoints)
    : vertex_count_(vertex_count) {
  if (vertex_count < 0) throw domain_error("vertex count must be non-negative");
  edges_.reserve(endpoints.size());
  for (const auto& [source, target] : endpoints) {
    if (source < 0 || source >= vertex_count_ || target < 0 || target >= vertex_count_)
      throw domain_error("edge endpoint out of range");
    edges_.push_back(Edge{static_cast<int>(edges_.size()), source, target});
  }
}

const Edge& Multigraph::edge(int id) const {
  if (id < 0 || id >= edge_count()) throw domain_error("edge id out of range");
  return edges_[static_cast<std::size_t>(id)];
}

int Multigraph::out_degree(int v) const {
  int d = 0;
  for (const Edge& e : edges_) d += (e.source == v);
  return d;
}

int Multigraph::in_degree(int v) const {
  int d = 0;
  for (const Edge& e : edges_) d += (e.target == v);
  return d;
}

IntMatrix adjacency_matrix(const Multigraph& g) {
  IntMatrix a(g.vertex_count());
  for (const Edge& e : g.edges()) a.at(e.source, e.target) += 1;
  return a;
}

VertexDeletion delete_vertex(const Multigraph& g, int v) {
  const int n = g.vertex_count();
  if (v < 0 || v >= n) throw domain_error("vertex index out of range");

  VertexDeletion result;
  result.vertex_map.resize(static_cast<std::size_t>(n));
  for (int w = 0; w < n; ++w) result.vertex_map[w] = w < v ? w : (w == v ? -1 : w - 1);

  result.edge_map.assign(static_cast<std::size_t>(g.edge_count()), -1);
  std::vector<std::pair<int, int>> endpoints;
  for (const Edge& e : g.edges()) {
    if (e.source == v || e.target == v) continue;
    result.edge_map[e.id] = static_cast<int>(endpoints.size());
    endpoints.emplace_back(result.vertex_map[e.source], result.vertex_map[e.target]);
  }
  result.graph = Multigraph(n - 1, endpoints);
  return result;
}

Multigraph parse_graph(std::istream& in) {
  std::string line;
  int line_no = 0;
  long long declared = -1;
  std::vector<std::pair<int, int>> endpoints;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream ss(line);
    std::string keyword;
    if (!(ss >> keyword)) continue;        // blank line
    if (keyword.front() == '#') continue;  // comment
    if (declared < 0) {
      if (keyword != "vertices")
        throw parse_error(line_no, "expected 'vertices <n>' header, got '" + keyword + "'");
      long long n = 0;
      if (!(ss >> n) || n < 0) throw parse_error(line_no, "invalid vertex count");
      if (n > std::numeric_limits<int>::max()) throw parse_error(line_no, "vertex count too large");
      std::string extra;
      if (ss >> extra) throw parse_error(line_no, "unexpected token '" + extra + "'");
      declared = n;
    } else {
      if (keyword != "edge")
        throw parse_error(line_no, "expected 'edge <src> <dst>', got '" + keyword + "'");
      long long s = 0, t = 0;
      if (!(ss >> s >> t)) throw parse_error(line_no, "edge needs two vertex indices");
      std::string extra;
      if (ss >> extra) throw parse_error(line_no, "unexpected token '" + extra + "'");
      if (s < 0 || s >= declared || t < 0 || t >= declared)
        throw parse_error(line_no, "vertex index out of range (graph has " +
                                       std::to_string(declared) + " vertices)");
      endpoints.emplace_back(static_cast<int>(s), static_cast<int>(t));
    }
  }
  if (declared < 0) throw parse_error(line_no, "missing 'vertices <n>' header");
  return Multigraph(static_cast<int>(declared), endpoints);
}

Multigraph parse_graph(const std::string& text) {
  std::istringstream in(text);
  return parse_graph(in);
}

std::string serialize_graph(const Multigraph& g) {
  std::ostringstream out;
  out << "vertices " << g.vertex_count() << "\n";
  for (const Edge& e : g.edges()) out << "edge " << e.source << " " << e.target << "\n";
  return out.str();
}

namespace {

// Uniform in [0, bound), bound >= 1. Rejection keeps it exactly uniform and
// the result identical on every platform, which std distributions are not.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t threshold = (0 - bound) % bound;  // 2^64 mod bound
  for (;;) {
    const std::uint64_t x = rng();
    if (x >= threshold) return x % bound;
  }
}

}  // namespace

Multigraph random_graph(int max_vertices, int max_edges, std::uint64_t seed) {
  if (max_vertices < 0 || max_edges < 0) throw domain_error("bounds must be non-negative");
  std::mt19937_64 rng(seed);
  const int n = static_cast<int>(bounded(rng, static_cast<std::uint64_t>(max_vertices) + 1));
  std::vector<std::pair<int, int>> endpoints;
  if (n > 0) {
    const int m = static_cast<int>(bounded(rng, static_cast<std::uint64_t>(max_edges) + 1));
    endpoints.reserve(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
      const int s = static_cast<int>(bounded(rng, static_cast<std::uint64_t>(n)));
      const int t = static_cast<int>(bounded(rng, static_cast<std::uint64_t>(n)));
      endpoints.emplace_back(s, t);
    }
  }
  return Multigraph(n, endpoints);
}

}  // namespace ps
