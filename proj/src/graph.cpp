#include "opact/graph.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>
#include <string>

#include "opact/errors.hpp"

namespace opact {

Graph::Graph(std::size_t node_count, std::span<const Edge> edges) : adjacency_(node_count) {
  if (node_count == 0) throw ConfigError("graph must have at least one node");
  for (auto [u, v] : edges) {
    if (u >= node_count || v >= node_count)
      throw ConfigError("edge endpoint out of range: " + std::to_string(u) + " " + std::to_string(v));
    if (u == v) throw ConfigError("self-loop at node " + std::to_string(u));
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
  for (auto& list : adjacency_) {
    std::sort(list.begin(), list.end());
    if (std::adjacent_find(list.begin(), list.end()) != list.end())
      throw ConfigError("duplicate edge");
    edge_count_ += list.size();
  }
  edge_count_ /= 2;
}

bool Graph::has_edge(NodeId u, NodeId v) const {
  const auto& list = adjacency_.at(u);
  return std::binary_search(list.begin(), list.end(), v);
}

std::size_t Graph::max_degree() const noexcept {
  std::size_t best = 0;
  for (const auto& list : adjacency_) best = std::max(best, list.size());
  return best;
}

bool Graph::is_complete() const noexcept {
  const std::size_t n = node_count();
  return edge_count_ == n * (n - 1) / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (NodeId u = 0; u < adjacency_.size(); ++u)
    for (NodeId v : adjacency_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

std::size_t Graph::component_count() const {
  std::vector<NodeId> parent(node_count());
  std::iota(parent.begin(), parent.end(), NodeId{0});
  auto find = [&](NodeId x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t components = node_count();
  for (NodeId u = 0; u < adjacency_.size(); ++u) {
    for (NodeId v : adjacency_[u]) {
      auto ru = find(u), rv = find(v);
      if (ru != rv) {
        parent[ru] = rv;
        --components;
      }
    }
  }
  return components;
}

Graph complete_graph(std::size_t n) {
  if (n == 0) throw ConfigError("complete graph needs n >= 1");
  std::vector<Edge> edges;
  edges.reserve(n * (n - 1) / 2);
  for (NodeId u = 0; u < n; ++u)
    for (NodeId v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph(n, edges);
}

Graph watts_strogatz(std::size_t n, std::size_t k, double p, Rng& rng) {
  if (k < 2) throw ConfigError("k must be at least 2");
  if (k % 2 != 0) throw ConfigError("k must be even");
  if (n <= k) throw ConfigError("n must exceed k");
  if (!(p >= 0.0 && p <= 1.0)) throw ConfigError("p must lie in [0,1]");

  std::vector<std::set<NodeId>> adj(n);
  for (NodeId u = 0; u < n; ++u) {
    for (std::size_t j = 1; j <= k / 2; ++j) {
      NodeId v = static_cast<NodeId>((u + j) % n);
      adj[u].insert(v);
      adj[v].insert(u);
    }
  }
  // One pass per lattice ring distance, as in the original construction.
  for (std::size_t j = 1; j <= k / 2; ++j) {
    for (NodeId u = 0; u < n; ++u) {
      NodeId v = static_cast<NodeId>((u + j) % n);
      if (uniform01(rng) >= p) continue;
      if (!adj[u].contains(v)) continue;     // already rewired away from u
      if (adj[u].size() >= n - 1) continue;  // no valid target; keep edge
      NodeId w;
      do {
        w = static_cast<NodeId>(uniform_index(rng, n));
      } while (w == u || adj[u].contains(w));
      adj[u].erase(v);
      adj[v].erase(u);
      adj[u].insert(w);
      adj[w].insert(u);
    }
  }

  std::vector<Edge> edges;
  edges.reserve(n * k / 2);
  for (NodeId u = 0; u < n; ++u)
    for (NodeId v : adj[u])
      if (u < v) edges.emplace_back(u, v);
  return Graph(n, edges);
}

Graph barabasi_albert(std::size_t n, std::size_t m0, std::size_t m, Rng& rng) {
  if (m < 1) throw ConfigError("m must be at least 1");
  if (m0 < m) throw ConfigError("m0 must be at least m");
  if (n < m0) throw ConfigError("n must be at least m0");

  std::vector<Edge> edges;
  edges.reserve(m0 * (m0 - 1) / 2 + (n - m0) * m);
  // Each endpoint appears once per incident edge: uniform draws from this
  // list are degree-proportional.
  std::vector<NodeId> endpoints;
  for (NodeId u = 0; u < m0; ++u) {
    for (NodeId v = u + 1; v < m0; ++v) {
      edges.emplace_back(u, v);
      endpoints.push_back(u);
      endpoints.push_back(v);
    }
  }

  std::vector<NodeId> targets;
  for (NodeId fresh = static_cast<NodeId>(m0); fresh < n; ++fresh) {
    targets.clear();
    while (targets.size() < m) {
      NodeId t = endpoints.empty()
                     ? static_cast<NodeId>(uniform_index(rng, fresh))  // K_1 seed: no degrees yet
                     : endpoints[uniform_index(rng, endpoints.size())];
      if (std::find(targets.begin(), targets.end(), t) == targets.end()) targets.push_back(t);
    }
    for (NodeId t : targets) {
      edges.emplace_back(t, fresh);
      endpoints.push_back(t);
      endpoints.push_back(fresh);
    }
  }
  return Graph(n, edges);
}

void write_edge_list(const Graph& g, std::ostream& out) {
  out << g.node_count() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

namespace {

bool parse_uint(const std::string& token, std::uint64_t& value) {
  if (token.empty() || token.size() > 19) return false;
  value = 0;
  for (char c : token) {
    if (c < '0' || c > '9') return false;
    value = value * 10 + static_cast<std::uint64_t>(c - '0');
  }
  return true;
}

}  // namespace

Graph read_edge_list(std::istream& in) {
  std::string line;
  std::size_t line_no = 1;
  if (!std::getline(in, line)) throw ParseError("missing node count header", 1);
  std::uint64_t n = 0;
  {
    std::istringstream header(line);
    std::string token, extra;
    header >> token;
    if (!parse_uint(token, n) || (header >> extra)) throw ParseError("bad node count header", line_no);
    if (n == 0) throw ParseError("node count must be positive", line_no);
  }

  std::vector<Edge> edges;
  std::set<Edge> seen;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::istringstream fields(line);
    std::string a, b, extra;
    std::uint64_t u = 0, v = 0;
    fields >> a >> b;
    if (!parse_uint(a, u) || !parse_uint(b, v) || (fields >> extra))
      throw ParseError("expected \"u v\", got \"" + line + "\"", line_no);
    if (u >= n || v >= n) throw ParseError("endpoint out of range", line_no);
    if (u == v) throw ParseError("self-loop", line_no);
    Edge e{static_cast<NodeId>(std::min(u, v)), static_cast<NodeId>(std::max(u, v))};
    if (!seen.insert(e).second) throw ParseError("duplicate edge", line_no);
    edges.push_back(e);
  }
  return Graph(n, edges);
}

}  // namespace opact
