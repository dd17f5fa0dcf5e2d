#include "igcount/reductions.hpp"

#include <algorithm>
#include <sstream>

#include "igcount/oracle.hpp"

namespace igcount {

VCInstance::VCInstance(int n_, std::vector<Arc> edges_)
    : n(n_), edges(std::move(edges_)) {
  if (n < 0) throw InputError("vertex cover instance: negative vertex count");
  for (auto& [u, v] : edges) {
    if (u == v) throw InputError("vertex cover instance: self-loop");
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw InputError("vertex cover instance: endpoint out of range");
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
}

bool VCInstance::is_connected() const {
  if (n == 0) return true;
  std::vector<std::vector<int>> adj(n);
  for (auto [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::vector<bool> seen(n, false);
  std::vector<int> stack{0};
  seen[0] = true;
  int reached = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : adj[v])
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
  }
  return reached == n;
}

VCInstance parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<Arc> edges;
  int max_id = -1;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    int u, v;
    if (!(ls >> u)) continue;
    if (!(ls >> v))
      throw InputError("edge list: line '" + line + "' has a dangling vertex");
    edges.emplace_back(u, v);
    max_id = std::max({max_id, u, v});
  }
  return VCInstance(max_id + 1, std::move(edges));
}

GadgetResult vc_gadget(const VCInstance& g) {
  int n = g.n;
  int m = static_cast<int>(g.edges.size());
  std::vector<std::string> warnings;
  if (n % 3 != 0)
    warnings.push_back("vertex count not divisible by 3; target cover size "
                       "rounds down");
  if (n < 6) warnings.push_back("fewer than 6 vertices");
  if (!g.is_connected()) warnings.push_back("graph is not connected");

  // Layout: original vertices, then n+2 copies of the edge set, then z.
  int copies = n + 2;
  int total = n + copies * m + 1;
  int z = total - 1;
  auto edge_vertex = [&](int copy, int e) { return n + copy * m + e; };

  std::vector<Arc> arcs;
  std::vector<Rational> labels(total, Rational(2));
  for (int v = 0; v < n; ++v) labels[v] = Rational(1);
  labels[z] = Rational(1);
  for (int j = 0; j < copies; ++j)
    for (int e = 0; e < m; ++e) {
      int ev = edge_vertex(j, e);
      arcs.emplace_back(g.edges[e].first, ev);
      arcs.emplace_back(g.edges[e].second, ev);
      arcs.emplace_back(z, ev);
    }

  VertexSet players(total);
  for (int v = 0; v < n; ++v) players.set(v);
  players.set(z);
  int k = (2 * n) / 3 + copies * m + 1;
  return GadgetResult{InfluenceGraph(total, std::move(arcs), std::move(labels)),
                      std::move(players), k, std::move(warnings)};
}

Big count_vertex_covers(const VCInstance& g, int size, int cap) {
  check_cap(g.n, cap, "vertex covers");
  if (size < 0 || size > g.n) return Big(0);
  Big total(0);
  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << g.n); ++mask) {
    if (std::popcount(mask) != size) continue;
    bool covers = true;
    for (auto [u, v] : g.edges)
      if (!(mask >> u & 1) && !(mask >> v & 1)) {
        covers = false;
        break;
      }
    if (covers) total += 1;
  }
  return total;
}

SatisfactionInstance expansion_to_satisfaction(const InfluenceGraph& g,
                                               const VertexSet& players,
                                               int k) {
  int n = g.vertex_count();
  if (players.universe() != n)
    throw InputError("expansion instance: player set universe mismatch");
  if (k < 0 || k > n) throw InputError("expansion instance: k outside [0, n]");
  std::vector<Arc> arcs = g.arcs();
  std::vector<Rational> labels = g.labels();
  labels.emplace_back(1);  // the probe z
  VertexSet bigger(n + 1);
  for (int v : players.to_vector()) bigger.set(v);
  bigger.set(n);
  return SatisfactionInstance{
      InfluenceGame(InfluenceGraph(n + 1, std::move(arcs), std::move(labels)),
                    k + 1, std::move(bigger)),
      n};
}

Big satisfaction_identity_value(const InfluenceGraph& g,
                                const VertexSet& players, int k, int cap) {
  Big trace = expansion_bruteforce(g, players, k, /*trace_level=*/true, cap);
  int n = g.vertex_count();
  return pow2(n) + pow2(n - players.count()) * trace;
}

}  // namespace igcount
