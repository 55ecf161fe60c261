#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace starcol {

// Bad user input (malformed JSON, out-of-range vertex, impossible request).
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A size cap was exceeded; exact computation refused rather than degraded.
struct CapError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using Edge = std::pair<int, int>;

inline Edge mk_edge(int u, int v) {
  if (u == v) throw InputError("loop edge " + std::to_string(u));
  return u < v ? Edge{u, v} : Edge{v, u};
}

// Edges of K_n are indexed in colex order: (0,1),(0,2),(1,2),(0,3),...
// so the first C(m,2) ids are exactly the edges inside {0..m-1}.
inline int edge_id(int u, int v) {
  if (u > v) std::swap(u, v);
  return v * (v - 1) / 2 + u;
}

inline int num_edges(int n) { return n * (n - 1) / 2; }

// Undirected simple graph on vertices 0..n-1, adjacency kept as bitmask rows.
struct SimpleGraph {
  int n = 0;
  std::vector<uint32_t> adj;

  SimpleGraph() = default;
  explicit SimpleGraph(int n_) : n(n_), adj(n_, 0) {
    if (n_ < 0 || n_ > 31) throw InputError("graph order out of range");
  }

  bool has_edge(int u, int v) const { return (adj[u] >> v) & 1u; }

  void add_edge(int u, int v) {
    Edge e = mk_edge(u, v);
    if (e.second >= n) throw InputError("edge endpoint out of range");
    adj[e.first] |= 1u << e.second;
    adj[e.second] |= 1u << e.first;
  }

  void remove_edge(int u, int v) {
    adj[u] &= ~(1u << v);
    adj[v] &= ~(1u << u);
  }

  int degree(int v) const { return __builtin_popcount(adj[v]); }

  int edge_count() const {
    int s = 0;
    for (int v = 0; v < n; ++v) s += degree(v);
    return s / 2;
  }

  std::vector<Edge> edges() const {
    std::vector<Edge> es;
    for (int v = 0; v < n; ++v)
      for (int u = 0; u < v; ++u)
        if (has_edge(u, v)) es.push_back({u, v});
    return es;
  }

  bool operator==(const SimpleGraph& o) const { return n == o.n && adj == o.adj; }
};

bool is_forest(const SimpleGraph& g);
bool is_connected(const SimpleGraph& g);
bool has_odd_cycle(const SimpleGraph& g);

// Exhaustive subgraph containment (not induced). anchor, if given, is a host
// edge every reported copy must use.
bool subgraph_contains(const SimpleGraph& host, const SimpleGraph& pattern,
                       std::optional<Edge> anchor = std::nullopt);

// va: fewest parts in a vertex partition with every part inducing a forest.
// ea: fewest parts in an edge partition into forests.
// chi: chromatic number. girth: empty for forests.
struct GraphInvariants {
  int va = 0;
  int ea = 0;
  int chi = 0;
  std::optional<int> girth;
};

GraphInvariants graph_invariants(const SimpleGraph& g, int cap = 12);

// Pattern zoo ------------------------------------------------------------

SimpleGraph cycle_graph(int k);                 // C_k, k >= 3
SimpleGraph complete_graph(int k);              // K_k
SimpleGraph complete_minus(int k);              // K_k minus one edge, k >= 3
SimpleGraph complete_bipartite(int s, int t);   // K_{s,t}
SimpleGraph complete_bipartite_minus(int s, int t);
SimpleGraph path_graph(int t);                  // path with t edges
SimpleGraph star_graph(int k);                  // K_{1,k}
SimpleGraph matching_graph(int m);              // m disjoint edges
SimpleGraph turan_graph(int l, int n);          // complete l-partite, balanced
SimpleGraph cube_graph();                       // 3-cube
SimpleGraph join_graphs(const SimpleGraph& a, const SimpleGraph& b);

// Accepts C4, K4, K4-, K2,3, K2,3-, P3, M2, star3, K1,3, Q3, turan:2:5,
// join:P1:P2. Throws InputError on anything else.
SimpleGraph parse_pattern(const std::string& name);

SimpleGraph induced_subgraph(const SimpleGraph& g, const std::vector<int>& keep);

// All single-vertex deletions of h, deduplicated up to isomorphism when the
// order is within the exact-canonical cap.
std::vector<SimpleGraph> vertex_deleted_family(const SimpleGraph& h);

// Isomorphism-invariant exact key for small graphs (minimum adjacency
// bitstring over all relabellings). Throws CapError above the cap.
std::string graph_canonical_string(const SimpleGraph& g, int cap = 8);

}  // namespace starcol
