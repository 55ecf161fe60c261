#include "starcol/graph.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <queue>

namespace starcol {

bool is_forest(const SimpleGraph& g) {
  // union-find; a repeated root means a cycle
  std::vector<int> parent(g.n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (auto [u, v] : g.edges()) {
    int a = find(u), b = find(v);
    if (a == b) return false;
    parent[a] = b;
  }
  return true;
}

bool is_connected(const SimpleGraph& g) {
  if (g.n <= 1) return true;
  uint32_t seen = 1;
  uint32_t frontier = 1;
  while (frontier) {
    uint32_t next = 0;
    for (int v = 0; v < g.n; ++v)
      if ((frontier >> v) & 1u) next |= g.adj[v];
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == (g.n == 31 ? 0x7fffffffu : ((1u << g.n) - 1));
}

bool has_odd_cycle(const SimpleGraph& g) {
  std::vector<int> side(g.n, -1);
  for (int r = 0; r < g.n; ++r) {
    if (side[r] != -1) continue;
    side[r] = 0;
    std::queue<int> q;
    q.push(r);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int v = 0; v < g.n; ++v) {
        if (!g.has_edge(u, v)) continue;
        if (side[v] == -1) {
          side[v] = side[u] ^ 1;
          q.push(v);
        } else if (side[v] == side[u]) {
          return true;
        }
      }
    }
  }
  return false;
}

namespace {

// greedy placement order: highest degree first, then most already-placed
// neighbours, so constraints bind early
std::vector<int> extension_order(const SimpleGraph& p, const std::vector<int>& seed) {
  std::vector<int> order = seed;
  std::vector<bool> placed(p.n, false);
  for (int v : seed) placed[v] = true;
  while (static_cast<int>(order.size()) < p.n) {
    int best = -1, best_links = -1, best_deg = -1;
    for (int v = 0; v < p.n; ++v) {
      if (placed[v]) continue;
      int links = 0;
      for (int u : order)
        if (p.has_edge(u, v)) ++links;
      int deg = p.degree(v);
      if (links > best_links || (links == best_links && deg > best_deg)) {
        best = v;
        best_links = links;
        best_deg = deg;
      }
    }
    placed[best] = true;
    order.push_back(best);
  }
  return order;
}

bool extend_map(const SimpleGraph& host, const SimpleGraph& p,
                const std::vector<int>& order, size_t pos, std::vector<int>& img,
                uint32_t& used) {
  if (pos == order.size()) return true;
  int pv = order[pos];
  for (int hv = 0; hv < host.n; ++hv) {
    if ((used >> hv) & 1u) continue;
    if (host.degree(hv) < p.degree(pv)) continue;
    bool ok = true;
    for (size_t i = 0; i < pos && ok; ++i) {
      int pu = order[i];
      if (p.has_edge(pu, pv) && !host.has_edge(img[pu], hv)) ok = false;
    }
    if (!ok) continue;
    img[pv] = hv;
    used |= 1u << hv;
    if (extend_map(host, p, order, pos + 1, img, used)) return true;
    used &= ~(1u << hv);
    img[pv] = -1;
  }
  return false;
}

}  // namespace

bool subgraph_contains(const SimpleGraph& host, const SimpleGraph& pattern,
                       std::optional<Edge> anchor) {
  if (pattern.n > host.n) return false;
  if (!anchor) {
    if (pattern.edge_count() == 0) return true;
    // root the order at an edge endpoint
    int r = 0;
    for (int v = 1; v < pattern.n; ++v)
      if (pattern.degree(v) > pattern.degree(r)) r = v;
    auto order = extension_order(pattern, {r});
    std::vector<int> img(pattern.n, -1);
    uint32_t used = 0;
    return extend_map(host, pattern, order, 0, img, used);
  }
  // copy must cover the anchor host edge with some pattern edge
  auto [a, b] = *anchor;
  for (auto [pu, pv] : pattern.edges()) {
    for (int flip = 0; flip < 2; ++flip) {
      int ia = flip ? b : a, ib = flip ? a : b;
      if (host.degree(ia) < pattern.degree(pu)) continue;
      if (host.degree(ib) < pattern.degree(pv)) continue;
      auto order = extension_order(pattern, {pu, pv});
      std::vector<int> img(pattern.n, -1);
      img[pu] = ia;
      img[pv] = ib;
      uint32_t used = (1u << ia) | (1u << ib);
      if (extend_map(host, pattern, order, 2, img, used)) return true;
    }
  }
  return false;
}

namespace {

bool part_is_forest(const SimpleGraph& g, uint32_t part) {
  std::array<int, 32> parent;
  for (int v = 0; v < g.n; ++v) parent[v] = v;
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int v = 0; v < g.n; ++v) {
    if (!((part >> v) & 1u)) continue;
    uint32_t nb = g.adj[v] & part;
    for (int u = 0; u < v; ++u) {
      if (!((nb >> u) & 1u)) continue;
      int x = find(u), y = find(v);
      if (x == y) return false;
      parent[x] = y;
    }
  }
  return true;
}

bool va_dfs(const SimpleGraph& g, int k, int v, std::vector<uint32_t>& parts) {
  if (v == g.n) return true;
  int used = 0;
  while (used < k && parts[used]) ++used;
  int limit = std::min(k, used + 1);  // first unused part is canonical
  for (int p = 0; p < limit; ++p) {
    parts[p] |= 1u << v;
    if (part_is_forest(g, parts[p]) && va_dfs(g, k, v + 1, parts)) return true;
    parts[p] &= ~(1u << v);
  }
  return false;
}

bool ea_dfs(const SimpleGraph& g, const std::vector<Edge>& es, int k, size_t i,
            std::vector<SimpleGraph>& parts, int used) {
  if (i == es.size()) return true;
  auto [u, v] = es[i];
  int limit = std::min(k, used + 1);
  for (int p = 0; p < limit; ++p) {
    parts[p].add_edge(u, v);
    if (is_forest(parts[p]) &&
        ea_dfs(g, es, k, i + 1, parts, std::max(used, p + 1)))
      return true;
    parts[p].remove_edge(u, v);
  }
  return false;
}

int ea_lower_bound(const SimpleGraph& g) {
  // max over vertex subsets of ceil(e/(v-1)); exact arboricity bound
  int best = g.edge_count() > 0 ? 1 : 0;
  for (uint32_t s = 0; s < (1u << g.n); ++s) {
    int nv = __builtin_popcount(s);
    if (nv < 2) continue;
    int ne = 0;
    for (int v = 0; v < g.n; ++v)
      if ((s >> v) & 1u) ne += __builtin_popcount(g.adj[v] & s & ((1u << v) - 1));
    best = std::max(best, (ne + nv - 2) / (nv - 1));
  }
  return best;
}

bool chi_dfs(const SimpleGraph& g, const std::vector<int>& order, int k, size_t i,
             std::vector<uint32_t>& colour_mask, int used) {
  if (i == order.size()) return true;
  int v = order[i];
  int limit = std::min(k, used + 1);
  for (int c = 0; c < limit; ++c) {
    if (colour_mask[c] & g.adj[v]) continue;
    colour_mask[c] |= 1u << v;
    if (chi_dfs(g, order, k, i + 1, colour_mask, std::max(used, c + 1))) return true;
    colour_mask[c] &= ~(1u << v);
  }
  return false;
}

std::optional<int> girth_of(const SimpleGraph& g) {
  int best = INT32_MAX;
  for (int r = 0; r < g.n; ++r) {
    std::vector<int> dist(g.n, -1), par(g.n, -1);
    dist[r] = 0;
    std::queue<int> q;
    q.push(r);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int v = 0; v < g.n; ++v) {
        if (!g.has_edge(u, v)) continue;
        if (dist[v] == -1) {
          dist[v] = dist[u] + 1;
          par[v] = u;
          q.push(v);
        } else if (v != par[u] && par[v] != u) {
          best = std::min(best, dist[u] + dist[v] + 1);
        }
      }
    }
  }
  if (best == INT32_MAX) return std::nullopt;
  return best;
}

}  // namespace

GraphInvariants graph_invariants(const SimpleGraph& g, int cap) {
  if (g.n > cap) throw CapError("graph_invariants: order exceeds cap");
  GraphInvariants inv;
  inv.girth = girth_of(g);

  if (g.n == 0) {
    inv.va = inv.ea = inv.chi = 0;
    return inv;
  }

  for (int k = 1;; ++k) {
    std::vector<uint32_t> parts(k, 0);
    if (va_dfs(g, k, 0, parts)) {
      inv.va = k;
      break;
    }
  }

  auto es = g.edges();
  if (es.empty()) {
    inv.ea = 0;
  } else {
    for (int k = ea_lower_bound(g);; ++k) {
      std::vector<SimpleGraph> parts(k, SimpleGraph(g.n));
      if (ea_dfs(g, es, k, 0, parts, 0)) {
        inv.ea = k;
        break;
      }
    }
  }

  std::vector<int> order(g.n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return g.degree(a) > g.degree(b); });
  for (int k = 1;; ++k) {
    std::vector<uint32_t> mask(k, 0);
    if (chi_dfs(g, order, k, 0, mask, 0)) {
      inv.chi = k;
      break;
    }
  }
  return inv;
}

// Pattern zoo ------------------------------------------------------------

SimpleGraph cycle_graph(int k) {
  if (k < 3) throw InputError("cycle needs length >= 3");
  SimpleGraph g(k);
  for (int i = 0; i < k; ++i) g.add_edge(i, (i + 1) % k);
  return g;
}

SimpleGraph complete_graph(int k) {
  if (k < 1) throw InputError("complete graph needs order >= 1");
  SimpleGraph g(k);
  for (int v = 1; v < k; ++v)
    for (int u = 0; u < v; ++u) g.add_edge(u, v);
  return g;
}

SimpleGraph complete_minus(int k) {
  if (k < 3) throw InputError("K_k minus an edge needs k >= 3");
  SimpleGraph g = complete_graph(k);
  g.remove_edge(0, 1);
  return g;
}

SimpleGraph complete_bipartite(int s, int t) {
  if (s < 1 || t < 1) throw InputError("bipartite sides must be positive");
  SimpleGraph g(s + t);
  for (int a = 0; a < s; ++a)
    for (int b = 0; b < t; ++b) g.add_edge(a, s + b);
  return g;
}

SimpleGraph complete_bipartite_minus(int s, int t) {
  SimpleGraph g = complete_bipartite(s, t);
  g.remove_edge(0, s);
  return g;
}

SimpleGraph path_graph(int t) {
  if (t < 1) throw InputError("path needs at least one edge");
  SimpleGraph g(t + 1);
  for (int i = 0; i < t; ++i) g.add_edge(i, i + 1);
  return g;
}

SimpleGraph star_graph(int k) {
  if (k < 1) throw InputError("star needs at least one leaf");
  SimpleGraph g(k + 1);
  for (int i = 1; i <= k; ++i) g.add_edge(0, i);
  return g;
}

SimpleGraph matching_graph(int m) {
  if (m < 1) throw InputError("matching needs at least one edge");
  SimpleGraph g(2 * m);
  for (int i = 0; i < m; ++i) g.add_edge(2 * i, 2 * i + 1);
  return g;
}

SimpleGraph turan_graph(int l, int n) {
  if (l < 1 || n < l) throw InputError("Turan graph needs 1 <= l <= n");
  SimpleGraph g(n);
  std::vector<int> part(n);
  int q = n / l, r = n % l, v = 0;
  for (int p = 0; p < l; ++p)
    for (int i = 0; i < q + (p < r ? 1 : 0); ++i) part[v++] = p;
  for (int b = 1; b < n; ++b)
    for (int a = 0; a < b; ++a)
      if (part[a] != part[b]) g.add_edge(a, b);
  return g;
}

SimpleGraph cube_graph() {
  SimpleGraph g(8);
  for (int b = 1; b < 8; ++b)
    for (int a = 0; a < b; ++a)
      if (__builtin_popcount(a ^ b) == 1) g.add_edge(a, b);
  return g;
}

SimpleGraph join_graphs(const SimpleGraph& a, const SimpleGraph& b) {
  SimpleGraph g(a.n + b.n);
  for (auto [u, v] : a.edges()) g.add_edge(u, v);
  for (auto [u, v] : b.edges()) g.add_edge(a.n + u, a.n + v);
  for (int u = 0; u < a.n; ++u)
    for (int v = 0; v < b.n; ++v) g.add_edge(u, a.n + v);
  return g;
}

namespace {

int parse_int(const std::string& s, size_t from, size_t to) {
  if (from >= to) throw InputError("pattern: missing number");
  int v = 0;
  for (size_t i = from; i < to; ++i) {
    if (!isdigit(static_cast<unsigned char>(s[i])))
      throw InputError("pattern: bad number in '" + s + "'");
    v = v * 10 + (s[i] - '0');
  }
  return v;
}

}  // namespace

SimpleGraph parse_pattern(const std::string& name) {
  if (name.empty()) throw InputError("empty pattern name");
  if (name.rfind("turan:", 0) == 0) {
    auto sep = name.find(':', 6);
    if (sep == std::string::npos) throw InputError("pattern: turan:<l>:<n>");
    return turan_graph(parse_int(name, 6, sep),
                       parse_int(name, sep + 1, name.size()));
  }
  if (name.rfind("join:", 0) == 0) {
    auto sep = name.find(':', 5);
    if (sep == std::string::npos) throw InputError("pattern: join:<a>:<b>");
    return join_graphs(parse_pattern(name.substr(5, sep - 5)),
                       parse_pattern(name.substr(sep + 1)));
  }
  if (name.rfind("star", 0) == 0) return star_graph(parse_int(name, 4, name.size()));
  if (name == "Q3") return cube_graph();

  bool minus = name.back() == '-';
  std::string body = minus ? name.substr(0, name.size() - 1) : name;
  if (body.empty()) throw InputError("bad pattern '" + name + "'");
  char kind = body[0];
  auto comma = body.find(',');
  if (kind == 'K' && comma != std::string::npos) {
    int s = parse_int(body, 1, comma);
    int t = parse_int(body, comma + 1, body.size());
    return minus ? complete_bipartite_minus(s, t) : complete_bipartite(s, t);
  }
  int num = parse_int(body, 1, body.size());
  switch (kind) {
    case 'C':
      if (minus) break;
      return cycle_graph(num);
    case 'K':
      return minus ? complete_minus(num) : complete_graph(num);
    case 'P':
      if (minus) break;
      return path_graph(num);
    case 'M':
      if (minus) break;
      return matching_graph(num);
    default:
      break;
  }
  throw InputError("unknown pattern '" + name + "'");
}

SimpleGraph induced_subgraph(const SimpleGraph& g, const std::vector<int>& keep) {
  SimpleGraph h(static_cast<int>(keep.size()));
  for (size_t b = 0; b < keep.size(); ++b)
    for (size_t a = 0; a < b; ++a)
      if (g.has_edge(keep[a], keep[b])) h.add_edge(static_cast<int>(a), static_cast<int>(b));
  return h;
}

std::vector<SimpleGraph> vertex_deleted_family(const SimpleGraph& h) {
  std::vector<SimpleGraph> fam;
  std::vector<std::string> keys;
  for (int v = 0; v < h.n; ++v) {
    std::vector<int> keep;
    for (int u = 0; u < h.n; ++u)
      if (u != v) keep.push_back(u);
    SimpleGraph g = induced_subgraph(h, keep);
    if (g.n <= 8) {
      std::string key = graph_canonical_string(g);
      if (std::find(keys.begin(), keys.end(), key) != keys.end()) continue;
      keys.push_back(key);
    }
    fam.push_back(g);
  }
  return fam;
}

std::string graph_canonical_string(const SimpleGraph& g, int cap) {
  if (g.n > cap) throw CapError("graph_canonical_string: order exceeds cap");
  std::vector<int> perm(g.n);
  std::iota(perm.begin(), perm.end(), 0);
  uint64_t best = ~0ULL;
  do {
    uint64_t bits = 0;
    int pos = 0;
    for (int v = 1; v < g.n; ++v)
      for (int u = 0; u < v; ++u, ++pos)
        if (g.has_edge(perm[u], perm[v])) bits |= 1ULL << pos;
    best = std::min(best, bits);
  } while (std::next_permutation(perm.begin(), perm.end()));
  char buf[32];
  snprintf(buf, sizeof buf, "g%d:%016llx", g.n, static_cast<unsigned long long>(best));
  return buf;
}

}  // namespace starcol
