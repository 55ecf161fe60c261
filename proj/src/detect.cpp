#include "starcol/detect.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace starcol {

namespace {

// start at a max-degree vertex, then greedily take the vertex with most
// placed neighbours so edge constraints bind as early as possible
std::vector<int> placement_order(const SimpleGraph& p) {
  std::vector<int> order;
  std::vector<bool> placed(p.n, false);
  for (int step = 0; step < p.n; ++step) {
    int best = -1, best_links = -1, best_deg = -1;
    for (int v = 0; v < p.n; ++v) {
      if (placed[v]) continue;
      int links = 0;
      for (int u : order)
        if (p.has_edge(u, v)) links++;
      if (links > best_links || (links == best_links && p.degree(v) > best_deg)) {
        best = v;
        best_links = links;
        best_deg = p.degree(v);
      }
    }
    placed[best] = true;
    order.push_back(best);
  }
  return order;
}

// vertices 0..k-1 trace the cycle in order
bool is_cyclic_order(const SimpleGraph& p) {
  if (p.n < 3 || p.edge_count() != p.n) return false;
  for (int i = 0; i < p.n; ++i)
    if (p.degree(i) != 2 || !p.has_edge(i, (i + 1) % p.n)) return false;
  return true;
}

// exhaustive injection search with rainbow pruning; symmetry of complete and
// cyclically ordered patterns is factored out without losing completeness
struct Searcher {
  const ColouringIndex& ix;
  const SimpleGraph& p;
  std::vector<int> order;
  std::vector<int> host;
  std::vector<char> colour_used;
  uint32_t host_used = 0;
  uint32_t host_allowed = 0;
  bool cycle_mode = false;   // order is identity; host[0] minimal, host[1] < host[last]
  bool clique_mode = false;  // hosts increase along the order

  Searcher(const ColouringIndex& ix_, const SimpleGraph& p_, uint32_t allowed,
           std::vector<char> banned)
      : ix(ix_), p(p_), host(p_.n, -1), colour_used(std::move(banned)), host_allowed(allowed) {
    cycle_mode = is_cyclic_order(p);
    clique_mode = !cycle_mode && p.edge_count() == num_edges(p.n);
    if (cycle_mode || clique_mode) {
      order.resize(p.n);
      for (int i = 0; i < p.n; ++i) order[i] = i;
    } else {
      order = placement_order(p);
    }
  }

  bool dfs(size_t at) {
    if (at == order.size()) return true;
    int v = order[at];
    for (int h = 0; h < ix.n; ++h) {
      if (!((host_allowed >> h) & 1u) || ((host_used >> h) & 1u)) continue;
      if (cycle_mode && v > 0 && h < host[0]) continue;
      if (cycle_mode && v == p.n - 1 && h < host[1]) continue;
      if (clique_mode && at > 0 && h < host[order[at - 1]]) continue;

      int fresh[32];
      int cnt = 0;
      bool okay = true;
      for (size_t i = 0; i < at && okay; ++i) {
        int u = order[i];
        if (!p.has_edge(u, v)) continue;
        int col = ix.class_of(host[u], h);
        if (colour_used[col]) {
          okay = false;
          break;
        }
        for (int j = 0; j < cnt; ++j)
          if (fresh[j] == col) {
            okay = false;
            break;
          }
        if (okay) fresh[cnt++] = col;
      }
      if (!okay) continue;

      host[v] = h;
      host_used |= 1u << h;
      for (int j = 0; j < cnt; ++j) colour_used[fresh[j]] = 1;
      if (dfs(at + 1)) return true;
      for (int j = 0; j < cnt; ++j) colour_used[fresh[j]] = 0;
      host_used &= ~(1u << h);
      host[v] = -1;
    }
    return false;
  }
};

RainbowCertificate make_certificate(const ColouringIndex& ix, const SimpleGraph& pattern,
                                    std::vector<int> hosts) {
  RainbowCertificate cert;
  cert.pattern = pattern;
  cert.vertex_map = std::move(hosts);
  for (Edge e : pattern.edges())
    cert.edge_colours.push_back(ix.class_of(cert.vertex_map[e.first], cert.vertex_map[e.second]));
  return cert;
}

std::optional<RainbowCertificate> search_rainbow(const ColouringIndex& ix,
                                                 const SimpleGraph& pattern, uint32_t allowed,
                                                 std::vector<char> banned) {
  if (pattern.n > __builtin_popcount(allowed)) return std::nullopt;
  Searcher s(ix, pattern, allowed, std::move(banned));
  if (!s.dfs(0)) return std::nullopt;
  return make_certificate(ix, pattern, s.host);
}

}  // namespace

bool validate_certificate(const StarColouring& c, const RainbowCertificate& cert) {
  if (!validate_colouring(c).ok) return false;
  const SimpleGraph& p = cert.pattern;
  if ((int)cert.vertex_map.size() != p.n) return false;
  uint32_t used = 0;
  for (int h : cert.vertex_map) {
    if (h < 0 || h >= c.n || ((used >> h) & 1u)) return false;
    used |= 1u << h;
  }
  std::vector<Edge> pe = p.edges();
  if (cert.edge_colours.size() != pe.size()) return false;
  ColouringIndex ix = ColouringIndex::build(c);
  std::set<int> seen;
  for (size_t i = 0; i < pe.size(); ++i) {
    int col = ix.class_of(cert.vertex_map[pe[i].first], cert.vertex_map[pe[i].second]);
    if (col != cert.edge_colours[i]) return false;
    if (!seen.insert(col).second) return false;
  }
  return true;
}

std::optional<RainbowCertificate> find_rainbow(const StarColouring& c,
                                               const SimpleGraph& pattern) {
  ValidationReport rep = validate_colouring(c);
  if (!rep.ok) throw InputError("find_rainbow: invalid colouring");
  if (pattern.n > c.n) return std::nullopt;
  ColouringIndex ix = ColouringIndex::build(c);
  uint32_t all = c.n == 31 ? 0x7fffffffu : ((1u << c.n) - 1);
  return search_rainbow(ix, pattern, all, std::vector<char>(ix.k, 0));
}

std::map<int, RainbowCertificate> rainbow_cycle_spectrum(const StarColouring& c) {
  std::map<int, RainbowCertificate> out;
  for (int len = 3; len <= c.n; ++len) {
    auto got = find_rainbow(c, cycle_graph(len));
    if (got) out.emplace(len, std::move(*got));
  }
  return out;
}

namespace {

bool min_two(const StarColouring& c) {
  ColouringIndex ix = ColouringIndex::build(c);
  for (int v = 0; v < c.n; ++v)
    if (star_count_at(ix, v).total < 2) return false;
  return true;
}

std::vector<int> unshift_hosts(const std::vector<int>& hosts, int v) {
  std::vector<int> out;
  out.reserve(hosts.size());
  for (int h : hosts) out.push_back(h < v ? h : h + 1);
  return out;
}

int centre_of(const ClassInfo& info) { return __builtin_ctz(info.centres); }

// the strong-orientation step shared by lm:ext and the hamcycle recursion;
// cycle_hosts is a rainbow C_{n-1} avoiding v, in c's labels
RainbowCertificate extend_impl(const StarColouring& c, const ColouringIndex& ix, int v,
                               const std::vector<int>& cycle_hosts) {
  int n = c.n;
  Tournament t(n);
  std::vector<char> oriented(ix.k, 0);

  auto orient_class = [&](int cl, int z, bool towards) {
    for (Edge e : c.classes[cl]) {
      int leaf = e.first == z ? e.second : e.first;
      if (towards)
        t.set_arc(leaf, z);
      else
        t.set_arc(z, leaf);
    }
    oriented[cl] = 1;
  };

  int len = n - 1;
  for (int i = 0; i < len; ++i) {
    int a = cycle_hosts[i], b = cycle_hosts[(i + 1) % len];
    int cl = ix.class_of(a, b);
    if (c.classes[cl].size() == 1) {
      t.set_arc(a, b);
      oriented[cl] = 1;
    } else {
      int z = centre_of(ix.cls[cl]);
      orient_class(cl, z, b == z);
    }
  }

  // the designated star pulled towards v; stars centred at v never carry a
  // cycle edge because the cycle avoids v
  int chosen = -1;
  for (int cl = 0; cl < ix.k && chosen < 0; ++cl)
    if (!oriented[cl] && ix.is_centre(cl, v)) chosen = cl;
  if (chosen < 0) throw std::logic_error("extend: no star centred at v left to orient");
  orient_class(chosen, v, true);

  // remaining stars at v leave v so it keeps an out-arc; elsewhere the tail
  // pick is arbitrary, equal colours just have to share their tail
  for (int cl = 0; cl < ix.k; ++cl) {
    if (oriented[cl]) continue;
    int z = ix.is_centre(cl, v) ? v : centre_of(ix.cls[cl]);
    orient_class(cl, z, false);
  }

  if (strong_components(t).size() != 1)
    throw std::logic_error("extend: orientation is not strong");
  std::map<int, std::vector<int>> cycles = moon_cycles(t);
  auto it = cycles.find(n);
  if (it == cycles.end()) throw std::logic_error("extend: no directed hamilton cycle");

  RainbowCertificate cert = make_certificate(ix, cycle_graph(n), it->second);
  if (!validate_certificate(c, cert))
    throw std::logic_error("extend: constructed cycle is not rainbow");
  return cert;
}

// recursion of lm:hamcycle; expects min star-count >= 2, returns nullopt only
// on a degenerate branch the caller resolves exhaustively
std::optional<RainbowCertificate> hamcycle_construct(const StarColouring& c) {
  int n = c.n;
  ColouringIndex ix = ColouringIndex::build(c);
  std::vector<StarCount> sc(n);
  for (int v = 0; v < n; ++v) {
    sc[v] = star_count_at(ix, v);
    if (sc[v].total < 2) return std::nullopt;
  }

  if (n == 3) return make_certificate(ix, cycle_graph(3), {0, 1, 2});

  for (int x = 0; x < n; ++x) {
    StarColouring sub = remove_vertex(c, x);
    if (!min_two(sub)) continue;
    auto inner = hamcycle_construct(sub);
    if (!inner) return std::nullopt;
    return extend_impl(c, ix, x, unshift_hosts(inner->vertex_map, x));
  }

  // every single-vertex deletion strands some centre: the uz-recolour route.
  // A holds the tight vertices, J the arcs u->v with uv a single-edge star
  // and u in A, B the vertex set of the unique bad triangle if present.
  uint32_t a_set = 0;
  for (int u = 0; u < n; ++u)
    if (sc[u].total == 2 && sc[u].single_edge >= 1) a_set |= 1u << u;

  auto is_single = [&](int x, int y) { return c.classes[ix.class_of(x, y)].size() == 1; };

  uint32_t b_set = 0;
  for (int p = 0; p < n && !b_set; ++p)
    for (int q = p + 1; q < n && !b_set; ++q)
      for (int r = q + 1; r < n && !b_set; ++r) {
        if (!is_single(p, q) || !is_single(p, r) || !is_single(q, r)) continue;
        int in_a = ((a_set >> p) & 1) + ((a_set >> q) & 1) + ((a_set >> r) & 1);
        if (in_a >= 2) b_set = (1u << p) | (1u << q) | (1u << r);
      }

  int v = -1, u = -1;
  for (int cand = 0; cand < n && v < 0; ++cand) {
    if ((b_set >> cand) & 1u) continue;
    int indeg = 0, from = -1;
    for (int w = 0; w < n; ++w) {
      if (w == cand || !((a_set >> w) & 1u) || !is_single(w, cand)) continue;
      indeg++;
      from = w;
    }
    if (indeg == 1) {
      v = cand;
      u = from;
    }
  }
  if (v < 0) return std::nullopt;

  int uv_class = ix.class_of(u, v);
  int z = -1;
  for (int cl = 0; cl < ix.k && z < 0; ++cl) {
    if (cl == uv_class || !ix.is_centre(cl, v)) continue;
    for (Edge e : c.classes[cl]) {
      int leaf = e.first == v ? e.second : e.first;
      if (leaf != u && !is_single(u, leaf)) {
        z = leaf;
        break;
      }
    }
  }
  if (z < 0) return std::nullopt;

  // delete v and give uz a fresh colour
  StarColouring sub = remove_vertex(c, v);
  int su = u < v ? u : u - 1, sz = z < v ? z : z - 1;
  Edge uz = mk_edge(su, sz);
  for (auto& cls : sub.classes) {
    auto it = std::find(cls.begin(), cls.end(), uz);
    if (it == cls.end()) continue;
    cls.erase(it);
    break;
  }
  sub.classes.erase(std::remove_if(sub.classes.begin(), sub.classes.end(),
                                   [](const std::vector<Edge>& cls) { return cls.empty(); }),
                    sub.classes.end());
  sub.classes.push_back({uz});
  int fresh = sub.colour_count() - 1;

  if (!min_two(sub)) return std::nullopt;
  auto inner = hamcycle_construct(sub);
  if (!inner) return std::nullopt;

  bool uses_fresh = false;
  for (int col : inner->edge_colours) uses_fresh |= (col == fresh);
  if (!uses_fresh)
    return extend_impl(c, ix, v, unshift_hosts(inner->vertex_map, v));

  // splice u,v,z into the cycle in place of the uz edge
  std::vector<int> hosts = unshift_hosts(inner->vertex_map, v);
  int len = (int)hosts.size();
  std::vector<int> out;
  for (int i = 0; i < len; ++i) {
    int a = hosts[i], b = hosts[(i + 1) % len];
    out.push_back(a);
    if ((a == u && b == z) || (a == z && b == u)) out.push_back(v);
  }
  if ((int)out.size() != n) return std::nullopt;
  RainbowCertificate cert = make_certificate(ix, cycle_graph(n), out);
  if (!validate_certificate(c, cert)) return std::nullopt;
  return cert;
}

}  // namespace

std::optional<RainbowCertificate> rainbow_hamilton_cycle(const StarColouring& c) {
  ValidationReport rep = validate_colouring(c);
  if (!rep.ok) throw InputError("hamilton: invalid colouring");
  if (c.n < 3) return std::nullopt;
  if (min_two(c)) {
    auto got = hamcycle_construct(c);
    if (got) return got;
  }
  return find_rainbow(c, cycle_graph(c.n));
}

RainbowCertificate extend_rainbow_cycle(const StarColouring& c, int v,
                                        const std::optional<RainbowCertificate>& inner) {
  ValidationReport rep = validate_colouring(c);
  if (!rep.ok) throw InputError("extend: invalid colouring");
  if (c.n < 4) throw InputError("extend: need n >= 4");
  if (v < 0 || v >= c.n) throw InputError("extend: vertex out of range");
  ColouringIndex ix = ColouringIndex::build(c);
  if (star_count_at(ix, v).total < 2)
    throw InputError("extend: v must be the centre of at least two stars");

  std::vector<int> hosts;
  if (inner) {
    if (!is_cyclic_order(inner->pattern) || inner->pattern.n != c.n - 1)
      throw InputError("extend: inner pattern must be C_{n-1} in cyclic vertex order");
    hosts = inner->vertex_map;
    if ((int)hosts.size() != c.n - 1) throw InputError("extend: inner vertex map size");
    uint32_t seen = 0;
    for (int h : hosts) {
      if (h < 0 || h >= c.n || h == v || ((seen >> h) & 1u))
        throw InputError("extend: inner cycle must injectively avoid v");
      seen |= 1u << h;
    }
    std::set<int> cols;
    for (int i = 0; i < c.n - 1; ++i)
      if (!cols.insert(ix.class_of(hosts[i], hosts[(i + 1) % (c.n - 1)])).second)
        throw InputError("extend: inner cycle is not rainbow");
  } else {
    StarColouring sub = remove_vertex(c, v);
    auto got = rainbow_hamilton_cycle(sub);
    if (!got) throw InputError("extend: c - v has no rainbow hamilton cycle");
    hosts = unshift_hosts(got->vertex_map, v);
  }
  return extend_impl(c, ix, v, hosts);
}

Digraph complete_digraph(int n) {
  Digraph d(n);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v) d.add_arc(u, v);
  return d;
}

Digraph random_digraph(int n, double p, Rng& rng) {
  Digraph d(n);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      if (u == v) continue;
      double x = (double)(rng.next() >> 11) * 0x1.0p-53;
      if (x < p) d.add_arc(u, v);
    }
  return d;
}

namespace {

uint64_t common_out(const Digraph& d, const std::vector<int>& xs) {
  uint64_t m = d.n == 64 ? ~0ULL : ((1ULL << d.n) - 1);
  for (int x : xs) m &= d.out[x];
  return m;
}

// first s-subset of 'a' whose common out-neighbourhood is smaller than b;
// empty when none
std::vector<int> find_bad_subset(const Digraph& d, const std::vector<int>& a, int s, int b) {
  std::vector<int> pick;
  std::vector<int> bad;
  std::function<bool(size_t)> rec = [&](size_t from) {
    if ((int)pick.size() == s) {
      uint64_t m = ~0ULL;
      for (int i : pick) m &= d.out[a[i]];
      if (__builtin_popcountll(m) < b) {
        for (int i : pick) bad.push_back(a[i]);
        return true;
      }
      return false;
    }
    for (size_t i = from; i < a.size(); ++i) {
      pick.push_back((int)i);
      if (rec(i + 1)) return true;
      pick.pop_back();
    }
    return false;
  };
  rec(0);
  return bad;
}

}  // namespace

DrcResult dependent_random_choice(const Digraph& d, int s, int a, int b, uint64_t seed,
                                  int retries) {
  if (s < 1 || a < 1 || b < 0) throw InputError("drc: s, a must be positive and b >= 0");
  DrcResult res;
  if (d.n == 0) return res;
  Rng root(seed);
  for (int att = 0; att < retries; ++att) {
    res.attempts = att + 1;
    Rng rng = root.split();
    std::vector<int> picks(s);
    for (int& x : picks) x = rng.below_int(d.n);

    uint64_t m = common_out(d, picks);
    std::vector<int> cand;
    for (int v = 0; v < d.n; ++v)
      if ((m >> v) & 1u) cand.push_back(v);

    while ((int)cand.size() >= a) {
      std::vector<int> bad = find_bad_subset(d, cand, s, b);
      if (bad.empty()) break;
      cand.erase(std::find(cand.begin(), cand.end(), bad.back()));
    }
    if ((int)cand.size() < a) continue;
    cand.resize(a);
    if (find_bad_subset(d, cand, s, b).empty()) {
      res.set = cand;
      return res;
    }
  }
  return res;
}

namespace {

// one arc per colour: centre to its lowest-index leaf
Digraph colour_digraph(const StarColouring& c, const ColouringIndex& ix) {
  Digraph d(c.n);
  for (int cl = 0; cl < ix.k; ++cl) {
    int z = centre_of(ix.cls[cl]);
    uint32_t leaves = ix.cls[cl].vertices & ~(1u << z);
    d.add_arc(z, __builtin_ctz(leaves));
  }
  return d;
}

// embed t2 into the allowed hosts so that t2's edges plus the cross edges to
// x_hosts stay rainbow over the banned baseline
struct JoinEmbedder {
  const ColouringIndex& ix;
  const SimpleGraph& t2;
  const std::vector<int>& x_hosts;
  std::vector<int> order;
  std::vector<int> host;
  std::vector<char> used;
  uint32_t host_used = 0;
  uint32_t allowed = 0;

  JoinEmbedder(const ColouringIndex& ix_, const SimpleGraph& t2_, const std::vector<int>& xs,
               uint32_t allowed_, std::vector<char> banned)
      : ix(ix_), t2(t2_), x_hosts(xs), order(placement_order(t2_)), host(t2_.n, -1),
        used(std::move(banned)), allowed(allowed_) {}

  bool dfs(size_t at) {
    if (at == order.size()) return true;
    int v = order[at];
    for (int h = 0; h < ix.n; ++h) {
      if (!((allowed >> h) & 1u) || ((host_used >> h) & 1u)) continue;
      int fresh[64];
      int cnt = 0;
      bool okay = true;
      auto claim = [&](int col) {
        if (used[col]) return false;
        for (int j = 0; j < cnt; ++j)
          if (fresh[j] == col) return false;
        fresh[cnt++] = col;
        return true;
      };
      for (int x : x_hosts)
        if (!claim(ix.class_of(x, h))) {
          okay = false;
          break;
        }
      for (size_t i = 0; i < at && okay; ++i) {
        int q = order[i];
        if (t2.has_edge(q, v) && !claim(ix.class_of(host[q], h))) okay = false;
      }
      if (!okay) continue;
      host[v] = h;
      host_used |= 1u << h;
      for (int j = 0; j < cnt; ++j) used[fresh[j]] = 1;
      if (dfs(at + 1)) return true;
      for (int j = 0; j < cnt; ++j) used[fresh[j]] = 0;
      host_used &= ~(1u << h);
      host[v] = -1;
    }
    return false;
  }
};

}  // namespace

std::optional<RainbowCertificate> find_rainbow_join(const StarColouring& c,
                                                    const SimpleGraph& t1,
                                                    const SimpleGraph& t2, uint64_t seed) {
  auto tree_ok = [](const SimpleGraph& t) {
    return t.n >= 2 && t.edge_count() == t.n - 1 && is_connected(t);
  };
  if (!tree_ok(t1) || !tree_ok(t2)) throw InputError("join: t1 and t2 must be trees");
  if (t1.n > t2.n) throw InputError("join: need v(t1) <= v(t2)");
  ValidationReport rep = validate_colouring(c);
  if (!rep.ok) throw InputError("join: invalid colouring");

  int s = t1.n, n = c.n;
  if (s + t2.n > n) return std::nullopt;
  ColouringIndex ix = ColouringIndex::build(c);
  Digraph g = colour_digraph(c, ix);
  SimpleGraph pattern = join_graphs(t1, t2);

  auto assemble = [&](const std::vector<int>& t1_hosts, uint32_t y_mask)
      -> std::optional<RainbowCertificate> {
    std::vector<char> banned(ix.k, 0);
    for (Edge e : t1.edges()) {
      int col = ix.class_of(t1_hosts[e.first], t1_hosts[e.second]);
      if (banned[col]) return std::nullopt;
      banned[col] = 1;
    }
    // drop outneighbours whose cross colour collides with a t1 colour
    uint32_t pruned = 0;
    for (int y = 0; y < n; ++y) {
      if (!((y_mask >> y) & 1u)) continue;
      bool clash = false;
      for (int x : t1_hosts) clash |= banned[ix.class_of(x, y)] != 0;
      if (!clash) pruned |= 1u << y;
    }
    if (__builtin_popcount(pruned) < t2.n) return std::nullopt;
    JoinEmbedder emb(ix, t2, t1_hosts, pruned, banned);
    if (!emb.dfs(0)) return std::nullopt;

    std::vector<int> map;
    map.reserve(pattern.n);
    for (int h : t1_hosts) map.push_back(h);
    for (int h : emb.host) map.push_back(h);
    RainbowCertificate cert = make_certificate(ix, pattern, std::move(map));
    if (!validate_certificate(c, cert)) return std::nullopt;
    return cert;
  };

  Rng root(seed);
  for (int att = 0; att < 64; ++att) {
    Rng rng = root.split();
    if (s == 2) {
      uint32_t a_side = 0;
      for (int v = 0; v < n; ++v)
        if (rng.coin()) a_side |= 1u << v;
      for (int x1 = 0; x1 < n; ++x1) {
        if (!((a_side >> x1) & 1u)) continue;
        for (int x2 = x1 + 1; x2 < n; ++x2) {
          if (!((a_side >> x2) & 1u)) continue;
          uint32_t y = (uint32_t)(g.out[x1] & g.out[x2]) & ~a_side;
          if (__builtin_popcount(y) < t2.n) continue;
          auto got = assemble({x1, x2}, y);
          if (got) return got;
        }
      }
    } else {
      DrcResult drc = dependent_random_choice(g, s, s, t2.n + s - 1, rng.next(), 1);
      if (!drc.set) continue;
      uint32_t a_mask = 0;
      for (int v : *drc.set) a_mask |= 1u << v;
      auto t1_found = search_rainbow(ix, t1, a_mask, std::vector<char>(ix.k, 0));
      if (!t1_found) continue;
      std::vector<int> xs = t1_found->vertex_map;
      uint64_t y = common_out(g, xs);
      auto got = assemble(xs, (uint32_t)y);
      if (got) return got;
    }
  }
  return std::nullopt;
}

}  // namespace starcol
