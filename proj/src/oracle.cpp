#include "starcol/oracle.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <thread>

#include "starcol/constructions.hpp"
#include "starcol/detect.hpp"

namespace starcol {

namespace {

std::vector<Edge> colex_edges(int n) {
  std::vector<Edge> es;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u) es.push_back({u, v});
  return es;
}

// ---- enumeration ------------------------------------------------------
//
// A star colouring is an orientation of K_n (each edge towards the leaf,
// single-edge classes owned by the lower endpoint) together with a set
// partition of every out-neighbourhood. Bijective once singleton groups
// {w} at vertex v are forbidden for w < v.

struct Enumerator {
  int n;
  std::vector<std::vector<int>> out;
  std::vector<std::vector<std::vector<int>>> groups;  // per vertex
  const std::function<bool(const StarColouring&)>& visit;
  uint64_t count = 0;
  bool stopped = false;

  Enumerator(int n_, const std::function<bool(const StarColouring&)>& v)
      : n(n_), out(n_), groups(n_), visit(v) {}

  void emit() {
    StarColouring c;
    c.n = n;
    for (int v = 0; v < n; ++v)
      for (const auto& g : groups[v]) {
        std::vector<Edge> cls;
        cls.reserve(g.size());
        for (int w : g) cls.push_back(mk_edge(v, w));
        c.classes.push_back(std::move(cls));
      }
    count++;
    if (!visit(c)) stopped = true;
  }

  void place(int v, size_t idx) {
    if (stopped) return;
    if (idx == out[v].size()) {
      for (const auto& g : groups[v])
        if (g.size() == 1 && g[0] < v) return;
      vertex(v + 1);
      return;
    }
    int w = out[v][idx];
    for (size_t g = 0; g < groups[v].size() && !stopped; ++g) {
      groups[v][g].push_back(w);
      place(v, idx + 1);
      groups[v][g].pop_back();
    }
    if (stopped) return;
    groups[v].push_back({w});
    place(v, idx + 1);
    groups[v].pop_back();
  }

  void vertex(int v) {
    if (v == n) {
      emit();
      return;
    }
    place(v, 0);
  }
};

uint64_t enumerate_impl(int n, bool canonical_only,
                        const std::function<bool(const StarColouring&)>& visit) {
  if (n < 0 || n > 7) throw CapError("enumerate: n capped at 7");
  std::vector<Edge> es = colex_edges(n);
  int E = (int)es.size();

  std::set<std::string> seen;
  uint64_t visited = 0;
  bool stop = false;
  std::function<bool(const StarColouring&)> inner = [&](const StarColouring& c) {
    if (canonical_only) {
      if (!seen.insert(canonical_key(c).key).second) return true;
    }
    visited++;
    if (!visit(c)) {
      stop = true;
      return false;
    }
    return true;
  };

  if (n <= 1) {
    StarColouring c;
    c.n = n;
    inner(c);
    return visited;
  }

  for (uint64_t mask = 0; mask < (1ULL << E) && !stop; ++mask) {
    Enumerator en(n, inner);
    for (int e = 0; e < E; ++e) {
      auto [u, v] = es[e];
      if ((mask >> e) & 1)
        en.out[v].push_back(u);
      else
        en.out[u].push_back(v);
    }
    en.vertex(0);
    if (en.stopped) stop = true;
  }
  return visited;
}

}  // namespace

uint64_t enumerate_star_colourings(int n, bool canonical_only,
                                   const std::function<void(const StarColouring&)>& visit) {
  return enumerate_impl(n, canonical_only, [&](const StarColouring& c) {
    visit(c);
    return true;
  });
}

uint64_t count_star_colourings(int n) {
  if (n < 0 || n > 7) throw CapError("enumerate: n capped at 7");
  if (n <= 1) return 1;
  static const uint64_t bell[] = {1, 1, 2, 5, 15, 52, 203};
  std::vector<Edge> es = colex_edges(n);
  int E = (int)es.size();
  uint64_t binom[8][8] = {};
  for (int i = 0; i < 8; ++i) {
    binom[i][0] = 1;
    for (int j = 1; j <= i; ++j) binom[i][j] = binom[i - 1][j - 1] + (j <= i - 1 ? binom[i - 1][j] : 0);
  }

  uint64_t total = 0;
  for (uint64_t mask = 0; mask < (1ULL << E); ++mask) {
    int deg[7] = {}, low[7] = {};
    for (int e = 0; e < E; ++e) {
      auto [u, v] = es[e];
      int tail = ((mask >> e) & 1) ? v : u;
      int head = u + v - tail;
      deg[tail]++;
      if (head < tail) low[tail]++;
    }
    uint64_t prod = 1;
    for (int v = 0; v < n && prod; ++v) {
      uint64_t ways = 0;
      for (int i = 0; i <= low[v]; ++i) {
        uint64_t term = binom[low[v]][i] * bell[deg[v] - i];
        ways += (i % 2 == 0) ? term : -term;
      }
      prod *= ways;
    }
    total += prod;
  }
  return total;
}

// ---- branch and bound -------------------------------------------------

namespace {

struct PartialCls {
  uint32_t common = 0;
  int size = 0;
};

struct Partial {
  int n = 0;
  std::vector<Edge> es;
  std::vector<int8_t> cls_of;
  std::vector<PartialCls> classes;

  explicit Partial(int n_) : n(n_), es(colex_edges(n_)), cls_of(es.size(), -1) {}

  // -1 when the class would stop being a star
  int assign(int ei, int cls) {
    auto [u, v] = es[ei];
    uint32_t emask = (1u << u) | (1u << v);
    if (cls == (int)classes.size()) {
      classes.push_back({emask, 1});
    } else {
      uint32_t common = classes[cls].common & emask;
      if (!common) return -1;
      classes[cls].common = common;
      classes[cls].size++;
    }
    cls_of[ei] = (int8_t)cls;
    return 0;
  }

  void undo(int ei, int cls, uint32_t saved_common) {
    cls_of[ei] = -1;
    if (cls == (int)classes.size() - 1 && classes[cls].size == 1) {
      classes.pop_back();
    } else {
      classes[cls].common = saved_common;
      classes[cls].size--;
    }
  }

  StarColouring to_colouring() const {
    StarColouring c;
    c.n = n;
    c.classes.resize(classes.size());
    for (size_t e = 0; e < es.size(); ++e) c.classes[cls_of[e]].push_back(es[e]);
    return c;
  }
};

// rainbow copy of h using host edge (au, av), over assigned edges only
struct Anchored {
  const Partial& P;
  const SimpleGraph& h;
  std::vector<int> map;
  uint32_t hosts_used = 0;
  std::vector<char> cols;
  std::vector<int> claimed;

  Anchored(const Partial& P_, const SimpleGraph& h_)
      : P(P_), h(h_), map(h_.n, -1), cols(P_.classes.size() + 1, 0) {}

  int colour_at(int x, int y) const {
    return P.cls_of[edge_id(std::min(x, y), std::max(x, y))];
  }

  bool claim(int col) {
    if (col < 0 || cols[col]) return false;
    cols[col] = 1;
    claimed.push_back(col);
    return true;
  }

  bool extend(const std::vector<int>& order, size_t at) {
    if (at == order.size()) return true;
    int w = order[at];
    for (int hv = 0; hv < P.n; ++hv) {
      if ((hosts_used >> hv) & 1u) continue;
      size_t mark = claimed.size();
      bool ok = true;
      for (size_t i = 0; i < at && ok; ++i) {
        int q = order[i];
        if (h.has_edge(q, w) && !claim(colour_at(map[q], hv))) ok = false;
      }
      if (ok) {
        map[w] = hv;
        hosts_used |= 1u << hv;
        if (extend(order, at + 1)) return true;
        hosts_used &= ~(1u << hv);
        map[w] = -1;
      }
      while (claimed.size() > mark) {
        cols[claimed.back()] = 0;
        claimed.pop_back();
      }
    }
    return false;
  }

  bool through(int au, int av) {
    for (Edge pe : h.edges()) {
      for (int flip = 0; flip < 2; ++flip) {
        int a = flip ? pe.second : pe.first;
        int b = flip ? pe.first : pe.second;
        std::fill(map.begin(), map.end(), -1);
        std::fill(cols.begin(), cols.end(), 0);
        claimed.clear();
        hosts_used = (1u << au) | (1u << av);
        map[a] = au;
        map[b] = av;
        if (!claim(colour_at(au, av))) continue;

        std::vector<int> order = {a, b};
        std::vector<bool> placed(h.n, false);
        placed[a] = placed[b] = true;
        for (int step = 2; step < h.n; ++step) {
          int best = -1, links = -1;
          for (int x = 0; x < h.n; ++x) {
            if (placed[x]) continue;
            int l = 0;
            for (int q : order)
              if (h.has_edge(q, x)) l++;
            if (l > links) {
              best = x;
              links = l;
            }
          }
          placed[best] = true;
          order.push_back(best);
        }
        if (extend(order, 2)) return true;
      }
    }
    return false;
  }
};

struct Engine {
  Partial P;
  const std::vector<SimpleGraph>& fam;
  SearchStats stats;
  int best;  // explored leaves must beat this
  int E;

  bool collect = false;
  int target = -1;
  std::vector<StarColouring> found;

  int best_found = -1;
  bool any_leaf = false;

  int split_depth = -1;
  std::vector<std::vector<int8_t>>* tasks = nullptr;

  Engine(int n, const std::vector<SimpleGraph>& fam_, int seed)
      : P(n), fam(fam_), best(seed), E((int)P.es.size()) {}

  bool makes_rainbow(int ei) {
    auto [u, v] = P.es[ei];
    for (const SimpleGraph& h : fam) {
      Anchored a(P, h);
      if (a.through(u, v)) return true;
    }
    return false;
  }

  void rec(int ei) {
    stats.nodes++;
    if ((int)P.classes.size() + (E - ei) <= best) {
      stats.pruned_bound++;
      return;
    }
    if (ei == split_depth && tasks) {
      tasks->push_back(std::vector<int8_t>(P.cls_of.begin(), P.cls_of.begin() + ei));
      return;
    }
    if (ei == E) {
      stats.leaves++;
      any_leaf = true;
      int k = (int)P.classes.size();
      if (k > best_found) best_found = k;
      if (collect) {
        if (k == target) found.push_back(P.to_colouring());
      } else if (k > best) {
        best = k;
      }
      return;
    }
    int existing = (int)P.classes.size();
    for (int cls = 0; cls <= existing; ++cls) {
      uint32_t saved = cls < existing ? P.classes[cls].common : 0;
      if (P.assign(ei, cls) < 0) continue;
      if (makes_rainbow(ei)) {
        stats.pruned_rainbow++;
      } else {
        rec(ei + 1);
      }
      P.undo(ei, cls, saved);
    }
  }

  void replay(const std::vector<int8_t>& prefix) {
    for (size_t e = 0; e < prefix.size(); ++e) P.assign((int)e, prefix[e]);
  }
};

int seed_from_constructions(int n, const std::vector<SimpleGraph>& fam,
                            std::vector<StarColouring>* keep = nullptr) {
  std::vector<StarColouring> cands;
  auto add = [&](std::function<StarColouring()> make) {
    try {
      cands.push_back(make());
    } catch (const InputError&) {
    }
  };
  add([&] { return lexical_colouring(n); });
  for (int k = 3; k <= std::min(n, 8); ++k)
    add([&] { return cycle_extremal(n, k, std::nullopt); });
  add([&] { return k4_extremal_two_part(n, n / 2); });
  add([&] { return k4minus_extremal(n, std::nullopt); });

  int seed = -1;
  for (const StarColouring& c : cands) {
    bool avoid = true;
    for (const SimpleGraph& h : fam)
      if (find_rainbow(c, h)) {
        avoid = false;
        break;
      }
    if (!avoid) continue;
    if (c.colour_count() > seed) {
      seed = c.colour_count();
      if (keep) keep->push_back(c);
    }
  }
  return seed;
}

// deterministic task split: value/witnesses/stats independent of thread count
std::optional<OracleResult> run_oracle(int n, const std::vector<SimpleGraph>& fam,
                                       const OracleOptions& opts) {
  if (n < 2) throw InputError("oracle: need n >= 2");
  if (n > opts.max_n) throw CapError("oracle: n exceeds max_n");
  if (fam.empty()) throw InputError("oracle: empty family");
  for (const SimpleGraph& h : fam)
    if (h.edge_count() == 0) throw InputError("oracle: pattern without edges");

  int seed = seed_from_constructions(n, fam);

  Engine expand(n, fam, seed - 1);
  int E = expand.E;
  int depth = std::min(E, 4);
  std::vector<std::vector<int8_t>> tasks;
  expand.split_depth = depth;
  expand.tasks = &tasks;
  expand.rec(0);

  SearchStats stats = expand.stats;
  int value = std::max(seed, expand.best_found);
  bool exists = seed >= 0 || expand.any_leaf;

  auto run_tasks = [&](bool collect, int target, std::vector<Engine>& engines) {
    engines.clear();
    engines.reserve(tasks.size());
    for (const auto& t : tasks) {
      engines.emplace_back(n, fam, collect ? target - 1 : seed);
      engines.back().collect = collect;
      engines.back().target = target;
      engines.back().replay(t);
    }
    int nt = std::max(1, opts.threads);
    auto work = [&](int tid) {
      for (size_t i = tid; i < engines.size(); i += nt) engines[i].rec(depth);
    };
    if (nt == 1) {
      work(0);
    } else {
      std::vector<std::thread> pool;
      for (int t = 0; t < nt; ++t) pool.emplace_back(work, t);
      for (auto& th : pool) th.join();
    }
  };

  std::vector<Engine> engines;
  run_tasks(false, -1, engines);
  for (const Engine& e : engines) {
    stats += e.stats;
    value = std::max(value, e.best_found);
    exists = exists || e.any_leaf;
  }
  if (!exists) return std::nullopt;

  OracleResult res;
  res.value = value;
  if (opts.collect_witnesses) {
    run_tasks(true, value, engines);
    std::map<std::string, StarColouring> uniq;
    for (const Engine& e : engines) {
      stats += e.stats;
      for (const StarColouring& c : e.found) uniq.emplace(canonical_key(c).key, c);
    }
    for (auto& [key, c] : uniq) res.witnesses.push_back(std::move(c));
  }
  res.stats = stats;
  return res;
}

}  // namespace

OracleResult star_anti_ramsey(int n, const std::vector<SimpleGraph>& family,
                              const OracleOptions& opts) {
  bool some_cyclic = false;
  for (const SimpleGraph& h : family) some_cyclic |= graph_invariants(h).va >= 2;
  if (!some_cyclic)
    throw InputError("oracle: family of forests, no rainbow-free colouring bound");
  auto res = run_oracle(n, family, opts);
  if (!res) throw std::logic_error("oracle: no avoiding colouring despite cyclic member");
  return *res;
}

OracleResult star_anti_ramsey(int n, const SimpleGraph& pattern, const OracleOptions& opts) {
  if (graph_invariants(pattern).va < 2)
    throw InputError("oracle: pattern is a forest, no maximum exists");
  return star_anti_ramsey(n, std::vector<SimpleGraph>{pattern}, opts);
}

std::optional<OracleResult> star_anti_ramsey_family(int n,
                                                    const std::vector<SimpleGraph>& family,
                                                    const OracleOptions& opts) {
  return run_oracle(n, family, opts);
}

std::optional<int> nsar(const SimpleGraph& pattern, int cap, const OracleOptions& opts) {
  (void)opts;
  if (pattern.edge_count() == 0 || !is_forest(pattern))
    throw InputError("nsar: pattern must be a forest with at least one edge");
  if (cap > 7) throw CapError("nsar: cap exceeds enumeration limit 7");
  for (int n = std::max(2, pattern.n); n <= cap; ++n) {
    bool all_contain = true;
    enumerate_impl(n, false, [&](const StarColouring& c) {
      if (!find_rainbow(c, pattern)) {
        all_contain = false;
        return false;
      }
      return true;
    });
    if (all_contain) return n;
  }
  return std::nullopt;
}

std::vector<StarColouring> extremal_colourings(int n, const SimpleGraph& pattern,
                                               const OracleOptions& opts) {
  OracleOptions o = opts;
  o.collect_witnesses = true;
  return star_anti_ramsey(n, pattern, o).witnesses;
}

// ---- structure checks -------------------------------------------------

bool check_structure_ck(const StarColouring& c, int k) {
  if (!validate_colouring(c).ok) throw InputError("structure: invalid colouring");
  int n = c.n;
  if (k < 3 || k - 1 > n) return false;
  ColouringIndex ix = ColouringIndex::build(c);

  std::vector<uint32_t> bsets;
  for (uint32_t b = 0; b < (1u << n); ++b)
    if (__builtin_popcount(b) == k - 1) bsets.push_back(b);

  for (uint32_t B : bsets) {
    bool ok = true;
    std::vector<int> star_of(n, -1);  // the one big star centred at each A vertex
    for (int cl = 0; cl < ix.k && ok; ++cl) {
      const ClassInfo& info = ix.cls[cl];
      if (info.size == 1) {
        if ((info.vertices & B) != info.vertices) ok = false;  // must lie inside B
        continue;
      }
      int z = __builtin_ctz(info.centres);
      if ((B >> z) & 1u) {
        ok = false;
        continue;
      }
      if (star_of[z] != -1) {
        ok = false;
        continue;
      }
      uint32_t leaves = info.vertices & ~(1u << z);
      if ((leaves & B) != B) {
        ok = false;
        continue;
      }
      star_of[z] = cl;
    }
    if (!ok) continue;
    std::vector<int> avert;
    for (int v = 0; v < n; ++v)
      if (!((B >> v) & 1u)) avert.push_back(v);
    for (int v : avert)
      if (star_of[v] < 0) ok = false;
    if (!ok) continue;

    Tournament t((int)avert.size());
    for (size_t i = 0; i < avert.size(); ++i)
      for (size_t j = i + 1; j < avert.size(); ++j) {
        int cl = ix.class_of(avert[i], avert[j]);
        if (cl == star_of[avert[i]])
          t.set_arc((int)i, (int)j);
        else
          t.set_arc((int)j, (int)i);
      }
    if (is_ck_free(t, k).free) return true;
  }
  return false;
}

namespace {

// exact isomorphism via edge-class correspondence
struct IsoSearch {
  const StarColouring& a;
  const StarColouring& b;
  ColouringIndex ia, ib;
  std::vector<int> vmap, cmap, cused;
  std::vector<std::string> inv_a, inv_b;

  IsoSearch(const StarColouring& a_, const StarColouring& b_)
      : a(a_), b(b_), ia(ColouringIndex::build(a_)), ib(ColouringIndex::build(b_)),
        vmap(a_.n, -1), cmap(ia.k, -1), cused(ib.k, 0) {
    inv_a = invariants(a, ia);
    inv_b = invariants(b, ib);
  }

  static std::vector<std::string> invariants(const StarColouring& c, const ColouringIndex& ix) {
    std::vector<std::string> out(c.n);
    for (int v = 0; v < c.n; ++v) {
      std::vector<std::pair<int, int>> prof;  // (class size, centred here)
      for (int cl = 0; cl < ix.k; ++cl) {
        if (!((ix.cls[cl].vertices >> v) & 1u)) continue;
        prof.push_back({ix.cls[cl].size, ix.is_centre(cl, v) ? 1 : 0});
      }
      std::sort(prof.begin(), prof.end());
      std::string s;
      for (auto [sz, ce] : prof) {
        s += std::to_string(sz);
        s += ce ? 'c' : 'l';
      }
      out[v] = s;
    }
    return out;
  }

  bool place(int v) {
    if (v == a.n) return true;
    for (int w = 0; w < b.n; ++w) {
      if (inv_a[v] != inv_b[w]) continue;
      bool taken = false;
      for (int q = 0; q < v; ++q) taken |= (vmap[q] == w);
      if (taken) continue;
      std::vector<std::pair<int, int>> fixed;
      bool ok = true;
      for (int q = 0; q < v && ok; ++q) {
        int ca = ia.class_of(q, v);
        int cb = ib.class_of(vmap[q], w);
        if (cmap[ca] == -1) {
          if (cused[cb]) {
            ok = false;
            break;
          }
          cmap[ca] = cb;
          cused[cb] = 1;
          fixed.push_back({ca, cb});
        } else if (cmap[ca] != cb) {
          ok = false;
        }
      }
      if (ok) {
        vmap[v] = w;
        if (place(v + 1)) return true;
        vmap[v] = -1;
      }
      for (auto [ca, cb] : fixed) {
        cmap[ca] = -1;
        cused[cb] = 0;
      }
    }
    return false;
  }
};

bool colouring_isomorphic(const StarColouring& a, const StarColouring& b) {
  if (a.n != b.n || a.colour_count() != b.colour_count()) return false;
  std::vector<size_t> sa, sb;
  for (const auto& cls : a.classes) sa.push_back(cls.size());
  for (const auto& cls : b.classes) sb.push_back(cls.size());
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (sa != sb) return false;
  IsoSearch s(a, b);
  {
    std::vector<std::string> va = s.inv_a, vb = s.inv_b;
    std::sort(va.begin(), va.end());
    std::sort(vb.begin(), vb.end());
    if (va != vb) return false;
  }
  return s.place(0);
}

}  // namespace

bool check_structure_k4minus(const StarColouring& c) {
  if (!validate_colouring(c).ok) throw InputError("structure: invalid colouring");
  int n = c.n;
  std::vector<StarColouring> cands;
  if (n <= 2 || n % 2 == 1) {
    cands.push_back(k4minus_extremal(n, std::nullopt));
  } else {
    int m = n / 2;
    for (int a = 1; a <= m - 1; ++a) {
      int t0 = 2 * a - 2;
      Edge e01 = {t0, t0 + 1}, e02 = {t0, t0 + 2}, e12 = {t0 + 1, t0 + 2};
      std::vector<std::vector<Edge>> shapes = {{e01},      {e02},      {e12},
                                               {e01, e02}, {e01, e12}, {e02, e12}};
      for (const auto& s : shapes) {
        K4MinusParams p;
        p.a = a;
        p.s_edges = s;
        cands.push_back(k4minus_extremal(n, p));
      }
    }
  }
  for (const StarColouring& cand : cands)
    if (colouring_isomorphic(c, cand)) return true;
  return false;
}

// ---- covering tuples ---------------------------------------------------

namespace {

uint64_t colours_inside(const ColouringIndex& ix, uint32_t verts) {
  uint64_t cols = 0;
  for (int v = 0; v < ix.n; ++v) {
    if (!((verts >> v) & 1u)) continue;
    for (int u = 0; u < v; ++u)
      if ((verts >> u) & 1u) cols |= 1ULL << ix.class_of(u, v);
  }
  return cols;
}

bool p4_holds(const ColouringIndex& ix, uint32_t W, uint32_t Y, uint32_t Z, int x, int vstar) {
  int n = ix.n;
  for (int y = 0; y < n; ++y) {
    if (!((Y >> y) & 1u) || y == x) continue;
    for (int z = 0; z < n; ++z) {
      if (!((Z >> z) & 1u) || z == vstar) continue;
      uint32_t targets = (W | (1u << y) | (1u << z)) & ~(1u << x);
      uint64_t seen = 0;
      for (int u = 0; u < n; ++u) {
        if (!((targets >> u) & 1u)) continue;
        uint64_t bit = 1ULL << ix.class_of(x, u);
        if (seen & bit) return false;
        seen |= bit;
      }
    }
  }
  return true;
}

}  // namespace

TupleReport check_tuple(const StarColouring& c, const CoverTuple& t) {
  if (!validate_colouring(c).ok) throw InputError("tuple: invalid colouring");
  ColouringIndex ix = ColouringIndex::build(c);
  int n = c.n, k = ix.k;
  if (k > 63) throw CapError("tuple: too many colours");
  uint32_t full = n == 31 ? 0x7fffffffu : ((1u << n) - 1);
  TupleReport r;

  r.p1 = (t.w_mask | t.y_mask | t.z_mask) == ((t.w_mask | t.y_mask | t.z_mask) & full) &&
         t.x >= 0 && t.x < n && t.v_star >= 0 && t.v_star < n && t.c_z >= 0 && t.c_z < k;
  if (!r.p1) return r;

  uint32_t W = t.w_mask, Y = t.y_mask, Z = t.z_mask;
  int x = t.x, vs = t.v_star;
  int pw = __builtin_popcount(W), py = __builtin_popcount(Y), pz = __builtin_popcount(Z);

  r.p2 = (W | Y | Z) == full && pw >= 1 && py >= 2 && pz >= 2 && pw + py + pz == n + 2;

  uint64_t CY = colours_inside(ix, Y);
  uint64_t CZ = colours_inside(ix, Z);
  uint64_t CW = colours_inside(ix, W);
  uint64_t CYZ = colours_inside(ix, Y | Z);
  uint64_t BP = CY | CZ | (1ULL << t.c_z);

  r.p3 = CYZ == BP;
  r.p4 = p4_holds(ix, W, Y, Z, x, vs);

  r.p5 = ((W >> x) & 1u) && ((Y >> x) & 1u) && !((Z >> x) & 1u) && ((Y >> vs) & 1u) &&
         ((Z >> vs) & 1u) && !((W >> vs) & 1u);
  if (r.p5)
    for (int u = 0; u < n; ++u) {
      if (u == x || u == vs) continue;
      int m = ((W >> u) & 1) + ((Y >> u) & 1) + ((Z >> u) & 1);
      if (m != 1) r.p5 = false;
    }

  r.p6 = true;
  for (int u = 0; u < n; ++u) {
    bool in_scope = (((Z >> u) & 1u) && u != vs) || u == x;
    if (!in_scope) continue;
    if (u == vs || !ix.is_centre(ix.class_of(vs, u), u)) r.p6 = false;
  }

  r.p7 = true;
  for (int z = 0; z < n; ++z) {
    if (!((Z >> z) & 1u) || z == vs) continue;
    if (z == x || ix.class_of(x, z) != t.c_z || !ix.is_centre(t.c_z, x)) r.p7 = false;
  }

  r.restricted_ok = true;
  for (int w = 0; w < n && r.restricted_ok; ++w) {
    if (!((W >> w) & 1u) || w == x) continue;
    uint64_t allowed = BP | (1ULL << ix.class_of(w, x));
    for (int y = 0; y < n; ++y) {
      if (!((Y >> y) & 1u) || y == w) continue;
      if (!((allowed >> ix.class_of(w, y)) & 1u)) r.restricted_ok = false;
    }
  }

  uint64_t call = colours_inside(ix, full);
  r.covers = call == (CW | BP);
  return r;
}

CoverSearchResult find_covering_tuple(const StarColouring& c) {
  if (!validate_colouring(c).ok) throw InputError("tuple: invalid colouring");
  int n = c.n;
  if (n > 7) throw CapError("tuple search capped at n <= 7");
  if (find_rainbow(c, complete_graph(4)))
    throw InputError("tuple search: colouring contains a rainbow K_4");
  ColouringIndex ix = ColouringIndex::build(c);
  bool big_star = false;
  for (int v = 0; v < n; ++v)
    if (star_count_at(ix, v).total >= 3) big_star = true;
  if (!big_star) throw InputError("tuple search: no vertex centres three stars");

  CoverSearchResult res;
  uint32_t full = (1u << n) - 1;
  uint64_t call = colours_inside(ix, full);

  for (uint32_t W = 1; W <= full; ++W) {
    int pw = __builtin_popcount(W);
    for (uint32_t Y = 0; Y <= full; ++Y) {
      int py = __builtin_popcount(Y);
      if (py < 2 || pw + py > n + 2) continue;
      for (uint32_t Z = 0; Z <= full; ++Z) {
        int pz = __builtin_popcount(Z);
        if (pz < 2 || pw + py + pz != n + 2) continue;
        if ((W | Y | Z) != full) continue;

        uint64_t CY = colours_inside(ix, Y);
        uint64_t CZ = colours_inside(ix, Z);
        uint64_t CYZ = colours_inside(ix, Y | Z);
        uint64_t CW = colours_inside(ix, W);
        uint64_t extra = CYZ & ~(CY | CZ);
        if (__builtin_popcountll(extra) > 1) continue;

        int cz;
        if (extra) {
          cz = __builtin_ctzll(extra);
          if (call != (CW | CY | CZ | extra)) continue;
        } else {
          uint64_t missing = call & ~(CW | CY | CZ);
          if (missing) continue;  // c_z must be in C(Y)|C(Z) here, adds nothing
          if (!(CY | CZ)) continue;
          cz = __builtin_ctzll(CY | CZ);
        }

        for (int x = 0; x < n; ++x)
          for (int vs = 0; vs < n; ++vs) {
            res.examined++;
            if (!p4_holds(ix, W, Y, Z, x, vs)) continue;
            res.tuple = CoverTuple{W, Y, Z, x, vs, cz};
            return res;
          }
      }
    }
  }
  return res;
}

// ---- small extremal numbers -------------------------------------------

ExResult ex_small(int n, const std::vector<SimpleGraph>& family, int cap) {
  if (n < 0) throw InputError("ex: negative n");
  if (n > cap) throw CapError("ex: n exceeds cap");
  for (const SimpleGraph& h : family)
    if (h.edge_count() == 0) throw InputError("ex: pattern without edges");

  std::vector<Edge> es = colex_edges(n);
  int E = (int)es.size();
  ExResult res;
  res.witness = SimpleGraph(n);
  res.value = 0;
  SimpleGraph g(n);

  // family {C_3..C_k}: the new edge closes a short cycle iff its endpoints
  // are already within distance k-1
  int cycles_to = 0;
  if (family.size() <= 12) {
    std::vector<SimpleGraph> want;
    for (int k = 3; k <= (int)family.size() + 2; ++k) want.push_back(cycle_graph(k));
    if (family == want) cycles_to = (int)family.size() + 2;
  }

  auto completes = [&](int ei) {
    auto [u, v] = es[ei];
    if (cycles_to) {
      uint32_t reach = 1u << u, frontier = 1u << u;
      for (int step = 1; step < cycles_to && frontier; ++step) {
        uint32_t next = 0;
        while (frontier) {
          int w = __builtin_ctz(frontier);
          frontier &= frontier - 1;
          next |= g.adj[w];
        }
        frontier = next & ~reach;
        reach |= next;
        if ((reach >> v) & 1) return true;
      }
      return false;
    }
    g.add_edge(u, v);
    bool hit = false;
    for (const SimpleGraph& h : family)
      if (subgraph_contains(g, h, Edge{u, v})) {
        hit = true;
        break;
      }
    g.remove_edge(u, v);
    return hit;
  };

  // live = undecided edges >= ei that do not close a forbidden copy against
  // the current graph; deadness is monotone so dropping them is safe
  std::function<void(int, int, uint64_t)> rec = [&](int ei, int count, uint64_t live) {
    res.nodes++;
    for (;;) {
      while (ei < E && !((live >> ei) & 1)) ++ei;
      if (count + __builtin_popcountll(live) <= res.value) return;
      if (ei == E) {
        res.value = count;
        res.witness = g;
        return;
      }
      auto [u, v] = es[ei];
      g.add_edge(u, v);
      uint64_t sub = 0;
      for (int e2 = ei + 1; e2 < E; ++e2)
        if (((live >> e2) & 1) && !completes(e2)) sub |= 1ULL << e2;
      rec(ei + 1, count + 1, sub);
      g.remove_edge(u, v);
      // exclude branch: same graph, this edge gone from the live set
      live &= ~(1ULL << ei);
      ++ei;
    }
  };
  if (E > 63) throw CapError("ex: too many edges");

  // prime the incumbent with greedy passes so the search only proves optimality
  Rng greedy_rng(0x9e0c5eed);
  for (int pass = 0; pass < 16; ++pass) {
    std::vector<int> order(E);
    for (int e = 0; e < E; ++e) order[e] = e;
    if (pass > 0) greedy_rng.shuffle(order);
    SimpleGraph cand(n);
    int count = 0;
    for (int e : order) {
      auto [u, v] = es[e];
      cand.add_edge(u, v);
      bool hit = false;
      for (const SimpleGraph& h : family)
        if (subgraph_contains(cand, h, Edge{u, v})) {
          hit = true;
          break;
        }
      if (hit)
        cand.remove_edge(u, v);
      else
        ++count;
    }
    if (count > res.value) {
      res.value = count;
      res.witness = cand;
    }
  }

  uint64_t live0 = 0;
  for (int e = 0; e < E; ++e)
    if (!completes(e)) live0 |= 1ULL << e;
  rec(0, 0, live0);
  return res;
}

std::vector<SimpleGraph> cycle_family(int k_max) {
  std::vector<SimpleGraph> fam;
  for (int k = 3; k <= k_max; ++k) fam.push_back(cycle_graph(k));
  return fam;
}

ExResult zarankiewicz_small(int m, int n, int s, int t) {
  if (m < 1 || n < 1 || s < 1 || t < 1) throw InputError("zex: positive sizes required");
  if (m > 7 || n > 7) throw CapError("zex: sides capped at 7");

  ExResult res;
  res.witness = SimpleGraph(m + n);
  std::vector<uint32_t> rows(m, 0);

  // rows in non-increasing mask order; a K_{s,t} needs s rows sharing t columns
  std::function<bool(const std::vector<int>&, uint32_t, int, int)> bad_combo =
      [&](const std::vector<int>& chosen, uint32_t inter, int need, int from) -> bool {
    if (__builtin_popcount(inter) < t) return false;
    if (need == 0) return true;
    for (int i = from; i < (int)chosen.size(); ++i)
      if (bad_combo(chosen, inter & rows[chosen[i]], need - 1, i + 1)) return true;
    return false;
  };

  std::vector<int> above;
  std::function<void(int, int, uint32_t)> rec = [&](int i, int count, uint32_t prev) {
    res.nodes++;
    if (count + (m - i) * n <= res.value) return;
    if (i == m) {
      if (count > res.value) {
        res.value = count;
        SimpleGraph w(m + n);
        for (int r = 0; r < m; ++r)
          for (int col = 0; col < n; ++col)
            if ((rows[r] >> col) & 1u) w.add_edge(r, m + col);
        res.witness = w;
      }
      return;
    }
    for (uint32_t mask = prev; ; --mask) {
      rows[i] = mask;
      bool ok = true;
      if (s == 1) {
        ok = __builtin_popcount(mask) < t;
      } else {
        above.clear();
        for (int r = 0; r < i; ++r) above.push_back(r);
        if (bad_combo(above, mask, s - 1, 0)) ok = false;
      }
      if (ok) rec(i + 1, count + __builtin_popcount(mask), mask);
      if (mask == 0) break;
    }
    rows[i] = 0;
  };
  rec(0, 0, (1u << n) - 1);
  return res;
}

// ---- red-blue forest check ----------------------------------------------

RedBlueResult check_redblue(const SimpleGraph& t1, const SimpleGraph& t2,
                            bool exhaustive_subsets) {
  auto tree_ok = [](const SimpleGraph& t) {
    return t.edge_count() == t.n - 1 && is_connected(t);
  };
  if (t1.n < 3 || t2.n < 3 || !tree_ok(t1) || !tree_ok(t2))
    throw InputError("redblue: need trees on at least 3 vertices");
  SimpleGraph j = join_graphs(t1, t2);
  int E = j.edge_count();
  if (E > 24) throw CapError("redblue: join exceeds 24 edges");
  if (exhaustive_subsets && E > 20) throw CapError("redblue: exhaustive mode capped at 20 edges");

  int s = t1.n, t = t2.n, N = s + t;
  std::vector<Edge> es = j.edges();

  std::vector<uint32_t> sides;
  for (uint32_t a = 0; a < (1u << N); ++a)
    if (__builtin_popcount(a) == s) sides.push_back(a);

  auto has_structure = [&](const SimpleGraph& g) {
    if (has_odd_cycle(g)) return true;
    for (uint32_t A : sides) {
      int missing = 0;
      for (int u = 0; u < N && missing <= 1; ++u) {
        if (!((A >> u) & 1u)) continue;
        for (int v = 0; v < N; ++v) {
          if ((A >> v) & 1u) continue;
          if (!g.has_edge(u, v)) missing++;
        }
      }
      if (missing <= 1) return true;
    }
    return false;
  };

  RedBlueResult res;
  res.claim_holds = true;

  auto consider = [&](const std::vector<int>& picked) {
    SimpleGraph f(N), rest = j;
    for (int ei : picked) {
      f.add_edge(es[ei].first, es[ei].second);
      rest.remove_edge(es[ei].first, es[ei].second);
    }
    if (!is_forest(f)) return true;
    res.checked++;
    if (!has_structure(rest)) {
      res.claim_holds = false;
      res.bad_forest = f;
      return false;
    }
    return true;
  };

  if (exhaustive_subsets) {
    for (uint32_t sub = 0; sub < (1u << E); ++sub) {
      std::vector<int> picked;
      for (int e = 0; e < E; ++e)
        if ((sub >> e) & 1u) picked.push_back(e);
      if (!consider(picked)) return res;
    }
  } else {
    // maximal forests suffice: the join is connected, so spanning trees
    std::vector<int> picked;
    std::function<bool(int)> combo = [&](int from) {
      if ((int)picked.size() == N - 1) return consider(picked);
      if (E - from < N - 1 - (int)picked.size()) return true;
      for (int e = from; e < E; ++e) {
        picked.push_back(e);
        if (!combo(e + 1)) return false;
        picked.pop_back();
      }
      return true;
    };
    combo(0);
  }
  return res;
}

}  // namespace starcol
