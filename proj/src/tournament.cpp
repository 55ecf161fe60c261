#include "starcol/tournament.hpp"

#include <algorithm>
#include <numeric>

namespace starcol {

Tournament transitive_tournament(int n) {
  Tournament t(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) t.set_arc(u, v);
  return t;
}

Tournament random_tournament(int n, Rng& rng) {
  Tournament t(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      if (rng.coin())
        t.set_arc(u, v);
      else
        t.set_arc(v, u);
    }
  return t;
}

std::vector<std::vector<int>> strong_components(const Tournament& t) {
  // reachability closure is cheap at this scale
  int n = t.n;
  std::vector<uint32_t> reach = t.out;
  for (int v = 0; v < n; ++v) reach[v] |= 1u << v;
  for (int k = 0; k < n; ++k)
    for (int v = 0; v < n; ++v)
      if ((reach[v] >> k) & 1u) reach[v] |= reach[k];

  std::vector<int> comp(n, -1);
  std::vector<std::vector<int>> comps;
  for (int v = 0; v < n; ++v) {
    if (comp[v] != -1) continue;
    std::vector<int> members;
    for (int u = v; u < n; ++u)
      if (comp[u] == -1 && ((reach[v] >> u) & 1u) && ((reach[u] >> v) & 1u)) {
        comp[u] = static_cast<int>(comps.size());
        members.push_back(u);
      }
    comps.push_back(std::move(members));
  }

  // the condensation of a tournament is a transitive tournament, so sorting
  // by "reaches the other" linearises it
  std::sort(comps.begin(), comps.end(),
            [&](const std::vector<int>& a, const std::vector<int>& b) {
              return (reach[a[0]] >> b[0]) & 1u;
            });
  return comps;
}

std::vector<int> redei_hamilton_path(const Tournament& t) {
  std::vector<int> path;
  for (int v = 0; v < t.n; ++v) {
    // insert v at the first spot keeping all arcs forward
    if (path.empty() || t.arc(v, path.front())) {
      path.insert(path.begin(), v);
      continue;
    }
    // first i with path[i] -> v -> path[i+1]; otherwise v loses to everyone
    // before the end and is appended
    bool placed = false;
    for (size_t i = 0; i + 1 < path.size(); ++i) {
      if (t.arc(path[i], v) && t.arc(v, path[i + 1])) {
        path.insert(path.begin() + static_cast<long>(i) + 1, v);
        placed = true;
        break;
      }
    }
    if (!placed) path.push_back(v);
  }
  return path;
}

namespace {

std::vector<int> find_c3(const Tournament& t) {
  for (int a = 0; a < t.n; ++a)
    for (int b = 0; b < t.n; ++b) {
      if (b == a || !t.arc(a, b)) continue;
      for (int c = 0; c < t.n; ++c) {
        if (c == a || c == b) continue;
        if (t.arc(b, c) && t.arc(c, a)) return {a, b, c};
      }
    }
  return {};
}

}  // namespace

std::map<int, std::vector<int>> moon_cycles(const Tournament& t) {
  if (t.n < 3) throw InputError("moon_cycles: need n >= 3");
  if (strong_components(t).size() != 1)
    throw InputError("moon_cycles: tournament is not strong");

  std::map<int, std::vector<int>> out;
  std::vector<int> cyc = find_c3(t);
  out[3] = cyc;

  while (static_cast<int>(cyc.size()) < t.n) {
    int len = static_cast<int>(cyc.size());
    uint32_t on = 0;
    for (int v : cyc) on |= 1u << v;

    // first try to splice an outside vertex between consecutive cycle
    // vertices; scanning guarantees a hit whenever the vertex has both an
    // in- and an out-neighbour on the cycle
    bool extended = false;
    for (int x = 0; x < t.n && !extended; ++x) {
      if ((on >> x) & 1u) continue;
      for (int i = 0; i < len; ++i) {
        int a = cyc[i], b = cyc[(i + 1) % len];
        if (t.arc(a, x) && t.arc(x, b)) {
          cyc.insert(cyc.begin() + i + 1, x);
          extended = true;
          break;
        }
      }
    }

    if (!extended) {
      // every outside vertex either dominates the cycle or is dominated by
      // it; strongness forces an arc from the dominated side back out, and
      // swapping it in for one cycle vertex grows the cycle by one
      int y = -1, z = -1;
      for (int u = 0; u < t.n && y == -1; ++u) {
        if ((on >> u) & 1u) continue;
        bool dominated = true;
        for (int v : cyc)
          if (!t.arc(v, u)) {
            dominated = false;
            break;
          }
        if (!dominated) continue;
        for (int w = 0; w < t.n; ++w) {
          if (w == u || ((on >> w) & 1u) || !t.arc(u, w)) continue;
          bool dominator = true;
          for (int v : cyc)
            if (!t.arc(w, v)) {
              dominator = false;
              break;
            }
          if (dominator) {
            y = u;
            z = w;
            break;
          }
        }
      }
      if (y == -1) throw InputError("moon_cycles: extension failed");
      std::vector<int> next;
      next.push_back(cyc[0]);
      next.push_back(y);
      next.push_back(z);
      for (int i = 2; i < len; ++i) next.push_back(cyc[i]);
      cyc = std::move(next);
    }

    out[static_cast<int>(cyc.size())] = cyc;
  }
  return out;
}

namespace {

bool ck_dfs(const Tournament& t, int root, int k, int v, int depth, uint32_t used,
            std::vector<int>& path) {
  if (depth == k - 1) {
    if (t.arc(v, root)) return true;
    return false;
  }
  for (int w = root + 1; w < t.n; ++w) {
    if ((used >> w) & 1u) continue;
    if (!t.arc(v, w)) continue;
    path.push_back(w);
    if (ck_dfs(t, root, k, w, depth + 1, used | (1u << w), path)) return true;
    path.pop_back();
  }
  return false;
}

}  // namespace

CycleWitness is_ck_free(const Tournament& t, int k) {
  if (k < 3) throw InputError("is_ck_free: need k >= 3");
  CycleWitness w;
  if (k > t.n) return w;
  for (int root = 0; root + k <= t.n + 0; ++root) {
    std::vector<int> path = {root};
    if (ck_dfs(t, root, k, root, 0, 1u << root, path)) {
      w.free = false;
      w.cycle = path;
      return w;
    }
  }
  return w;
}

Tournament find_ck_free_tournament(int n, int k, bool nontrivial) {
  if (k < 3) throw InputError("find_ck_free_tournament: need k >= 3");
  if (n < 1) throw InputError("find_ck_free_tournament: need n >= 1");
  if (!nontrivial) return transitive_tournament(n);
  if (k == 3)
    throw InputError("every tournament with a cycle has a 3-cycle");
  if (n < 3)
    throw InputError("no directed cycle fits in fewer than 3 vertices");
  // a 3-cycle in front of a transitive tail: every directed cycle stays
  // inside the first three vertices
  Tournament t = transitive_tournament(n);
  t.set_arc(1, 0);
  t.set_arc(0, 2);
  t.set_arc(2, 1);
  return t;
}

Tournament random_ck_free_tournament(int n, int k, Rng& rng) {
  for (int attempt = 0; attempt < 2000; ++attempt) {
    Tournament t = random_tournament(n, rng);
    if (is_ck_free(t, k).free) return t;
  }
  // dense orders rarely miss for small n; fall back to a shuffled witness
  Tournament base = k > 3 && n >= 3 ? find_ck_free_tournament(n, k, true)
                                    : transitive_tournament(n);
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  rng.shuffle(perm);
  Tournament t(n);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v && base.arc(u, v)) t.set_arc(perm[u], perm[v]);
  return t;
}

}  // namespace starcol
