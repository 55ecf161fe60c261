#include "starcol/colouring.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <numeric>

namespace starcol {

ValidationReport validate_colouring(const StarColouring& c) {
  ValidationReport rep;
  auto flag = [&](int cls, std::string why) {
    rep.ok = false;
    rep.issues.push_back({cls, std::move(why)});
  };

  if (c.n < 0 || c.n > 31) {
    flag(-1, "order out of range");
    return rep;
  }

  std::vector<int> cover(num_edges(c.n), 0);
  for (int ci = 0; ci < c.colour_count(); ++ci) {
    const auto& cls = c.classes[ci];
    if (cls.empty()) {
      flag(ci, "empty class");
      continue;
    }
    bool in_range = true;
    for (auto [u, v] : cls) {
      if (u < 0 || v < 0 || u >= c.n || v >= c.n || u == v) {
        flag(ci, "edge endpoint out of range");
        in_range = false;
        break;
      }
    }
    if (!in_range) continue;

    for (auto [u, v] : cls) ++cover[edge_id(u, v)];

    // pairwise-intersecting edge sets are stars or triangles; anything with
    // two disjoint edges is a monochromatic matching
    uint32_t common = ~0u;
    for (auto [u, v] : cls) common &= (1u << u) | (1u << v);
    if (common == 0) {
      bool matching = false;
      for (size_t j = 0; j < cls.size() && !matching; ++j)
        for (size_t i = 0; i < j && !matching; ++i) {
          uint32_t a = (1u << cls[i].first) | (1u << cls[i].second);
          uint32_t b = (1u << cls[j].first) | (1u << cls[j].second);
          if ((a & b) == 0) matching = true;
        }
      flag(ci, matching ? "monochromatic matching" : "triangle class");
    }
  }

  for (int v = 1; v < c.n; ++v)
    for (int u = 0; u < v; ++u) {
      int cnt = cover[edge_id(u, v)];
      if (cnt == 0)
        flag(-1, "not a partition: edge {" + std::to_string(u) + "," +
                     std::to_string(v) + "} uncovered");
      else if (cnt > 1)
        flag(-1, "not a partition: edge {" + std::to_string(u) + "," +
                     std::to_string(v) + "} covered " + std::to_string(cnt) +
                     " times");
    }

  if (c.n >= 1 && c.colour_count() < c.n - 1)
    flag(-1, "fewer than n-1 classes");

  return rep;
}

ColouringIndex ColouringIndex::build(const StarColouring& c) {
  ColouringIndex ix;
  ix.n = c.n;
  ix.k = c.colour_count();
  ix.edge_class.assign(num_edges(c.n), -1);
  ix.cls.resize(ix.k);
  for (int ci = 0; ci < ix.k; ++ci) {
    ClassInfo& info = ix.cls[ci];
    std::array<int, 32> deg{};
    for (auto e : c.classes[ci]) {
      auto [u, v] = mk_edge(e.first, e.second);
      if (v >= c.n) throw InputError("colouring: edge endpoint out of range");
      int id = edge_id(u, v);
      if (ix.edge_class[id] != -1) throw InputError("colouring: edge covered twice");
      ix.edge_class[id] = static_cast<int16_t>(ci);
      info.vertices |= (1u << u) | (1u << v);
      ++deg[u];
      ++deg[v];
      ++info.size;
    }
    int best = 0;
    for (int v = 0; v < c.n; ++v) best = std::max(best, deg[v]);
    for (int v = 0; v < c.n; ++v)
      if (deg[v] == best && deg[v] > 0) info.centres |= 1u << v;
  }
  for (int id = 0; id < num_edges(c.n); ++id)
    if (ix.edge_class[id] == -1) throw InputError("colouring: edge uncovered");
  return ix;
}

StarCount star_count_at(const ColouringIndex& ix, int v) {
  if (v < 0 || v >= ix.n) throw InputError("vertex out of range");
  StarCount sc;
  for (const auto& info : ix.cls) {
    if ((info.centres >> v) & 1u) {
      ++sc.total;
      if (info.single()) ++sc.single_edge;
    }
  }
  return sc;
}

StarCount star_count_at(const StarColouring& c, int v) {
  return star_count_at(ColouringIndex::build(c), v);
}

std::vector<int> centre_counts(const ColouringIndex& ix) {
  std::vector<int> out(ix.n, 0);
  for (const auto& info : ix.cls)
    for (int v = 0; v < ix.n; ++v)
      if ((info.centres >> v) & 1u) ++out[v];
  return out;
}

Tournament induced_orientation(const StarColouring& c, TieBreak tb) {
  auto ix = ColouringIndex::build(c);
  Tournament t(c.n);
  for (int ci = 0; ci < ix.k; ++ci) {
    const auto& info = ix.cls[ci];
    uint32_t centres = info.centres;
    int centre;
    if (info.single()) {
      centre = tb == TieBreak::Lower ? __builtin_ctz(centres)
                                     : 31 - __builtin_clz(centres);
    } else {
      if (__builtin_popcount(centres) != 1)
        throw InputError("induced_orientation: class is not a star");
      centre = __builtin_ctz(centres);
    }
    for (auto e : c.classes[ci]) {
      int leaf = e.first == centre ? e.second : e.first;
      t.set_arc(centre, leaf);
    }
  }
  return t;
}

namespace {

std::string hex_key(int n, const std::vector<uint64_t>& masks, bool exact) {
  std::string s = (exact ? "c" : "h") + std::to_string(n) + ":";
  char buf[20];
  for (uint64_t m : masks) {
    snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(m));
    s += buf;
    s += '.';
  }
  return s;
}

}  // namespace

CanonicalKey canonical_key(const StarColouring& c, int exact_cap) {
  auto ix = ColouringIndex::build(c);
  if (c.n <= exact_cap) {
    if (num_edges(c.n) > 64) throw CapError("canonical_key: too many edges for exact mode");
    std::vector<int> perm(c.n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<uint64_t> best;
    bool have = false;
    std::vector<uint64_t> cur(ix.k);
    do {
      for (auto& m : cur) m = 0;
      for (int v = 1; v < c.n; ++v)
        for (int u = 0; u < v; ++u) {
          int ci = ix.edge_class[edge_id(u, v)];
          cur[ci] |= 1ULL << edge_id(perm[u], perm[v]);
        }
      std::sort(cur.begin(), cur.end());
      if (!have || cur < best) {
        best = cur;
        have = true;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return {hex_key(c.n, best, true), true};
  }

  // permutation-invariant digest: sorted class sizes + sorted per-vertex
  // profiles of class degrees
  std::vector<uint64_t> sizes;
  for (const auto& info : ix.cls) sizes.push_back(static_cast<uint64_t>(info.size));
  std::sort(sizes.begin(), sizes.end());
  std::vector<uint64_t> profiles;
  for (int v = 0; v < c.n; ++v) {
    std::vector<int> degs;
    for (int ci = 0; ci < ix.k; ++ci) {
      int d = 0;
      for (auto e : c.classes[ci])
        if (e.first == v || e.second == v) ++d;
      if (d > 0) degs.push_back(d);
    }
    std::sort(degs.begin(), degs.end());
    uint64_t h = 1469598103934665603ULL;
    for (int d : degs) h = (h ^ static_cast<uint64_t>(d)) * 1099511628211ULL;
    profiles.push_back(h);
  }
  std::sort(profiles.begin(), profiles.end());
  sizes.insert(sizes.end(), profiles.begin(), profiles.end());
  return {hex_key(c.n, sizes, false), false};
}

StarColouring induced_subcolouring(const StarColouring& c, const std::vector<int>& keep) {
  std::vector<int> remap(c.n, -1);
  for (size_t i = 0; i < keep.size(); ++i) {
    int v = keep[i];
    if (v < 0 || v >= c.n) throw InputError("induced_subcolouring: vertex out of range");
    remap[v] = static_cast<int>(i);
  }
  StarColouring out;
  out.n = static_cast<int>(keep.size());
  for (const auto& cls : c.classes) {
    std::vector<Edge> kept;
    for (auto [u, v] : cls)
      if (remap[u] != -1 && remap[v] != -1) kept.push_back(mk_edge(remap[u], remap[v]));
    if (!kept.empty()) out.classes.push_back(std::move(kept));
  }
  return out;
}

StarColouring remove_vertex(const StarColouring& c, int v) {
  std::vector<int> keep;
  for (int u = 0; u < c.n; ++u)
    if (u != v) keep.push_back(u);
  return induced_subcolouring(c, keep);
}

StarColouring random_star_colouring(int n, Rng& rng) {
  // random orientation, then each vertex splits its out-edges into groups;
  // every such pair is a star-colouring
  StarColouring c;
  c.n = n;
  Tournament t = random_tournament(n, rng);
  for (int v = 0; v < n; ++v) {
    std::vector<std::vector<Edge>> groups;
    for (int u = 0; u < n; ++u) {
      if (!t.arc(v, u)) continue;
      int g = rng.below_int(static_cast<int>(groups.size()) + 1);
      if (g == static_cast<int>(groups.size())) groups.emplace_back();
      groups[g].push_back(mk_edge(v, u));
    }
    for (auto& g : groups) c.classes.push_back(std::move(g));
  }
  return c;
}

}  // namespace starcol
