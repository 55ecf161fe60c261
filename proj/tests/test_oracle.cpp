#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "doctest.h"
#include "starcol/colouring.hpp"
#include "starcol/constructions.hpp"
#include "starcol/detect.hpp"
#include "starcol/graph.hpp"
#include "starcol/oracle.hpp"

using namespace starcol;

namespace {

// set partitions of the edge list via restricted growth strings, filtered to
// star classes; deliberately ignorant of how the library enumerates
uint64_t brute_count(int n) {
  std::vector<Edge> es;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u) es.push_back({u, v});
  int m = (int)es.size();
  if (m == 0) return 1;
  std::vector<int> label(m, 0);
  uint64_t good = 0;
  auto star_ok = [&](int groups) {
    for (int g = 0; g < groups; ++g) {
      uint32_t common = ~0u;
      int sz = 0;
      for (int e = 0; e < m; ++e)
        if (label[e] == g) {
          common &= (1u << es[e].first) | (1u << es[e].second);
          ++sz;
        }
      if (sz > 0 && common == 0) return false;
    }
    return true;
  };
  auto rec = [&](auto&& self, int e, int used) -> void {
    if (e == m) {
      if (star_ok(used)) ++good;
      return;
    }
    for (int g = 0; g <= used; ++g) {
      label[e] = g;
      self(self, e + 1, used + (g == used ? 1 : 0));
    }
  };
  rec(rec, 0, 0);
  return good;
}

bool naive_has_rainbow(const StarColouring& c, const SimpleGraph& pattern) {
  ColouringIndex ix = ColouringIndex::build(c);
  if (pattern.n > c.n) return false;
  std::vector<int> pick(pattern.n);
  std::vector<bool> used(c.n, false);
  auto rec = [&](auto&& self, int at) -> bool {
    if (at == pattern.n) {
      std::set<int> cols;
      for (int v = 0; v < pattern.n; ++v)
        for (int u = 0; u < v; ++u)
          if (pattern.has_edge(u, v))
            if (!cols.insert(ix.class_of(pick[u], pick[v])).second) return false;
      return true;
    }
    for (int h = 0; h < c.n; ++h) {
      if (used[h]) continue;
      used[h] = true;
      pick[at] = h;
      if (self(self, at + 1)) {
        used[h] = false;
        return true;
      }
      used[h] = false;
    }
    return false;
  };
  return rec(rec, 0);
}

bool avoids_family(const StarColouring& c, const std::vector<SimpleGraph>& fam) {
  for (const SimpleGraph& h : fam)
    if (naive_has_rainbow(c, h)) return false;
  return true;
}

// maximum colour count over the full enumeration, the slow way
int brute_arstar(int n, const std::vector<SimpleGraph>& fam) {
  int best = -1;
  enumerate_star_colourings(n, false, [&](const StarColouring& c) {
    if (c.colour_count() > best && avoids_family(c, fam))
      best = c.colour_count();
  });
  return best;
}

// all graphs on n <= 6 vertices, checked against the family directly
int brute_ex(int n, const std::vector<SimpleGraph>& fam) {
  std::vector<Edge> es;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u) es.push_back({u, v});
  int E = (int)es.size();
  int best = 0;
  for (uint32_t mask = 0; mask < (1u << E); ++mask) {
    if (__builtin_popcount(mask) <= best) continue;
    SimpleGraph g(n);
    for (int e = 0; e < E; ++e)
      if ((mask >> e) & 1) g.add_edge(es[e].first, es[e].second);
    bool bad = false;
    for (const SimpleGraph& h : fam)
      if (subgraph_contains(g, h)) {
        bad = true;
        break;
      }
    if (!bad) best = __builtin_popcount(mask);
  }
  return best;
}

// n = 7 specialised: max edges with no cycle of length <= L, bit tricks only
int brute_girth7(int L) {
  const int n = 7;
  std::vector<Edge> es;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u) es.push_back({u, v});
  const int E = 21;
  int best = 0;
  for (uint32_t mask = 0; mask < (1u << E); ++mask) {
    if (__builtin_popcount(mask) <= best) continue;
    uint32_t adj[n] = {0};
    for (int e = 0; e < E; ++e)
      if ((mask >> e) & 1) {
        adj[es[e].first] |= 1u << es[e].second;
        adj[es[e].second] |= 1u << es[e].first;
      }
    bool bad = false;
    for (int v = 0; v < n && !bad; ++v)
      for (int u = 0; u < v; ++u)
        if (((adj[u] >> v) & 1) && (adj[u] & adj[v])) {
          bad = true;
          break;
        }
    if (!bad && L >= 4)
      for (int v = 0; v < n && !bad; ++v)
        for (int u = 0; u < v; ++u)
          if (__builtin_popcount(adj[u] & adj[v]) >= 2) {
            bad = true;
            break;
          }
    if (!bad && L >= 5)
      for (int b = 0; b < n && !bad; ++b)
        for (int a = 0; a < b && !bad; ++a) {
          if (!((adj[a] >> b) & 1)) continue;
          for (int p = 0; p < n && !bad; ++p) {
            if (p == b || !((adj[a] >> p) & 1)) continue;
            for (int r = 0; r < n; ++r) {
              if (r == a || r == p || !((adj[b] >> r) & 1)) continue;
              uint32_t mid = adj[p] & adj[r] &
                             ~((1u << a) | (1u << b) | (1u << p) | (1u << r));
              if (mid) {
                bad = true;
                break;
              }
            }
          }
        }
    if (!bad) best = __builtin_popcount(mask);
  }
  return best;
}

OracleOptions opts(int max_n = 7, int threads = 1) {
  OracleOptions o;
  o.max_n = max_n;
  o.threads = threads;
  return o;
}

}  // namespace

TEST_CASE("enumeration count matches the restricted-growth brute force") {
  for (int n = 2; n <= 4; ++n) {
    uint64_t brute = brute_count(n);
    CHECK(count_star_colourings(n) == brute);
    uint64_t walked = enumerate_star_colourings(n, false, [](const StarColouring&) {});
    CHECK(walked == brute);
  }
}

TEST_CASE("enumeration walk agrees with the closed-form count") {
  for (int n = 2; n <= 6; ++n) {
    uint64_t walked = 0;
    enumerate_star_colourings(n, false, [&](const StarColouring&) { ++walked; });
    CHECK(walked == count_star_colourings(n));
  }
  CHECK_THROWS_AS(count_star_colourings(8), CapError);
}

TEST_CASE("every enumerated colouring is valid and distinct") {
  for (int n = 3; n <= 5; ++n) {
    std::set<std::vector<std::vector<Edge>>> seen;
    enumerate_star_colourings(n, false, [&](const StarColouring& c) {
      CHECK(validate_colouring(c).ok);
      auto p = c.classes;
      for (auto& cls : p) std::sort(cls.begin(), cls.end());
      std::sort(p.begin(), p.end());
      CHECK(seen.insert(p).second);
    });
    CHECK(seen.size() == count_star_colourings(n));
  }
}

TEST_CASE("canonical enumeration is the quotient by isomorphism") {
  for (int n = 3; n <= 5; ++n) {
    std::set<std::string> keys;
    enumerate_star_colourings(n, false,
                              [&](const StarColouring& c) { keys.insert(canonical_key(c).key); });
    uint64_t canonical = enumerate_star_colourings(n, true, [&](const StarColouring& c) {
      CHECK(keys.count(canonical_key(c).key));
    });
    CHECK(canonical == keys.size());
  }
}

TEST_CASE("oracle equals the enumeration maximum on small instances") {
  struct Case {
    int n;
    std::vector<SimpleGraph> fam;
  };
  std::vector<Case> cases = {
      {4, {cycle_graph(3)}},     {5, {cycle_graph(3)}},
      {4, {cycle_graph(4)}},     {5, {cycle_graph(4)}},
      {5, {cycle_graph(5)}},     {4, {complete_graph(4)}},
      {5, {complete_graph(4)}},  {4, {complete_minus(4)}},
      {5, {complete_minus(4)}},  {5, cycle_family(4)},
      {5, {complete_graph(5)}},  {5, {path_graph(3)}},
      {5, {star_graph(3)}},      {5, {matching_graph(2)}},
  };
  for (const Case& cs : cases) {
    int brute = brute_arstar(cs.n, cs.fam);
    auto res = star_anti_ramsey_family(cs.n, cs.fam, opts());
    if (brute < 0) {
      CHECK(!res.has_value());
    } else {
      REQUIRE(res.has_value());
      CHECK(res->value == brute);
    }
  }
}

TEST_CASE("oracle rejects degenerate inputs") {
  // a single edge is rainbow in every colouring
  CHECK(!star_anti_ramsey_family(4, {path_graph(1)}, opts()).has_value());
  CHECK_THROWS_AS(star_anti_ramsey(4, path_graph(1), opts()), InputError);
  CHECK_THROWS_AS(star_anti_ramsey(9, complete_graph(4), opts()), CapError);
  CHECK_THROWS_AS(star_anti_ramsey_family(4, {}, opts()), InputError);
  CHECK_THROWS_AS(star_anti_ramsey_family(4, {SimpleGraph(3)}, opts()), InputError);
}

TEST_CASE("oracle witnesses are extremal and avoid the pattern") {
  OracleOptions o = opts();
  o.collect_witnesses = true;
  OracleResult res = star_anti_ramsey(5, complete_graph(4), o);
  CHECK(res.value == 7);
  REQUIRE(!res.witnesses.empty());
  std::set<std::string> keys;
  for (const StarColouring& w : res.witnesses) {
    CHECK(validate_colouring(w).ok);
    CHECK(w.colour_count() == 7);
    CHECK(!naive_has_rainbow(w, complete_graph(4)));
    keys.insert(canonical_key(w).key);
  }
  CHECK(keys.size() == res.witnesses.size());
}

TEST_CASE("extremal census is complete up to isomorphism") {
  for (const SimpleGraph& pattern : {cycle_graph(3), cycle_graph(4), complete_minus(4)}) {
    for (int n = std::max(3, pattern.n); n <= 5; ++n) {
      // independent argmax set via the raw enumeration
      int best = brute_arstar(n, {pattern});
      std::set<std::string> expect;
      enumerate_star_colourings(n, false, [&](const StarColouring& c) {
        if (c.colour_count() == best && !naive_has_rainbow(c, pattern))
          expect.insert(canonical_key(c).key);
      });
      std::vector<StarColouring> got = extremal_colourings(n, pattern, opts());
      std::set<std::string> keys;
      for (const StarColouring& w : got) keys.insert(canonical_key(w).key);
      CHECK(keys == expect);
    }
  }
}

TEST_CASE("extremal colourings pass their structure checkers") {
  for (int n = 3; n <= 5; ++n)
    for (const StarColouring& w : extremal_colourings(n, cycle_graph(3), opts()))
      CHECK(check_structure_ck(w, 3));
  for (int n = 4; n <= 5; ++n) {
    for (const StarColouring& w : extremal_colourings(n, cycle_graph(4), opts()))
      CHECK(check_structure_ck(w, 4));
    for (const StarColouring& w : extremal_colourings(n, complete_minus(4), opts()))
      CHECK(check_structure_k4minus(w));
  }
}

TEST_CASE("oracle is deterministic across thread counts") {
  OracleOptions a = opts(7, 1);
  a.collect_witnesses = true;
  OracleOptions b = opts(7, 3);
  b.collect_witnesses = true;
  OracleResult ra = star_anti_ramsey(5, complete_minus(4), a);
  OracleResult rb = star_anti_ramsey(5, complete_minus(4), b);
  CHECK(ra.value == rb.value);
  CHECK(ra.stats.nodes == rb.stats.nodes);
  CHECK(ra.stats.leaves == rb.stats.leaves);
  CHECK(ra.stats.pruned_bound == rb.stats.pruned_bound);
  CHECK(ra.stats.pruned_rainbow == rb.stats.pruned_rainbow);
  REQUIRE(ra.witnesses.size() == rb.witnesses.size());
  for (size_t i = 0; i < ra.witnesses.size(); ++i)
    CHECK(ra.witnesses[i].classes == rb.witnesses[i].classes);
}

TEST_CASE("nsar values on small forests") {
  CHECK(nsar(path_graph(1), 7, opts()) == 2);
  CHECK(nsar(path_graph(2), 7, opts()) == 3);
  CHECK(nsar(path_graph(3), 7, opts()) == 4);
  CHECK(nsar(star_graph(3), 7, opts()) == 4);
  CHECK(nsar(matching_graph(2), 7, opts()) == 4);
  CHECK_THROWS_AS(nsar(cycle_graph(3), 7, opts()), InputError);
  CHECK_THROWS_AS(nsar(path_graph(2), 9, opts()), CapError);
}

TEST_CASE("nsar is the least order that forces the forest") {
  for (int t = 1; t <= 3; ++t) {
    int val = *nsar(path_graph(t), 7, opts());
    bool found_avoider = false;
    if (val > 2)
      enumerate_star_colourings(val - 1, false, [&](const StarColouring& c) {
        if (!naive_has_rainbow(c, path_graph(t))) found_avoider = true;
      });
    CHECK((val == 2 || found_avoider));
    bool all_hit = true;
    enumerate_star_colourings(val, false, [&](const StarColouring& c) {
      if (!naive_has_rainbow(c, path_graph(t))) all_hit = false;
    });
    CHECK(all_hit);
  }
}

TEST_CASE("tuple predicates agree with a literal re-implementation") {
  // k4 extremal two-part colourings have a vertex centring three stars
  StarColouring c = k4_extremal_two_part(5, 2);
  CoverSearchResult r = find_covering_tuple(c);
  REQUIRE(r.tuple.has_value());
  const CoverTuple& t = *r.tuple;
  TupleReport rep = check_tuple(c, t);
  CHECK(rep.good());
  CHECK(rep.covers);

  ColouringIndex ix = ColouringIndex::build(c);
  int n = c.n;
  uint32_t all = (1u << n) - 1;
  CHECK((t.w_mask | t.y_mask | t.z_mask) == all);
  CHECK(__builtin_popcount(t.w_mask) >= 1);
  CHECK(__builtin_popcount(t.y_mask) >= 2);
  CHECK(__builtin_popcount(t.z_mask) >= 2);
  CHECK(__builtin_popcount(t.w_mask) + __builtin_popcount(t.y_mask) +
            __builtin_popcount(t.z_mask) ==
        n + 2);
  auto colours_in = [&](uint32_t mask) {
    std::set<int> cols;
    for (int v = 0; v < n; ++v)
      for (int u = 0; u < v; ++u)
        if (((mask >> v) & 1) && ((mask >> u) & 1)) cols.insert(ix.class_of(u, v));
    return cols;
  };
  // colours inside Y u Z are the colours inside Y, inside Z, plus c_z
  std::set<int> b = colours_in(t.y_mask);
  for (int col : colours_in(t.z_mask)) b.insert(col);
  b.insert(t.c_z);
  CHECK(colours_in(t.y_mask | t.z_mask) == b);
  // x's edges into {y,z} u W are rainbow for every choice of y and z
  for (int y = 0; y < n; ++y) {
    if (!((t.y_mask >> y) & 1) || y == t.x) continue;
    for (int z = 0; z < n; ++z) {
      if (!((t.z_mask >> z) & 1) || z == t.v_star) continue;
      std::set<int> cols;
      int cnt = 0;
      uint32_t targets = (t.w_mask | (1u << y) | (1u << z)) & ~(1u << t.x);
      for (int u = 0; u < n; ++u)
        if ((targets >> u) & 1) {
          cols.insert(ix.class_of(t.x, u));
          ++cnt;
        }
      CHECK((int)cols.size() == cnt);
    }
  }
  // the cover: every colour lives inside W, inside Y, inside Z, or is c_z
  std::set<int> cover = b;
  for (int col : colours_in(t.w_mask)) cover.insert(col);
  CHECK(cover == colours_in(all));
}

TEST_CASE("covering tuple search demands its preconditions") {
  // rainbow K5 contains a rainbow K4
  CHECK_THROWS_AS(find_covering_tuple(rainbow_complete(5)), InputError);
  // lexical never centres three stars at one vertex
  CHECK_THROWS_AS(find_covering_tuple(lexical_colouring(5)), InputError);
  CHECK_THROWS_AS(find_covering_tuple(k4_extremal_two_part(8, 4)), CapError);
}

TEST_CASE("covering tuple exists for every eligible K5 colouring") {
  // exhaustive half of the sweep; K6 happens in acceptance
  int eligible = 0;
  enumerate_star_colourings(5, false, [&](const StarColouring& c) {
    bool busy = false;
    for (int v = 0; v < 5 && !busy; ++v)
      if (star_count_at(c, v).total >= 3) busy = true;
    if (!busy || naive_has_rainbow(c, complete_graph(4))) return;
    ++eligible;
    CoverSearchResult r = find_covering_tuple(c);
    REQUIRE(r.tuple.has_value());
    TupleReport rep = check_tuple(c, *r.tuple);
    CHECK(rep.good());
    CHECK(rep.covers);
  });
  CHECK(eligible > 0);
}

TEST_CASE("ex_small agrees with the bitmask brute force") {
  std::vector<std::vector<SimpleGraph>> fams = {
      {cycle_graph(3)},    {cycle_graph(4)},  {complete_graph(4)},
      cycle_family(4),     cycle_family(5),   {complete_bipartite(2, 2)}};
  for (const auto& fam : fams)
    for (int n = 2; n <= 6; ++n)
      CHECK(ex_small(n, fam).value == brute_ex(n, fam));
  for (int n = 3; n <= 8; ++n)
    CHECK(ex_small(n, {cycle_graph(3)}).value == n * n / 4);
  CHECK(ex_small(7, cycle_family(4)).value == brute_girth7(4));
  CHECK(ex_small(7, cycle_family(5)).value == brute_girth7(5));
  ExResult r = ex_small(7, cycle_family(4));
  CHECK(r.witness.edge_count() == r.value);
  CHECK(!subgraph_contains(r.witness, cycle_graph(3)));
  CHECK(!subgraph_contains(r.witness, cycle_graph(4)));
  CHECK_THROWS_AS(ex_small(11, {cycle_graph(3)}), CapError);
  CHECK_THROWS_AS(ex_small(4, {SimpleGraph(3)}), InputError);
}

TEST_CASE("zarankiewicz matches the bitmask brute force") {
  auto brute = [](int m, int n, int s, int t) {
    int best = 0;
    for (uint32_t mask = 0; mask < (1u << (m * n)); ++mask) {
      std::vector<uint32_t> rows(m, 0);
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j)
          if ((mask >> (i * n + j)) & 1) rows[i] |= 1u << j;
      bool bad = false;
      auto rec = [&](auto&& self, int from, int depth, uint32_t inter) -> void {
        if (bad) return;
        if (depth == s) {
          if (__builtin_popcount(inter) >= t) bad = true;
          return;
        }
        for (int i = from; i < m; ++i) self(self, i + 1, depth + 1, inter & rows[i]);
      };
      rec(rec, 0, 0, ~0u);
      if (!bad) best = std::max(best, __builtin_popcount(mask));
    }
    return best;
  };
  for (auto [s, t] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}})
    for (int m = 2; m <= 4; ++m)
      for (int n = 2; n <= 4; ++n)
        CHECK(zarankiewicz_small(m, n, s, t).value == brute(m, n, s, t));
  // known diagonal values for forbidden 2x2
  int z22[] = {0, 1, 3, 6, 9, 12, 16};
  for (int n = 1; n <= 6; ++n) CHECK(zarankiewicz_small(n, n, 2, 2).value == z22[n]);
  CHECK_THROWS_AS(zarankiewicz_small(8, 3, 2, 2), CapError);
  CHECK_THROWS_AS(zarankiewicz_small(0, 3, 2, 2), InputError);
}

TEST_CASE("zex sandwich and the deletion lower bound") {
  for (auto [s, t] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}})
    for (int n = 2; n <= 6; ++n) {
      int ex = ex_small(n, {complete_bipartite(s, t)}).value;
      int z = zarankiewicz_small(n, n, s, t).value;
      CHECK(2 * ex <= z);
      CHECK(z <= 4 * ex);
    }
  // dropping to n-1 and deleting a pattern vertex costs at most n-1 colours
  int lhs = star_anti_ramsey(5, complete_graph(4), opts()).value;
  auto rhs = star_anti_ramsey_family(4, vertex_deleted_family(complete_graph(4)), opts());
  REQUIRE(rhs.has_value());
  CHECK(lhs >= 4 + rhs->value);
  CHECK(lhs == 7);
  CHECK(rhs->value == 3);
}

TEST_CASE("red-blue forests force the tree pair") {
  std::vector<SimpleGraph> trees3 = {path_graph(2)};
  std::vector<SimpleGraph> trees4 = {path_graph(3), star_graph(3)};
  std::vector<std::pair<SimpleGraph, SimpleGraph>> pairs;
  for (const auto& a : trees3) {
    pairs.push_back({a, a});
    for (const auto& b : trees4) pairs.push_back({a, b});
  }
  for (const auto& a : trees4)
    for (const auto& b : trees4) pairs.push_back({a, b});
  for (const auto& [a, b] : pairs) {
    RedBlueResult r = check_redblue(a, b);
    CHECK(r.claim_holds);
    CHECK(r.checked > 0);
  }
  // spanning-tree mode and the full subset sweep agree on the smallest pair
  RedBlueResult fast = check_redblue(path_graph(2), path_graph(2), false);
  RedBlueResult slow = check_redblue(path_graph(2), path_graph(2), true);
  CHECK(fast.claim_holds == slow.claim_holds);
  CHECK(slow.checked >= fast.checked);
  CHECK_THROWS_AS(check_redblue(cycle_graph(3), path_graph(2)), InputError);
  CHECK_THROWS_AS(check_redblue(path_graph(1), path_graph(2)), InputError);
}

TEST_CASE("structure checkers reject near misses") {
  // six single-edge classes cannot sit inside a two-vertex base
  CHECK(!check_structure_ck(rainbow_complete(4), 3));
  StarColouring c = cycle_extremal(7, 5);
  CHECK(check_structure_ck(c, 5));
  CHECK(!check_structure_ck(c, 4));
  CHECK(!check_structure_ck(c, 3));
  CHECK(!check_structure_ck(lexical_colouring(5), 2));
  CHECK(!check_structure_k4minus(rainbow_complete(4)));
  StarColouring bad;
  bad.n = 3;
  bad.classes = {{{0, 1}}, {{0, 1}, {1, 2}}};
  CHECK_THROWS_AS(check_structure_ck(bad, 3), InputError);
  CHECK_THROWS_AS(check_structure_k4minus(bad), InputError);
}
