#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <set>
#include <vector>

#include "doctest.h"
#include "starcol/graph.hpp"
#include "starcol/rng.hpp"
#include "starcol/tournament.hpp"

using namespace starcol;

namespace {

Tournament from_mask(int n, uint32_t mask) {
  Tournament t(n);
  int bit = 0;
  for (int v = 0; v < n; ++v)
    for (int u = 0; u < v; ++u, ++bit) {
      if ((mask >> bit) & 1u)
        t.set_arc(u, v);
      else
        t.set_arc(v, u);
    }
  return t;
}

// directed k-cycle by plain DFS, no cleverness
bool brute_has_ck(const Tournament& t, int k) {
  std::vector<int> path;
  std::vector<bool> used(t.n, false);
  auto rec = [&](auto&& self, int at) -> bool {
    if ((int)path.size() == k) return t.arc(at, path[0]);
    for (int v = 0; v < t.n; ++v) {
      if (used[v] || !t.arc(at, v)) continue;
      if (v < path[0]) continue;  // rotation: start at the minimum
      used[v] = true;
      path.push_back(v);
      if (self(self, v)) return true;
      path.pop_back();
      used[v] = false;
    }
    return false;
  };
  for (int s = 0; s < t.n; ++s) {
    path = {s};
    std::fill(used.begin(), used.end(), false);
    used[s] = true;
    if (rec(rec, s)) return true;
  }
  return false;
}

bool path_ok(const Tournament& t, const std::vector<int>& p) {
  if ((int)p.size() != t.n) return false;
  std::set<int> seen(p.begin(), p.end());
  if ((int)seen.size() != t.n) return false;
  for (size_t i = 0; i + 1 < p.size(); ++i)
    if (!t.arc(p[i], p[i + 1])) return false;
  return true;
}

bool is_strong(const Tournament& t) { return strong_components(t).size() == 1; }

}  // namespace

TEST_CASE("tournament arcs are antisymmetric") {
  Rng rng(5);
  Tournament t = random_tournament(7, rng);
  for (int v = 0; v < 7; ++v) {
    CHECK(!t.arc(v, v));
    for (int u = 0; u < v; ++u) CHECK(t.arc(u, v) != t.arc(v, u));
    CHECK(t.out_degree(v) + t.in_degree(v) == 6);
  }
  CHECK_THROWS_AS(Tournament(32), InputError);
}

TEST_CASE("transitive tournament orients low to high") {
  Tournament t = transitive_tournament(6);
  for (int v = 0; v < 6; ++v)
    for (int u = 0; u < v; ++u) CHECK(t.arc(u, v));
}

TEST_CASE("random tournaments are seed-deterministic") {
  Rng a(99), b(99), c(100);
  CHECK(random_tournament(8, a).out == random_tournament(8, b).out);
  Rng a2(99);
  CHECK(random_tournament(8, a2).out != random_tournament(8, c).out);
}

TEST_CASE("strong components come in condensation order") {
  // transitive: n singleton components, sorted
  auto comps = strong_components(transitive_tournament(5));
  REQUIRE(comps.size() == 5);
  for (int i = 0; i < 5; ++i) CHECK(comps[i] == std::vector<int>{i});

  // 3-cycle is one component
  Tournament c3(3);
  c3.set_arc(0, 1);
  c3.set_arc(1, 2);
  c3.set_arc(2, 0);
  CHECK(strong_components(c3).size() == 1);

  // every arc between different components points forward
  Rng rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    Rng sub = rng.split();
    Tournament t = random_tournament(8, sub);
    auto cs = strong_components(t);
    std::vector<int> comp_of(t.n, -1);
    int total = 0;
    for (size_t i = 0; i < cs.size(); ++i)
      for (int v : cs[i]) {
        comp_of[v] = (int)i;
        ++total;
      }
    CHECK(total == t.n);
    for (int v = 0; v < t.n; ++v)
      for (int u = 0; u < t.n; ++u)
        if (u != v && t.arc(u, v)) CHECK(comp_of[u] <= comp_of[v]);
  }
}

TEST_CASE("redei path exists in every tournament up to n=5") {
  for (int n = 1; n <= 5; ++n) {
    int bits = num_edges(n);
    for (uint32_t mask = 0; mask < (1u << bits); ++mask) {
      Tournament t = from_mask(n, mask);
      CHECK(path_ok(t, redei_hamilton_path(t)));
    }
  }
}

TEST_CASE("redei path on random tournaments up to n=10") {
  Rng rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    Rng sub = rng.split();
    int n = 2 + (int)sub.below(9);
    Tournament t = random_tournament(n, sub);
    CHECK(path_ok(t, redei_hamilton_path(t)));
  }
}

TEST_CASE("moon cycles cover every length on strong tournaments") {
  int strong_seen = 0;
  for (int n = 3; n <= 5; ++n) {
    int bits = num_edges(n);
    for (uint32_t mask = 0; mask < (1u << bits); ++mask) {
      Tournament t = from_mask(n, mask);
      if (!is_strong(t)) continue;
      ++strong_seen;
      auto cycles = moon_cycles(t);
      CHECK((int)cycles.size() == n - 2);
      for (int len = 3; len <= n; ++len) {
        REQUIRE(cycles.count(len));
        const std::vector<int>& cyc = cycles[len];
        REQUIRE((int)cyc.size() == len);
        CHECK(std::set<int>(cyc.begin(), cyc.end()).size() == (size_t)len);
        for (int i = 0; i < len; ++i) CHECK(t.arc(cyc[i], cyc[(i + 1) % len]));
      }
    }
  }
  CHECK(strong_seen > 0);
  CHECK_THROWS_AS(moon_cycles(transitive_tournament(4)), InputError);
}

TEST_CASE("ck detection agrees with brute force") {
  Rng rng(31);
  for (int trial = 0; trial < 120; ++trial) {
    Rng sub = rng.split();
    int n = 3 + (int)sub.below(4);  // 3..6
    Tournament t = random_tournament(n, sub);
    for (int k = 3; k <= n; ++k) {
      CycleWitness w = is_ck_free(t, k);
      CHECK(w.free == !brute_has_ck(t, k));
      if (!w.free) {
        REQUIRE((int)w.cycle.size() == k);
        for (int i = 0; i < k; ++i) CHECK(t.arc(w.cycle[i], w.cycle[(i + 1) % k]));
      }
    }
  }
}

TEST_CASE("ck-free construction delivers what it promises") {
  for (int k = 3; k <= 5; ++k)
    for (int n = 3; n <= 8; ++n) {
      Tournament t = find_ck_free_tournament(n, k, false);
      CHECK(is_ck_free(t, k).free);
    }
  // nontrivial demands some directed cycle, impossible below k=4
  CHECK_THROWS_AS(find_ck_free_tournament(5, 3, true), InputError);
  Tournament t = find_ck_free_tournament(6, 4, true);
  CHECK(is_ck_free(t, 4).free);
  CHECK(!is_ck_free(t, 3).free);
}

TEST_CASE("random ck-free sampling is deterministic and correct") {
  for (uint64_t seed : {0ULL, 1ULL, 12345ULL}) {
    Rng a(seed), b(seed);
    Tournament x = random_ck_free_tournament(6, 4, a);
    Tournament y = random_ck_free_tournament(6, 4, b);
    CHECK(x.out == y.out);
    CHECK(is_ck_free(x, 4).free);
  }
}
