#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "starcol/graph.hpp"
#include "starcol/rng.hpp"

namespace starcol {

// Orientation of K_n: exactly one of (u,v),(v,u) is an arc.
struct Tournament {
  int n = 0;
  std::vector<uint32_t> out;  // out[v] = bitmask of heads of arcs leaving v

  Tournament() = default;
  explicit Tournament(int n_) : n(n_), out(n_, 0) {
    if (n_ < 0 || n_ > 31) throw InputError("tournament order out of range");
  }

  bool arc(int u, int v) const { return (out[u] >> v) & 1u; }

  void set_arc(int u, int v) {
    out[u] |= 1u << v;
    out[v] &= ~(1u << u);
  }

  int out_degree(int v) const { return __builtin_popcount(out[v]); }
  int in_degree(int v) const { return n - 1 - out_degree(v); }
};

Tournament transitive_tournament(int n);
Tournament random_tournament(int n, Rng& rng);

// Strongly connected components in condensation order (every arc between
// components points from an earlier component to a later one; for
// tournaments this order is unique).
std::vector<std::vector<int>> strong_components(const Tournament& t);

// Directed Hamilton path, built by the insertion argument.
std::vector<int> redei_hamilton_path(const Tournament& t);

// One directed cycle of every length 3..n. Requires a strong tournament.
std::map<int, std::vector<int>> moon_cycles(const Tournament& t);

struct CycleWitness {
  bool free = true;                 // no directed C_k present
  std::vector<int> cycle;           // witness when !free
};

// Directed cycles of length exactly k.
CycleWitness is_ck_free(const Tournament& t, int k);

// C_k-free tournament on n vertices; nontrivial additionally demands some
// directed cycle (impossible for k=3, which is an error).
Tournament find_ck_free_tournament(int n, int k, bool nontrivial);

// Seeded rejection sampling over random tournaments, falling back to a
// relabelled constructed witness if sampling keeps missing.
Tournament random_ck_free_tournament(int n, int k, Rng& rng);

}  // namespace starcol
