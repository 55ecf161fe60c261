#pragma once

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "starcol/colouring.hpp"
#include "starcol/graph.hpp"
#include "starcol/rng.hpp"

namespace starcol {

// Witness for a rainbow copy: vertex_map[i] is the host vertex carrying
// pattern vertex i; edge_colours lists the class of each pattern edge in
// colex order of the pattern's edges.
struct RainbowCertificate {
  SimpleGraph pattern;
  std::vector<int> vertex_map;
  std::vector<int> edge_colours;
};

bool validate_certificate(const StarColouring& c, const RainbowCertificate& cert);

// Exhaustive backtracking over injections; a returned certificate always
// re-validates, absence of one is a proof of absence.
std::optional<RainbowCertificate> find_rainbow(const StarColouring& c,
                                               const SimpleGraph& pattern);

// Lengths 3..n carrying a rainbow cycle, with one witness per length.
std::map<int, RainbowCertificate> rainbow_cycle_spectrum(const StarColouring& c);

// When every vertex centres at least two stars the cycle is built by the
// orientation method (guaranteed); otherwise falls back to exhaustive search
// and may legitimately return nothing.
std::optional<RainbowCertificate> rainbow_hamilton_cycle(const StarColouring& c);

// Grow a rainbow Hamilton cycle of c-v into one of c. Needs v centred on at
// least two stars; the inner cycle is found internally when not supplied.
RainbowCertificate extend_rainbow_cycle(const StarColouring& c, int v,
                                        const std::optional<RainbowCertificate>& inner = std::nullopt);

// Directed graph (loops absent, antiparallel arcs allowed), order <= 64.
struct Digraph {
  int n = 0;
  std::vector<uint64_t> out;

  Digraph() = default;
  explicit Digraph(int n_) : n(n_), out(n_, 0) {
    if (n_ < 0 || n_ > 64) throw InputError("digraph order out of range");
  }
  bool arc(int u, int v) const { return (out[u] >> v) & 1u; }
  void add_arc(int u, int v) {
    if (u == v) throw InputError("digraph: loop arc");
    out[u] |= 1ULL << v;
  }
};

Digraph complete_digraph(int n);
Digraph random_digraph(int n, double p, Rng& rng);

struct DrcResult {
  std::optional<std::vector<int>> set;  // a vertices, every s-subset has >= b common out-neighbours
  int attempts = 0;
};

// Dependent random choice, seeded; success is verified by enumerating all
// s-subsets before returning, failure only means the retry budget ran out.
DrcResult dependent_random_choice(const Digraph& d, int s, int a, int b,
                                  uint64_t seed, int retries = 64);

// Best-effort search for a rainbow copy of the join t1 + t2 via the
// one-arc-per-colour digraph; returns nothing when the random phases miss,
// which is not evidence of absence.
std::optional<RainbowCertificate> find_rainbow_join(const StarColouring& c,
                                                    const SimpleGraph& t1,
                                                    const SimpleGraph& t2,
                                                    uint64_t seed);

}  // namespace starcol
