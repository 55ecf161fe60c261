#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "starcol/colouring.hpp"
#include "starcol/graph.hpp"
#include "starcol/tournament.hpp"

namespace starcol {

struct SearchStats {
  uint64_t nodes = 0;
  uint64_t leaves = 0;
  uint64_t pruned_bound = 0;
  uint64_t pruned_rainbow = 0;

  SearchStats& operator+=(const SearchStats& o) {
    nodes += o.nodes;
    leaves += o.leaves;
    pruned_bound += o.pruned_bound;
    pruned_rainbow += o.pruned_rainbow;
    return *this;
  }
};

struct OracleOptions {
  int max_n = 6;
  int threads = 1;
  bool collect_witnesses = false;
};

struct OracleResult {
  int value = 0;  // max colours over rainbow-free colourings
  SearchStats stats;
  std::vector<StarColouring> witnesses;  // extremal, canonical representatives
};

// Branch and bound over star colourings of K_n avoiding a rainbow copy of
// every member of the family. Throws CapError when n exceeds opts.max_n.
OracleResult star_anti_ramsey(int n, const std::vector<SimpleGraph>& family,
                              const OracleOptions& opts = {});
OracleResult star_anti_ramsey(int n, const SimpleGraph& pattern,
                              const OracleOptions& opts = {});

// nullopt when no star colouring of K_n avoids the family at all.
std::optional<OracleResult> star_anti_ramsey_family(int n,
                                                    const std::vector<SimpleGraph>& family,
                                                    const OracleOptions& opts = {});

// Least n such that every star colouring of K_n contains a rainbow copy;
// nullopt if none found up to the cap.
std::optional<int> nsar(const SimpleGraph& pattern, int cap = 7,
                        const OracleOptions& opts = {});

// All rainbow-free colourings attaining star_anti_ramsey(n, pattern), one per
// isomorphism class.
std::vector<StarColouring> extremal_colourings(int n, const SimpleGraph& pattern,
                                               const OracleOptions& opts = {});

// Visit every star colouring of K_n (canonical_only keeps one representative
// per isomorphism class). Returns the number visited. Hard cap n <= 7.
uint64_t enumerate_star_colourings(int n, bool canonical_only,
                                   const std::function<void(const StarColouring&)>& visit);
uint64_t count_star_colourings(int n);

// Structural tests from the extremal characterisations.
bool check_structure_ck(const StarColouring& c, int k);
bool check_structure_k4minus(const StarColouring& c);

struct CoverTuple {
  uint32_t w_mask = 0;
  uint32_t y_mask = 0;
  uint32_t z_mask = 0;
  int x = -1;
  int v_star = -1;
  int c_z = -1;
};

// p1..p7 follow the tuple predicates of the K_4 upper-bound argument; covers
// is the cover condition C(G) = C(W) ∪ C(Y) ∪ C(Z) ∪ {c_z}
struct TupleReport {
  bool p1 = false;  // sets in range, c_z an existing colour
  bool p2 = false;  // W ∪ Y ∪ Z = V, |W| >= 1, |Y|,|Z| >= 2, |W|+|Y|+|Z| = n+2
  bool p3 = false;  // C(Y ∪ Z) = C(Y) ∪ C(Z) ∪ {c_z}
  bool p4 = false;  // colours from x into {y,z} ∪ W distinct, per y in Y-x, z in Z-v*
  bool p5 = false;  // x in (W ∩ Y) - Z, v* in (Y ∩ Z) - W, others in exactly one set
  bool p6 = false;  // v*u centred at u for u in (Z - v*) ∪ {x}
  bool p7 = false;  // xz centred at x with colour c_z for z in Z - v*
  bool restricted_ok = false;  // per-w containment of C({w}, Y) for w in W - x
  bool covers = false;
  bool good() const { return p1 && p2 && p3 && p4; }
  bool great() const { return good() && p5 && p6 && p7; }
  bool restricted() const { return great() && restricted_ok; }
};

TupleReport check_tuple(const StarColouring& c, const CoverTuple& t);

struct CoverSearchResult {
  std::optional<CoverTuple> tuple;
  uint64_t examined = 0;
};

// Exhaustive search for a good covering tuple. Requires c rainbow-K_4-free
// with some vertex centring at least three stars; n <= 7.
CoverSearchResult find_covering_tuple(const StarColouring& c);

// max edges of an n-vertex graph avoiding every member of the family.
struct ExResult {
  int value = 0;
  SimpleGraph witness;
  uint64_t nodes = 0;
};
ExResult ex_small(int n, const std::vector<SimpleGraph>& family, int cap = 10);

// All cycles C_3..C_k as forbidden family.
std::vector<SimpleGraph> cycle_family(int k_max);

// max edges of an m x n bipartite graph with no K_{s,t} in the fixed
// orientation (s rows and t columns all adjacent).
ExResult zarankiewicz_small(int m, int n, int s = 2, int t = 2);

struct RedBlueResult {
  bool claim_holds = false;          // every forest-complement has the structure
  std::optional<SimpleGraph> bad_forest;  // counterexample forest if not
  uint64_t checked = 0;
};

// For the join J = t1 + t2 with tree orders s, t >= 3: after removing any
// forest, the rest contains an odd cycle or a K_{s,t} minus at most one edge
// (on some bipartition of all s+t vertices into sides of size s and t).
RedBlueResult check_redblue(const SimpleGraph& t1, const SimpleGraph& t2,
                            bool exhaustive_subsets = false);

}  // namespace starcol
