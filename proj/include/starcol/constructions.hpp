#pragma once

#include <array>
#include <memory>
#include <optional>
#include <vector>

#include "starcol/colouring.hpp"
#include "starcol/graph.hpp"
#include "starcol/tournament.hpp"

namespace starcol {

struct BlowupSpec;

struct BlowupPart {
  int size = 0;
  enum Kind { Lexical, Explicit, Nested } kind = Lexical;
  std::optional<StarColouring> inner;    // Explicit
  std::shared_ptr<BlowupSpec> sub;       // Nested

  static BlowupPart lex(int size);
  static BlowupPart given(StarColouring c);
  static BlowupPart recurse(BlowupSpec s);
};

struct BlowupSpec {
  std::vector<BlowupPart> parts;
  int total() const;
};

// Either a collection of edge-disjoint stars or (from_graph) one single-edge
// star per edge of L.
struct ModificationSpec {
  std::vector<std::vector<Edge>> stars;
  static ModificationSpec from_graph(const SimpleGraph& l);
  static ModificationSpec from_stars(std::vector<std::vector<Edge>> s);
};

struct K4MinusParams {
  int a = 1;                    // 1-based block index, needs 2a+1 <= n-1
  std::vector<Edge> s_edges;    // 1 or 2 edges on {2a-2, 2a-1, 2a}; empty = default single edge
};

struct GirthModifiedResult {
  StarColouring colouring;
  SimpleGraph modifier;
};

// Class i is the star centred i with leaves i+1..n-1; n-1 colours.
StarColouring lexical_colouring(int n);

// Every edge its own colour.
StarColouring rainbow_complete(int n);

// One class per vertex of positive out-degree: centre v, leaves N+(v).
StarColouring orientable_colouring(const Tournament& t);

// Cross edges of the Turan graph rainbow with fresh colours, each part
// carries its inner colouring on a disjoint colour set.
StarColouring rainbow_blowup(const BlowupSpec& spec);

// Each star of the spec gets one fresh colour; emptied old classes vanish.
StarColouring modified_colouring(const StarColouring& c, const ModificationSpec& m);

// A = {0..n-k}, B = {n-k+1..n-1}; each x in A centres one star on its
// A-out-neighbours plus all of B, B internally rainbow. The tournament on A
// must have no directed C_k (default transitive).
StarColouring cycle_extremal(int n, int k,
                             const std::optional<Tournament>& a_tournament = std::nullopt);

// V1 = {0..part1-1}, v* = 0: lexical inside both parts, one bundled colour
// v->V2 per v in V1 minus v*, rainbow v*->V2. 2n-3 colours.
StarColouring k4_extremal_two_part(int n, int part1);

// Three non-empty consecutive blocks, lexical inside each, every v in V_i
// sends one bundled colour to V_{i+1 mod 3}. 2n-3 colours.
StarColouring k4_extremal_three_part(int n, const std::array<int, 3>& sizes);

// Lexical base plus a fresh colour per component of the matching-like graph
// J (odd n: perfect matching on the first n-1 vertices; even n: matching with
// one 1- or 2-edge block S around position a). floor(3(n-1)/2) colours.
StarColouring k4minus_extremal(int n,
                               const std::optional<K4MinusParams>& params = std::nullopt);

// New vertex joined by n-1 fresh singleton colours.
StarColouring apex_extension(const StarColouring& c);

// Rainbow K_{v(H)-1}, then every added vertex sends delta(H)-1 bundled
// colours partitioning the previous vertices.
StarColouring min_degree_construction(int n, const SimpleGraph& h);

// Lower-bound colouring for K_m, m >= 5: odd m=2k+1 uses k lexical blow-up
// parts, even m=2k uses k-1 parts with the largest part rainbow-K_4-free.
StarColouring clique_blowup_lower(int n, int m);

// L-modified lexical where L is a maximum graph with no cycle of length at
// most v(H), found exactly. Needs ea(H) >= 3.
GirthModifiedResult girth_modified_lower(int n, const SimpleGraph& h, int ex_cap = 10);

}  // namespace starcol
