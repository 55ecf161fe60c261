#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "starcol/graph.hpp"
#include "starcol/rng.hpp"
#include "starcol/tournament.hpp"

namespace starcol {

// Edge colouring of K_n as an ordered list of colour classes. Class identity
// is positional; the structure may be invalid until validate_colouring says
// otherwise. A valid colouring partitions E(K_n) and every class is a star
// (all edges through one vertex; a single edge counts, a triangle does not).
struct StarColouring {
  int n = 0;
  std::vector<std::vector<Edge>> classes;

  int colour_count() const { return static_cast<int>(classes.size()); }
};

struct ValidationIssue {
  int class_id = -1;  // -1 for colouring-wide issues
  std::string reason;
};

struct ValidationReport {
  bool ok = true;
  std::vector<ValidationIssue> issues;
};

ValidationReport validate_colouring(const StarColouring& c);

// Per-class digest. A single-edge class has both endpoints as centres and
// both as leaves; a larger star has a unique centre.
struct ClassInfo {
  uint32_t vertices = 0;
  uint32_t centres = 0;
  int size = 0;
  bool single() const { return size == 1; }
};

// Compiled lookup tables for a valid colouring. build() only checks that the
// classes exactly cover E(K_n); run validate_colouring first for diagnosis.
struct ColouringIndex {
  int n = 0;
  int k = 0;
  std::vector<int16_t> edge_class;  // by colex edge id
  std::vector<ClassInfo> cls;

  static ColouringIndex build(const StarColouring& c);

  int class_of(int u, int v) const { return edge_class[edge_id(u, v)]; }
  bool is_centre(int cls_id, int v) const { return (cls[cls_id].centres >> v) & 1u; }
};

struct StarCount {
  int total = 0;        // classes having v as a centre
  int single_edge = 0;  // single-edge classes among them
};

StarCount star_count_at(const ColouringIndex& ix, int v);
StarCount star_count_at(const StarColouring& c, int v);

// total star-count for every vertex at once
std::vector<int> centre_counts(const ColouringIndex& ix);

enum class TieBreak { Lower, Higher };

// Orient every class away from its centre; single-edge classes use the tie
// break to pick which endpoint acts as centre.
Tournament induced_orientation(const StarColouring& c, TieBreak tb = TieBreak::Lower);

struct CanonicalKey {
  std::string key;
  bool exact = true;  // false when n exceeded the cap and a hash invariant was used
};

// Equal keys <=> same colouring up to vertex relabelling + class reordering
// (exact mode). Above exact_cap a permutation-invariant digest is returned
// and flagged; equal digests then only suggest isomorphism.
CanonicalKey canonical_key(const StarColouring& c, int exact_cap = 9);

// Restriction to a vertex subset (ascending), relabelled to 0..k-1; classes
// that lose all edges disappear.
StarColouring induced_subcolouring(const StarColouring& c, const std::vector<int>& keep);
StarColouring remove_vertex(const StarColouring& c, int v);

StarColouring random_star_colouring(int n, Rng& rng);

}  // namespace starcol
