#pragma once
/* Leibniz expansion of wedge graphs over the Nambu structure, the
   dimension-raising embedding, and exhaustive enumeration of micro-graph
   families.  Expanding a wedge turns it into a Levi-Civita block; every
   arrow that pointed at the wedge is distributed over the d-1 content
   vertices of the block (the rho head or one owned Casimir copy). */

#include <vector>

#include "nambuflow/graphs.hpp"

namespace nambu {

struct ExpandReport {
  MSum sum;                         // canonical, merged, zero graphs dropped
  long long raw_terms = 0;          // distribution choices enumerated
  long long live_terms = 0;         // choices with no repeated epsilon target
  std::vector<MicroGraph> classes;  // canonical shapes of the live choices
  std::vector<long long> mult;      // live choices landing in classes[i]
  int dead_classes = 0;             // double-edge shapes, census audit only
};

// Requires 2 <= d <= kMaxDim; at d = 2 a block owns no copies and the
// expansion is the plain change of species, one term per input graph.
// Choices that repeat a target inside one epsilon tuple are zero before any
// relabeling; they are dropped from the class census and only counted.  A
// class whose canonical sign is zero (killed by a sign-reversing relabeling)
// stays in `classes` so both census readings are reportable, but never
// reaches `sum`.  `mult` counts plain choices, ignoring input coefficients.
ExpandReport leibniz_expand(const KSum& s, int d);

// The same drawing read over dimension d+1: every block grows one fresh
// Casimir copy of in-degree 1; nothing else moves.
MicroGraph embed(const MicroGraph& g);
MSum embed(const MSum& s);

// All pairwise nonisomorphic micro-graphs with k sinks (each of in-degree
// exactly one) and the given number of blocks over dimension d, zero shapes
// included, in canonical order.  connected_only keeps weakly connected
// graphs, counting the implicit casimir arrows.
std::vector<MicroGraph> enumerate_micrographs(int k, int blocks, int d,
                                              bool connected_only = true);

}  // namespace nambu
