// Differential graded Lie algebra of undirected graphs with ordered edges.
//
// insert(a, b, v): vertex v of a is replaced by the whole of b; each edge end
// that was attached at v is reattached to a vertex of b, summing over all
// |V(b)|^deg(v) reattachments.  The edge list of the result is E(a) (in place,
// with endpoints renamed) followed by E(b), so every term carries sign +1
// relative to the factors; all signs downstream come from canonical reordering.
//
// gc_bracket(a, b) = a o b - (-1)^{#E(a) #E(b)} b o a, extended bilinearly.
// gc_diff(g) = [stick, g] with the single-edge graph as the stick; it raises
// the bi-grading (n, k) to (n+1, k+1).
#pragma once

#include "nambuflow/graphs.hpp"

namespace nambu {

GraphSum gc_insert(const GraphSum& a, const GraphSum& b);
GraphSum gc_bracket(const GraphSum& a, const GraphSum& b);
GraphSum gc_diff(const GraphSum& g);

struct CocycleReport {
  bool ok;
  GraphSum residual;  // d(g); empty iff ok
};
CocycleReport is_cocycle(const GraphSum& g);

inline UndirectedGraph gc_stick() { return {2, {{0, 1}}}; }

UndirectedGraph wheel_graph(int spokes);  // hub 0, rim 1..spokes; spokes then rim edges

// Searches the (6,10) bi-grading for the unique two-term combination
// "5-wheel + c * companion" closed under gc_diff, the 5-wheel coefficient
// normalized to 1.  Throws if the search does not pin it down uniquely.
GraphSum derive_wheel5_cocycle();

}  // namespace nambu
