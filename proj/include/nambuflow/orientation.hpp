// Edge orientation morphism: undirected graphs with ordered edge lists are
// sent to sums of directed wedge graphs over two sinks.
//
// A direction portrait assigns each edge an arrowhead so that no vertex emits
// more than two arrows; the 2n-k missing arrow slots (the "deficiency") are
// filled with arrows onto the sinks, one per sink, in both ways.  Every
// directed term carries the parity of the permutation taking the global arrow
// order (edges as listed, then the arrow into sink 0, then into sink 1) to the
// wedge reading order: vertices in label order, each contributing its two
// outgoing arrows, Left = earlier in the global order.
//
// The marked variant instead requires one chosen vertex to emit nothing (it
// becomes a terminal carrying a prescribed symbol) and every other vertex to
// be a full wedge; no sinks are added.  This is what differentiates the
// Casimirs along a flow.
#pragma once

#include "nambuflow/graphs.hpp"

namespace nambu {

// Global normalization of the orientation morphism, calibrated once against
// the 2D trivialisation identity for the tetrahedron flow.
extern const Rat kOrientNorm;

struct OrientResult {
  KSum q;               // canonical merged sum, kOrientNorm included
  long long raw_terms;  // directed assignments enumerated before merging
};

// Requires deficiency 2n - #edges == 2 on every term; throws
// std::invalid_argument otherwise.
OrientResult orient(const GraphSum& gamma);

// Requires #edges == 2(n-1) on every term.  No normalization factor.
KSum orient_marked(const GraphSum& gamma, Symbol content);

}  // namespace nambu
