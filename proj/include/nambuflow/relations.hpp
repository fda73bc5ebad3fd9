#pragma once
/* Identity discovery among evaluated graphs: vanishing detection, synonym
   classification (phi-proportionality), exact nullspaces of evaluation
   matrices, and the embedding-preservation check.  Everything is exact over
   Q; the Z/p fingerprint only ever short-circuits the *nonzero* verdict,
   which is sound, never the zero one. */

#include <vector>

#include "nambuflow/evaluate.hpp"
#include "nambuflow/graphs.hpp"

namespace nambu {

struct VanishingReport {
  std::vector<MicroGraph> zero_by_sign;  // canonical sign 0
  std::vector<MicroGraph> vanishing;     // nonzero graphs, phi == 0 exactly
  std::vector<MicroGraph> nonvanishing;
};

// Three-way partition of the list; input order is kept within each part.
VanishingReport find_vanishing(const std::vector<MicroGraph>& gs, int d);

struct SynonymClass {
  std::vector<int> members;    // indices into the input list, ascending
  std::vector<Rat> constants;  // phi(gs[members[k]]) = constants[k] * phi(rep)
};

// Partition into phi-proportionality classes; the representative is the
// first member and carries constant 1.  Throws on a vanishing input graph
// (run find_vanishing first; proportionality with 0 is everything).
std::vector<SynonymClass> synonym_classes(const std::vector<MicroGraph>& gs, int d);

// Exact basis of { c : sum_i c_i phi(gs[i]) == 0 }, reduced row echelon,
// deterministic.  Column evaluation is parallel, elimination serial.
std::vector<std::vector<Rat>> nullspace(const std::vector<MicroGraph>& gs, int d);
std::vector<std::vector<Rat>> nullspace(const std::vector<KontsevichGraph>& gs,
                                        int d, Bracket bracket = Bracket::kNambu);

// True iff the relation sum_i coeff_i * gs[i] still evaluates to zero after
// every graph is embedded one dimension up (full expansion at d+1).
bool check_embedding_preserves(const std::vector<Rat>& coeff,
                               const std::vector<MicroGraph>& gs, int d);

// All connected Kontsevich graphs over one sink of in-degree exactly one
// with the given number of wedges, one representative per isomorphism
// class (shapes whose canonical sign is zero included), canonical order.
// No reachability condition: wedges feeding only each other are legal.
std::vector<KontsevichGraph> onevector_graphs(int wedges);

}  // namespace nambu
