#pragma once
/* The evaluation map phi from directed graphs to multivectors.  Every arrow
   carries a summation index 1..d and differentiates the content of its target
   vertex; wedge vertices contribute a bi-vector component P^{iL iR}, micro
   heads contribute rho with the epsilon tuple summed over S_d per block,
   casimir copies contribute a_i, terminals their opaque symbol.  Arrows into
   sinks carry the free slots: each sink must receive exactly one arrow, and
   the k slots are antisymmetrized with weight 1/k!, so the one-wedge graph
   evaluates to nambu_bivector(d) on the nose. */

#include <cstdint>
#include <vector>

#include "nambuflow/graphs.hpp"
#include "nambuflow/multivector.hpp"

namespace nambu {

// Content of wedge vertices in a Kontsevich graph.  kGeneric2D is the
// generic bi-vector on the plane, P^{12} = rho, and requires d = 2; it
// coincides with the d = 2 Nambu structure (empty Casimir list).
enum class Bracket { kNambu, kGeneric2D };

// Direct evaluation, one dp term per index assignment; serial, exact.
Multivector evaluate(const KSum& s, int d, Bracket bracket = Bracket::kNambu);

// Epsilon-tuple evaluation of micro-graphs: one monomial per element of
// (S_d)^blocks, integer-counted, parallel over graph terms.  The result is
// deterministic and independent of the thread count.  Requires d == g.d.
Multivector evaluate(const MSum& s, int d);

// Z/p fingerprint of evaluate(s, d) at the pseudo-random jet point
// jet_point(., seed): a mismatch of fingerprints proves the multivectors
// differ; a match decides nothing.  One value per free index tuple,
// entries that vanish mod p dropped (so an identically zero sum gives {}).
constexpr uint64_t kEvalPrime = (uint64_t(1) << 61) - 1;
uint64_t jet_point(Jet v, uint64_t seed);
std::vector<std::pair<IdxTuple, uint64_t>> evaluate_mod(const MSum& s, int d,
                                                        uint64_t seed);
// Same fingerprint computed from an already evaluated multivector.
std::vector<std::pair<IdxTuple, uint64_t>> mv_fingerprint(const Multivector& a,
                                                          uint64_t seed);

}  // namespace nambu
