// Graph species: undirected edge-ordered graphs (cocycle terms), directed
// Kontsevich graphs over sinks, and Nambu micro-graphs whose internal
// vertices split into Levi-Civita heads with their own Casimir copies.
//
// Orientation data conventions:
//  - undirected: the edge LIST ORDER is the orientation; swapping two list
//    entries flips the sign.  Vertex labels carry no sign.
//  - kontsevich: each wedge vertex has an ordered target pair (L, R);
//    swapping L and R flips the sign.  Relabeling wedge vertices is free.
//  - micro: each Levi-Civita head issues d arrows forming one epsilon
//    tuple.  Stored normal form keeps positions 1,2 as the derivation
//    arrows (L, R) and pins position 2+i to the head's own copy of a_i,
//    so the casimir arrows are implicit.  L<->R swap flips the sign;
//    relabeling whole blocks is free (the evaluation is a plain product
//    over blocks).  A repeated target inside one epsilon tuple kills the
//    graph (two arrows of one antisymmetric tuple on the same content).

#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "nambuflow/diffpoly.hpp"
#include "nambuflow/rational.hpp"

namespace nambu {

struct UndirectedGraph {
  int n = 0;                                     // vertices 0..n-1
  std::vector<std::pair<uint8_t, uint8_t>> e;    // each (a,b) with a<b; list order signed

  auto operator<=>(const UndirectedGraph&) const = default;
};

// Directed graph over m sinks: vertex ids are sinks [0,m), then terminal
// vertices [m, m+t) each holding an opaque symbol (out-degree 0), then
// wedge vertices; wedge i (vertex m+t+i) has ordered targets w[i]=(L,R).
struct KontsevichGraph {
  int m = 0;
  std::vector<Symbol> term;
  std::vector<std::pair<uint8_t, uint8_t>> w;

  auto operator<=>(const KontsevichGraph&) const = default;
  int t() const { return (int)term.size(); }
  int wedges() const { return (int)w.size(); }
  int vertices() const { return m + t() + wedges(); }
};

// Nambu micro-graph over dimension d >= 2.  Vertex layout:
//   sinks [0, m), terminals [m, m+t), heads [m+t, m+t+b),
//   casimir copy (l, i) at  m+t+b + l*(d-2) + (i-1),  i = 1..d-2.
// Block l stores only its two derivation arrows lr[l] = (L, R); the d-2
// casimir arrows head to the block's own copies in the fixed order a_1..
// At d = 2 a block has no copies and degenerates to a plain wedge.
struct MicroGraph {
  int d = 2;
  int m = 0;
  std::vector<Symbol> term;
  int b = 0;
  std::vector<std::pair<uint8_t, uint8_t>> lr;

  auto operator<=>(const MicroGraph&) const = default;
  int t() const { return (int)term.size(); }
  int head(int l) const { return m + t() + l; }
  int cas(int l, int i) const { return m + t() + b + l * (d - 2) + (i - 1); }
  int vertices() const { return m + t() + b + b * (d - 2); }
  // reverse lookups: -1 when v is not of that kind
  int head_of(int v) const {
    int h = v - m - t();
    return (h >= 0 && h < b) ? h : -1;
  }
  int cas_owner(int v) const {
    int c = v - m - t() - b;
    return (c >= 0 && c < b * (d - 2)) ? c / (d - 2) : -1;
  }
  int cas_index(int v) const {  // 1-based casimir index
    int c = v - m - t() - b;
    return (c >= 0 && c < b * (d - 2)) ? c % (d - 2) + 1 : -1;
  }
};

void ug_validate(const UndirectedGraph& g);  // throws on loops / bad range
void kg_validate(const KontsevichGraph& g);
void mg_validate(const MicroGraph& g);

int tadpole_count(const KontsevichGraph& g);
int tadpole_count(const MicroGraph& g);  // arrows from a head to itself

// True when some epsilon tuple repeats a target: L == R, or a derivation
// arrow lands on one of the block's own copies (the implicit casimir arrow
// already points there).  Such graphs are zero before any relabeling.
bool mg_double_edge(const MicroGraph& g);

template <typename G>
struct Canonical {
  G g;
  int sign = 0;                // 0 when the graph equals minus itself
  std::vector<int> perm;       // perm[orig vertex] = canonical vertex
};

Canonical<UndirectedGraph> ug_canonical(const UndirectedGraph& g);
Canonical<KontsevichGraph> kg_canonical(const KontsevichGraph& g);
Canonical<MicroGraph> mg_canonical(const MicroGraph& g);

// Sums over canonical representatives, sorted, zero graphs dropped.
using GraphSum = std::vector<std::pair<UndirectedGraph, Rat>>;
using KSum = std::vector<std::pair<KontsevichGraph, Rat>>;
using MSum = std::vector<std::pair<MicroGraph, Rat>>;

// Accumulators: add() canonicalizes and merges with the canonical sign.
struct GraphSumBuilder {
  void add(const UndirectedGraph& g, const Rat& c);
  GraphSum take();
  std::vector<std::pair<UndirectedGraph, Rat>> acc;
};
struct KSumBuilder {
  void add(const KontsevichGraph& g, const Rat& c);
  KSum take();
  std::vector<std::pair<KontsevichGraph, Rat>> acc;
};
struct MSumBuilder {
  void add(const MicroGraph& g, const Rat& c);
  MSum take();
  std::vector<std::pair<MicroGraph, Rat>> acc;
};

GraphSum gs_add(const GraphSum& a, const GraphSum& b);
GraphSum gs_scale(const GraphSum& a, const Rat& c);
KSum ks_add(const KSum& a, const KSum& b);
KSum ks_scale(const KSum& a, const Rat& c);
MSum ms_add(const MSum& a, const MSum& b);
MSum ms_scale(const MSum& a, const Rat& c);

std::string ug_str(const UndirectedGraph& g);
std::string kg_str(const KontsevichGraph& g);
std::string mg_str(const MicroGraph& g);

}  // namespace nambu
