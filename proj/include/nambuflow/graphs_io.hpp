// Text and JSON readers/writers for the three graph species.
//
// Strict text round-trips the *_str emitters in graphs.hpp:
//   undirected   "ug <n> ; (a,b);(a,b);..."
//   kontsevich   "<m> <wedges> ; [sym,...] ; (L,R);(L,R);..."   terminal block optional
//   micro        "micro <d> <m> <b> ; [sym,...] ; [t,...,t];[t,...,t]"
// Whitespace is free; pair/tuple separators may be ';' or whitespace.
//
// Lenient readers accept the compact forms graphs are usually quoted in:
//   parse_kontsevich("(0,1;1,3;1,2)", sinks, terminals) labels the vertices
//   0..m-1 sinks (1..t terminals when m == 0), then terminals, then one wedge
//   per group in ascending label order.  Targets are remapped accordingly.
//
//   parse_micrograph takes one d-tuple of targets per Levi-Civita block plus a
//   role table for the labels, infers which Casimir copies each block owns
//   (the owner is the unique block with a Casimir arrow onto the copy), and
//   returns the normalized MicroGraph together with the sign incurred by
//   permuting each written tuple into (L, R, own a_1, ..., own a_{d-2}) order.
//   Ambiguous ownership (readings with different normal forms) and
//   non-decomposable targets are reported as errors.
//
// JSON carries homogeneous sums: {species, d, sinks, terms:[{coefficient,
// terminals, groups}]} with rationals in lowest terms and terms in canonical
// order, so serialization is bit-exact and diffable.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "nambuflow/graphs.hpp"

namespace nambu {

UndirectedGraph ug_parse(const std::string& text);
KontsevichGraph kg_parse(const std::string& text);
MicroGraph mg_parse(const std::string& text);

KontsevichGraph parse_kontsevich(const std::string& text, int sinks, int terminals = 0);

// Labels as written in the source text; lc lists the Levi-Civita block labels
// in the order their target groups appear.
struct MicroRoles {
  std::vector<int> sinks;
  std::vector<int> lc;
  std::map<int, int> casimirs;  // label -> Casimir index (1-based)
  std::map<int, Symbol> terminals;
};

MicroGraph parse_micrograph(const std::string& text, int d, const MicroRoles& roles,
                            int* sign_out = nullptr);

std::string gs_to_json(const GraphSum& s);
std::string ks_to_json(const KSum& s);
std::string ms_to_json(const MSum& s);
GraphSum gs_from_json(const std::string& text);
KSum ks_from_json(const std::string& text);
MSum ms_from_json(const std::string& text);

}  // namespace nambu
