#pragma once
/* Exact differential-polynomial algebra in jet variables d^alpha(sym) of a
   fixed symbol table (rho, a1..a4, f, g, aux) over x^1..x^d, d <= 6.
   Polynomials are kept normalized (monomials sorted, coefficients nonzero),
   so operator== is semantic equality. */

#include "nambuflow/rational.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace nambu {

constexpr int kMaxDim = 6;

enum Symbol : uint8_t {
  kRho = 0,
  kA1 = 1,
  kA2 = 2,
  kA3 = 3,
  kA4 = 4,
  kF = 5,
  kG = 6,
  kAux = 7,
  kSymbolCount = 8,
};

const char* symbol_name(Symbol s);
Symbol symbol_from_name(std::string_view name);
inline Symbol casimir(int i) { return Symbol(kA1 + i - 1); }  // a_i, 1-based

// One jet variable, packed into 32 bits: symbol in bits 24..31, the order of
// d/dx^{c+1} in bits 4c..4c+3.  Each field is monotone under the packing, and
// jets with equal symbol compare by derivative multi-index.
using Jet = uint32_t;

inline Jet jet(Symbol s) { return Jet(s) << 24; }
Jet jet(Symbol s, const std::array<uint8_t, kMaxDim>& alpha);
inline Symbol jet_symbol(Jet v) { return Symbol(v >> 24); }
inline int jet_alpha(Jet v, int coord) { return (v >> (4 * coord)) & 0xf; }
Jet jet_bump(Jet v, int coord);  // one more d/dx^{coord+1}; throws past order 15
int jet_order(Jet v);
std::string jet_str(Jet v, int dim);

// Monomial: ascending list of jet factors, repetition = exponent.
struct Monomial {
  std::vector<Jet> f;
  int degree() const { return (int)f.size(); }
  bool operator==(const Monomial&) const = default;
};

// Lexicographic on exponent vectors (smallest jet id most significant);
// compatible with multiplication, which exact division relies on.
bool mono_less(const Monomial& a, const Monomial& b);
Monomial mono_mul(const Monomial& a, const Monomial& b);
bool mono_divides(const Monomial& d, const Monomial& m);
Monomial mono_div(const Monomial& m, const Monomial& d);
std::string mono_str(const Monomial& m, int dim);

struct DiffPoly {
  int dim = 0;
  std::vector<std::pair<Monomial, Rat>> t;  // sorted by mono_less, coeffs nonzero

  bool zero() const { return t.empty(); }
  bool operator==(const DiffPoly&) const = default;
};

DiffPoly dp_zero(int dim);
DiffPoly dp_const(int dim, const Rat& c);
DiffPoly dp_jet(int dim, Jet v);
DiffPoly dp_mono(int dim, Monomial m, const Rat& c);

DiffPoly dp_add(const DiffPoly& a, const DiffPoly& b);
DiffPoly dp_sub(const DiffPoly& a, const DiffPoly& b);
DiffPoly dp_scale(const DiffPoly& a, const Rat& c);
DiffPoly dp_mul(const DiffPoly& a, const DiffPoly& b);
DiffPoly dp_diff(const DiffPoly& a, int coord);  // d/dx^{coord+1}

// Accumulator for building polynomials term by term.
struct DpBuilder {
  int dim;
  std::vector<std::pair<Monomial, Rat>> acc;
  explicit DpBuilder(int d) : dim(d) {}
  void add(Monomial m, Rat c) { acc.emplace_back(std::move(m), std::move(c)); }
  DiffPoly take();
};

// Term-wise substitution: each jet factor is replaced by image(jet), products
// re-expanded.  Used for symbol flips, Casimir permutations, slices.
DiffPoly dp_substitute(const DiffPoly& a, const std::function<DiffPoly(Jet)>& image);

// sym -> -sym (every jet of sym changes sign).
DiffPoly dp_negate_symbol(const DiffPoly& a, Symbol s);
// Exchange the jets of two symbols.
DiffPoly dp_swap_symbols(const DiffPoly& a, Symbol s1, Symbol s2);
// sym := const (order-0 jets -> c, higher jets -> 0).
DiffPoly dp_set_symbol_const(const DiffPoly& a, Symbol s, const Rat& c);

// Evaluation in Z/p at a given assignment of jet values; p < 2^62.
uint64_t dp_eval_mod(const DiffPoly& a, const std::function<uint64_t(Jet)>& value,
                     uint64_t p);

// Exact division: returns t/d if d*q == t has a solution, otherwise nullopt
// and (optionally) the monomial at which division got stuck.
std::optional<DiffPoly> dp_div_exact(const DiffPoly& t, const DiffPoly& d,
                                     Monomial* witness = nullptr);

std::string dp_str(const DiffPoly& a);

}  // namespace nambu
