#pragma once
/* Plain polynomials in x^1..x^d with exact rational coefficients.  Used to
   instantiate jet expressions (rho, a_i, f, g as explicit polynomials) for
   oracle checks; never on hot paths. */

#include "nambuflow/diffpoly.hpp"

#include <array>
#include <random>

namespace nambu {

struct XMono {
  std::array<uint16_t, kMaxDim> e{};
  bool operator==(const XMono&) const = default;
  auto operator<=>(const XMono&) const = default;
};

struct Poly {
  int dim = 0;
  std::vector<std::pair<XMono, Rat>> t;  // sorted, coeffs nonzero
  bool zero() const { return t.empty(); }
  bool operator==(const Poly&) const = default;
};

Poly px_zero(int dim);
Poly px_const(int dim, const Rat& c);
Poly px_coord(int dim, int coord);  // x^{coord+1}
Poly px_add(const Poly& a, const Poly& b);
Poly px_sub(const Poly& a, const Poly& b);
Poly px_scale(const Poly& a, const Rat& c);
Poly px_mul(const Poly& a, const Poly& b);
Poly px_diff(const Poly& a, int coord);
std::string px_str(const Poly& a);

// Random dense polynomial of the given total degree with small integer
// coefficients; deterministic in the engine.
Poly px_random(int dim, int degree, std::mt19937_64& rng, int coeff_bound = 3);

// Substitute x -> A x (A integer matrix, row-major), exact.
Poly px_linear_subst(const Poly& a, const std::array<std::array<int, kMaxDim>, kMaxDim>& A);

// Instantiation of jet expressions: a table sym -> Poly; jets evaluate by
// repeated differentiation.
struct Instantiation {
  int dim;
  std::array<Poly, kSymbolCount> value;
};

Poly instantiate(const DiffPoly& p, const Instantiation& inst);

}  // namespace nambu
