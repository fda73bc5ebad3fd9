#pragma once
/* Polyvector fields on R^d with differential-polynomial coefficients.
   A k-vector is stored on strictly increasing index tuples (1-based).  The
   Schouten bracket is computed in the odd-cotangent representation
   A = sum_I A_I psi_I with the right-derivative convention; under it the
   iterated composition [[..[[rho dx, a_1]].., a_{d-2}]] reproduces the
   Nambu bracket coefficients with no extra sign. */

#include "nambuflow/diffpoly.hpp"

namespace nambu {

struct IdxTuple {
  std::vector<uint8_t> v;  // strictly increasing, 1-based
  bool operator==(const IdxTuple&) const = default;
  auto operator<=>(const IdxTuple&) const = default;
};

struct Multivector {
  int arity = 0;
  int dim = 0;
  std::vector<std::pair<IdxTuple, DiffPoly>> c;  // sorted tuples, nonzero polys

  bool zero() const { return c.empty(); }
  bool operator==(const Multivector&) const = default;
};

Multivector mv_zero(int arity, int dim);
Multivector mv_normalize(int arity, int dim,
                         std::vector<std::pair<IdxTuple, DiffPoly>> comps);
Multivector mv_add(const Multivector& a, const Multivector& b);
Multivector mv_sub(const Multivector& a, const Multivector& b);
Multivector mv_scale(const Multivector& a, const Rat& s);

// Component at an arbitrary index tuple, antisymmetric in the indices;
// zero DiffPoly for repeated indices.
DiffPoly mv_component(const Multivector& a, const std::vector<int>& idx);

// Map over coefficients (substitutions etc.); drops components that vanish.
Multivector mv_map(const Multivector& a,
                   const std::function<DiffPoly(const DiffPoly&)>& fn);

// Sign of merging two disjoint increasing tuples into one (0 on overlap).
int wedge_sign(const IdxTuple& a, const IdxTuple& b, IdxTuple& out);

// Schouten bracket; arity p+q-1.  Graded antisymmetric, satisfies the
// graded Jacobi identity, restricts to the Lie bracket for p=q=1 and to
// X(f) for q=0.
Multivector schouten(const Multivector& a, const Multivector& b);

// (1/2) [[P, P]]; the trilinear Jacobi obstruction of a bi-vector.
Multivector jacobiator(const Multivector& p);

// rho * d/dx^1 ^ ... ^ d/dx^d.
Multivector nambu_dvector(int d);
// Nambu bi-vector with density rho and Casimirs a_1..a_{d-2}, built from the
// epsilon contraction.
Multivector nambu_bivector(int d);
// N-ary bracket as an N-vector: rho * det of the partials of the N slots and
// the Casimir tail a_{N-1}..a_{d-2}.
Multivector nambu_nvector(int d, int n);
// Iterated composition [[..[[density dx, c_1]].., c_k]] with explicit
// coefficient entries; with density = rho, c_i = a_i this equals
// (-1)^{(d-2)(d-3)/2} * nambu_bivector for k = d-2 (each contraction
// removes the rightmost odd slot, so restoring ascending order costs
// the triangular sign).
Multivector nambu_compose(int d, const DiffPoly& density,
                          const std::vector<DiffPoly>& casimirs);

std::string mv_str(const Multivector& a);

}  // namespace nambu
