#pragma once
/* Trivialisation machinery for the wheel-cocycle flows on Nambu brackets:
   the 2D Hamiltonian construction of trivialising fields, exact coboundary
   solving over graph ansaetze, Casimir / density velocities read off the
   cocycle, the Leibniz-rule match of the flow with those velocities, and
   the structural symmetry checks of the flow bi-vector. */

#include <optional>
#include <string>
#include <vector>

#include "nambuflow/evaluate.hpp"
#include "nambuflow/graphs.hpp"
#include "nambuflow/multivector.hpp"

namespace nambu {

// Exterior differential of a wedge Hamiltonian against the inverse area
// form on the plane: in every term the rho terminal turns into a wedge
// whose Left arrow feeds the new sink while the Right arrow runs over all
// vertices of the term by the Leibniz rule, the terminal itself included,
// so a tadpole term always appears.  Input terms must have no sinks and
// exactly one terminal, carrying rho.
KSum ham_vector_field_2d(const KSum& ham);

struct Trivialisation {
  std::string cocycle;     // informational label
  int d = 0;
  bool solved = false;
  std::vector<Rat> coeff;  // one entry per ansatz column
  Multivector residual;    // q - [[P, X]] at the reported coefficients
};

// Exact solution of q == [[P_d, sum_i c_i phi(ansatz_i)]] in the ansatz
// coefficients.  The representative is deterministic: reduced echelon
// particular solution with free coordinates zero (the solution is only
// unique modulo ker phi and Poisson vector fields).  When the system is
// inconsistent the result has solved == false and carries the best-effort
// coefficients together with their nonzero residual as the certificate.
Trivialisation solve_coboundary(const Multivector& q,
                                const std::vector<KSum>& ansatz, int d,
                                std::string cocycle = {});
Trivialisation solve_coboundary(const Multivector& q,
                                const std::vector<MSum>& ansatz, int d,
                                std::string cocycle = {});

// Bi-vector with prescribed density and Casimir entries, normalized so
// that entries (rho, a_1..a_{d-2}) reproduce nambu_bivector(d) exactly.
Multivector nambu_entries(int d, const DiffPoly& density,
                          const std::vector<DiffPoly>& casimirs);

// da_i/deps along the gamma flow: the marked orientation places a_i in
// every vertex slot in turn; same global normalization as the flow itself.
DiffPoly casimir_velocity(const GraphSum& gamma, int d, int i);

// drho/deps: exact quotient of Q^gamma_d minus the Casimir-velocity part
// by the density-free Nambu bi-vector, compared component by component
// (equivalently per (f,g)-derivative signature).  nullopt with the stuck
// monomial when the division fails.
std::optional<DiffPoly> rho_velocity(const GraphSum& gamma, int d,
                                     Monomial* witness = nullptr);

// q minus the Leibniz combination P(rho_dot,[a]) + sum_i P(rho,..[adot_i]..)
Multivector leibniz_residual(const Multivector& q, const DiffPoly& rho_dot,
                             const std::vector<DiffPoly>& a_dots, int d);

// True iff the flow bi-vector equals the Leibniz combination of the
// velocities read off the cocycle, at full expansion.
bool verify_leibniz_match(const GraphSum& gamma, int d);

// True iff the velocities agree with transport along x: da_i = (-x)(a_i)
// for every Casimir and rho_dot dx == [[rho dx, x]] as d-vectors.
bool verify_field_transport(const Multivector& x, const GraphSum& gamma, int d);

struct CasimirTransform {
  enum Kind { kFlip, kSwap };
  Kind kind = kFlip;
  int i = 1, j = 2;  // 1-based Casimir indices; kFlip uses i only
};

// True iff Q^gamma_d is invariant under the transform while the Nambu
// bi-vector itself flips sign (both transforms are odd on P).
bool symmetry_check(const GraphSum& gamma, int d, const CasimirTransform& t);

}  // namespace nambu
