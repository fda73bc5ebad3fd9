// Built-in encodings used across the test suite and the command line driver:
// the wheel cocycles, the 2D sunflower vector field, and the Hamiltonians
// whose exterior differential generates the trivialising fields.
#pragma once

#include "nambuflow/graphs.hpp"

namespace nambu {

GraphSum bundled_gamma3();  // tetrahedron
GraphSum bundled_gamma5();  // 5-wheel + 5/2 companion; frozen derive_wheel5_cocycle()

KSum bundled_sunflower_2d();  // 1-vector over one sink; the tadpole term has weight 1
KSum bundled_ham_gamma3();    // 0-vector graphs with one rho terminal
KSum bundled_ham_gamma5();

}  // namespace nambu
