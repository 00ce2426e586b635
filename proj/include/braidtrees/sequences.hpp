#pragma once

// Counting sequences for the tree families and the lush subfamily.

#include <vector>

#include "braidtrees/rational.hpp"

namespace braidtrees {

// Catalan numbers C_n: binary shapes of degree n, forests of size n.
Int catalan(int n);

// Little Schroeder numbers s_n (n >= 1): angular shapes of degree n-1.
Int schroeder_little(int n);

// Lush tree counts g_n, via the composition recursion
//   g_0 = g_1 = 1,
//   g_n = sum over (k_1,...,k_r) composing n+1 with r >= 2 parts and
//         every interior part >= 2 of g_{k_1 - 1} ... g_{k_r - 1}.
Int lush_count_recursive(int n);

// The same numbers via the closed form (n >= 2)
//   g_n = sum_{r=2}^{n+1} 2^{r-2} (2r-3)!! / r! * binom(r, n+1-r).
Int lush_count_closed(int n);

// The sequence a_m defined by B(x) = x^2 + B(B(x)) for
// B(x) = sum a_m x^{2m}; its first seven terms coincide with g_0..g_6
// and the eighth differs by one.
Int a141200(int m);

// Coefficients of 2 G(x)^2 - (2x+1) G(x) + x + x^2 through x^max_degree,
// where G(x) = sum_{k>=1} g_{k-1} x^k; all must vanish.
std::vector<Rational> gf_residual(int max_degree);

// sum over compositions (k_1,...,k_r) of n of C_{k_1-1} ... C_{k_r-1};
// equals C_n (the dimension identity behind freeness of the binary
// product structure).
Int composition_catalan_sum(int n);

}  // namespace braidtrees
