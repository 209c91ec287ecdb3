#ifndef EQSYM_SYM_COINV_HPP
#define EQSYM_SYM_COINV_HPP

#include "eqsym/poly.hpp"

namespace eqsym {

/// Reduction modulo the principal ideal generated by F_1: substitutes
/// theta_n = -(theta_1 + ... + theta_{n-1}).  The result lives in R_{n-1}.
ExtPolynomial reduce_mod_j(const ExtPolynomial& p);

/// Image of a monomial under the freeness decomposition
/// R_n -> R_{n-1} (x) {1, F_1}:
///   theta_A          -> theta_A (x) 1                       when n not in A,
///   theta_{A0 u {n}} -> -theta_A0 * F_1(n-1 vars) (x) 1  +  theta_A0 (x) F_1.
struct TensorComponents {
  ExtPolynomial unit_part;  // coefficient of (x) 1, in R_{n-1}
  ExtPolynomial f1_part;    // coefficient of (x) F_1, in R_{n-1}
};

TensorComponents tensor_decompose(const Monomial& m);

/// Rank of the reduction map on the monomial basis of R_n; equals 2^{n-1}.
int coinvariant_dim(int n);

/// Confirms freeness over the two-dimensional invariant ring: the reduction
/// map has rank 2^{n-1} and the monomial-by-monomial tensor decomposition is
/// a linear bijection onto R_{n-1} x {1, F_1}.
bool check_freeness(int n);

}  // namespace eqsym

#endif
