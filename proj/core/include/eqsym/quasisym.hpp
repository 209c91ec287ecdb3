#ifndef EQSYM_QUASISYM_HPP
#define EQSYM_QUASISYM_HPP

#include <vector>

#include "eqsym/poly.hpp"

namespace eqsym {

/// Quasisymmetric shift operator pi_i, 1 <= i < n.  On a monomial it fixes
/// supports containing both or neither of {i, i+1} and otherwise moves the
/// single occupied index to the other one; no sign is ever introduced since
/// only the index changes inside a sorted support.
ExtPolynomial pi(int i, const ExtPolynomial& p);

/// F_{1^r}: the sum of all degree-r squarefree monomials of R_n.
/// Returns 1 for r = 0 and 0 for r > n.
ExtPolynomial fundamental(int n, int r);

/// True iff pi(i, p) = p for every 1 <= i < n.
bool is_quasisymmetric(const ExtPolynomial& p);

/// Structure constant a_{r,s} with F_{1^r} F_{1^s} = a_{r,s} F_{1^{r+s}}:
/// zero when r and s are both odd, binomial(floor((r+s)/2), floor(r/2))
/// otherwise.
long long product_coefficient(int r, int s);

/// Independent evaluation of a_{r,s} as the signed sum over all r-subsets A
/// of {1..r+s} of (-1)^{#{b<a : a in A, b not in A}}.  Guarded: r+s <= 24.
long long product_coefficient_bruteforce(int r, int s);

/// Coefficient table of the series (1 + x + y) / (1 - x^2 - y^2) expanded by
/// the recurrence c(r,s) = [numerator](r,s) + c(r-2,s) + c(r,s-2).
/// Entry [r][s] is the coefficient of x^r y^s, for r, s <= max_degree.
std::vector<std::vector<long long>> generating_series_table(int max_degree);

}  // namespace eqsym

#endif
