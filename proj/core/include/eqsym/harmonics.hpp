#ifndef EQSYM_HARMONICS_HPP
#define EQSYM_HARMONICS_HPP

#include <utility>
#include <vector>

#include "eqsym/ballot.hpp"
#include "eqsym/poly.hpp"

namespace eqsym {

/// First defining operator of the harmonic space: sum_i partial(i, .).
ExtPolynomial d1(const ExtPolynomial& p);

/// Second defining operator: sum_{i<j} of partial(i) followed by partial(j),
/// i.e. the operator d_j d_i summed over i < j.  The opposite composition
/// order only flips the global sign and leaves the kernel unchanged; this
/// order is fixed so term-level fixtures are reproducible.
ExtPolynomial d2(const ExtPolynomial& p);

/// d1(p) = 0 and d2(p) = 0.
bool is_harmonic(const ExtPolynomial& p);

/// Ordered product (theta_{j_1} - theta_{i_1}) ... (theta_{j_k} - theta_{i_k})
/// over a non-crossing pairing; 1 for the empty pairing.
ExtPolynomial delta_poly(const NonCrossingPairing& c, int n);

/// The candidate harmonic basis: delta_poly over matched ballot words,
/// grouped by the number of pairs.
struct HarmonicBasis {
  int n = 0;
  /// by_degree[k] lists (alpha, delta) for ballot alpha with k ones.
  std::vector<std::vector<std::pair<BinarySeq, ExtPolynomial>>> by_degree;

  std::size_t total() const {
    std::size_t t = 0;
    for (const auto& grp : by_degree) t += grp.size();
    return t;
  }
};

HarmonicBasis harmonic_candidate_basis(int n);

/// Exact rational basis of the joint kernel of d1 and d2 restricted to the
/// degree-k span, with the degree-k monomials taken lex-descending.
std::vector<ExtPolynomial> harmonic_kernel(int n, int k);

/// Lex-smallest monomial of a delta polynomial; for a matched ballot word
/// this is exactly the support of its 1 positions.
Monomial smallest_lex_monomial(const ExtPolynomial& delta);

}  // namespace eqsym

#endif
