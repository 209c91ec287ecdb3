#ifndef EQSYM_LINALG_HPP
#define EQSYM_LINALG_HPP

#include <map>
#include <vector>

#include "eqsym/poly.hpp"

namespace eqsym {

/// Incremental row reduction over the monomial basis of R_n, with
/// polynomials as rows.  Pivots are keyed by leading monomial, so families
/// that are triangular by construction reduce in near-linear time.
class SpanBuilder {
public:
  explicit SpanBuilder(int n) : n_(n) { check_var_count(n); }

  /// Reduces p against the current span; if a nonzero remainder is left it
  /// becomes a new pivot.  Returns true when the rank grew.
  bool insert(ExtPolynomial p);

  /// True iff p lies in the span built so far (p reduces to zero).
  bool contains(ExtPolynomial p) const;

  int rank() const { return static_cast<int>(pivots_.size()); }
  int vars() const { return n_; }

private:
  ExtPolynomial reduce(ExtPolynomial p) const;

  int n_;
  std::map<std::uint64_t, ExtPolynomial, MonoLexLess> pivots_;  // leading mask -> monic row
};

/// Dense matrix of exact rationals, row major.
struct RatMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<Rational> a;

  RatMatrix() = default;
  RatMatrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, Rational(0)) {}

  Rational& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
  const Rational& at(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }
};

/// Gauss-Jordan elimination to reduced row echelon form; returns the rank.
int row_reduce(RatMatrix& m);

/// Basis of the right kernel {x : m x = 0}, one vector per free column of
/// the reduced form.
std::vector<std::vector<Rational>> nullspace(RatMatrix m);

}  // namespace eqsym

#endif
