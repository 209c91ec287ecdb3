#ifndef EQSYM_IDEAL_HPP
#define EQSYM_IDEAL_HPP

#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

#include "eqsym/ballot.hpp"
#include "eqsym/poly.hpp"

namespace eqsym {

/// Memoized family G_alpha, alpha in {0,1}^n, defined by
///   G_{1^s 0^(n-s)} = F_{1^s}
/// and, writing alpha = u 0 1^s 0^(n-k-s) with |u| = k-1 and s >= 1,
///   G_alpha = G_{u 1^s 0^(n-k-s+1)} - (-1)^{m_1(u)} theta_k G_{u 1^(s-1) 0^(n-k-s+2)}
/// where m_1 counts the 1s of u.  The lex-largest term of G_alpha is
/// theta^alpha with coefficient 1, so the family is triangular and forms a
/// linear basis of R_n.
///
/// Instances are not thread safe; clone one per worker.
class GFamily {
public:
  explicit GFamily(int n);

  int vars() const { return n_; }

  const ExtPolynomial& poly(const BinarySeq& alpha);

private:
  const ExtPolynomial& compute(std::uint64_t bits);

  int n_;
  std::unordered_map<std::uint64_t, ExtPolynomial> memo_;
};

/// theta^alpha, the lex-largest monomial of G_alpha.
inline Monomial leading_monomial(const BinarySeq& alpha) { return alpha.to_monomial(); }

struct NormalFormResult {
  ExtPolynomial input;
  ExtPolynomial normal_form;
  /// Pairs (gamma, c) with input = normal_form + sum c * G_gamma, every gamma
  /// breaking the ballot condition, in the order they were eliminated.
  std::vector<std::pair<BinarySeq, Rational>> decomposition;
};

/// Computations in the ideal generated by the quasisymmetric invariants
/// F_{1^r}, 1 <= r <= n, through its triangular basis {G_alpha : alpha not
/// ballot}.
class Ideal {
public:
  explicit Ideal(int n);

  int vars() const { return n_; }
  GFamily& family() { return fam_; }
  const ExtPolynomial& gpoly(const BinarySeq& alpha) { return fam_.poly(alpha); }

  /// Index of the linear basis {G_alpha : alpha not ballot}: the non-ballot
  /// words in lex order.  Subject to the enumeration cap.
  std::vector<BinarySeq> ideal_basis_index() const;

  /// Words breaking the ballot condition only at their rightmost 1; the
  /// corresponding G_alpha form a minimal Groebner basis.
  std::vector<BinarySeq> minimal_groebner_index() const;

  /// Eliminates the lex-largest non-ballot monomial theta^gamma by
  /// subtracting its multiple of G_gamma until only ballot monomials remain.
  /// Terminates because G_gamma - theta^gamma is supported on lex-smaller
  /// monomials.
  NormalFormResult normal_form(const ExtPolynomial& p);

  bool in_ideal(const ExtPolynomial& p) { return normal_form(p).normal_form.is_zero(); }

  /// Remainder of division by the minimal Groebner basis, allowing monomial
  /// cofactors: theta^alpha divides theta^gamma when its support is a
  /// subset, and the cofactor is the signed complementary monomial.
  ExtPolynomial reduce_by_minimal(const ExtPolynomial& p);

private:
  int n_;
  GFamily fam_;
};

/// Ballot monomials {theta^beta : beta ballot}, the residue basis of the
/// quotient, in lex order.
std::vector<Monomial> quotient_basis(int n);

/// Graded dimensions of the quotient: entry k counts ballot words with k
/// ones, computed as binomial(n,k) - binomial(n,k-1).
std::vector<std::uint64_t> hilbert_series(int n);

/// Verifies the two index-shift identities for alpha of length n-1:
/// G_{0 alpha} in R_n equals G_alpha with every variable index raised by
/// one, and G_{1 alpha} - theta_1 G_{0 alpha} involves only theta_2..theta_n.
bool shift_identity_check(const BinarySeq& alpha);

}  // namespace eqsym

#endif
