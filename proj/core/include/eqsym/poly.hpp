#ifndef EQSYM_POLY_HPP
#define EQSYM_POLY_HPP

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "eqsym/monomial.hpp"
#include "eqsym/rational.hpp"

namespace eqsym {

/// Element of R_n = Q[theta_1..theta_n] with theta_i theta_j = -theta_j theta_i
/// and theta_i^2 = 0.  Terms are kept in canonical sparse form: a map from
/// support mask to a nonzero rational coefficient, ordered lexicographically,
/// so structural equality is polynomial equality.
///
/// Values are immutable in spirit: every operation returns a fresh polynomial
/// and never aliases shared state, so they are safe to move across threads.
class ExtPolynomial {
public:
  using TermMap = std::map<std::uint64_t, Rational, MonoLexLess>;

  explicit ExtPolynomial(int n = 0) : n_(n) { check_var_count(n); }

  static ExtPolynomial zero(int n) { return ExtPolynomial(n); }

  static ExtPolynomial constant(int n, const Rational& c) {
    ExtPolynomial p(n);
    p.add_term(0, c);
    return p;
  }

  static ExtPolynomial one(int n) { return constant(n, 1); }

  static ExtPolynomial monomial(int n, std::uint64_t mask, const Rational& c = 1) {
    ExtPolynomial p(n);
    (void)Monomial(n, mask);  // range check
    p.add_term(mask, c);
    return p;
  }

  /// theta_i as a polynomial.
  static ExtPolynomial variable(int n, int i) {
    if (i < 1 || i > n)
      throw PreconditionError("variable index " + std::to_string(i) + " out of range");
    return monomial(n, var_bit(i));
  }

  int vars() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  Rational coeff(std::uint64_t mask) const {
    auto it = terms_.find(mask);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  /// Adds c * theta_mask, dropping the term if the sum cancels.
  void add_term(std::uint64_t mask, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(mask, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  /// Lex-largest term, or nothing for the zero polynomial.
  std::optional<std::pair<Monomial, Rational>> leading_term() const {
    if (terms_.empty()) return std::nullopt;
    auto it = terms_.rbegin();
    return std::make_pair(Monomial(n_, it->first), it->second);
  }

  /// Lex-smallest term.
  std::optional<std::pair<Monomial, Rational>> trailing_term() const {
    if (terms_.empty()) return std::nullopt;
    auto it = terms_.begin();
    return std::make_pair(Monomial(n_, it->first), it->second);
  }

  /// True when all terms share one degree; reports it (0 for the zero
  /// polynomial, which is homogeneous of every degree).
  bool is_homogeneous(int* degree = nullptr) const;

  ExtPolynomial homogeneous_part(int k) const;

  /// Largest degree among the terms, -1 for zero.
  int degree() const;

  ExtPolynomial& operator+=(const ExtPolynomial& rhs);
  ExtPolynomial& operator-=(const ExtPolynomial& rhs);
  ExtPolynomial& operator*=(const Rational& c);
  ExtPolynomial& operator*=(const ExtPolynomial& rhs) {
    *this = *this * rhs;
    return *this;
  }

  friend ExtPolynomial operator+(ExtPolynomial lhs, const ExtPolynomial& rhs) {
    lhs += rhs;
    return lhs;
  }
  friend ExtPolynomial operator-(ExtPolynomial lhs, const ExtPolynomial& rhs) {
    lhs -= rhs;
    return lhs;
  }
  friend ExtPolynomial operator-(ExtPolynomial p) {
    for (auto& [mask, c] : p.terms_) c = -c;
    return p;
  }
  friend ExtPolynomial operator*(const ExtPolynomial& lhs, const ExtPolynomial& rhs);
  friend ExtPolynomial operator*(ExtPolynomial p, const Rational& c) {
    p *= c;
    return p;
  }
  friend ExtPolynomial operator*(const Rational& c, ExtPolynomial p) {
    p *= c;
    return p;
  }

  friend bool operator==(const ExtPolynomial&, const ExtPolynomial&) = default;

private:
  int n_ = 0;
  TermMap terms_;
};

/// Left partial derivative: theta_A -> (-1)^{#{j in A : j < i}} theta_{A\{i}}
/// when i lies in A, zero otherwise.
ExtPolynomial partial(int i, const ExtPolynomial& p);

/// Reverses the variable order inside each monomial; a degree-r term picks up
/// the sign (-1)^{r(r-1)/2}.
ExtPolynomial bar(const ExtPolynomial& p);

/// Substitutes partial derivatives for the variables of bar(p) and applies
/// the resulting operator to q.  Concretely each term theta_{a_1..a_r} of p
/// acts as partial(a_1) then partial(a_2) ... then partial(a_r); the bar
/// reversal is what makes this composition sign-free and the monomials an
/// orthonormal family.
ExtPolynomial apply_operator(const ExtPolynomial& p, const ExtPolynomial& q);

/// <p, q>: coefficientwise dot product over the monomial basis.  Equals the
/// constant term of apply_operator(p, q); the equality of the two routes is
/// enforced by the test suite.
Rational inner_product(const ExtPolynomial& p, const ExtPolynomial& q);

/// Substitution theta_i -> theta_{i+1}: embeds R_n into R_{n+1}.
ExtPolynomial shift_up(const ExtPolynomial& p);

/// Text form of the shared polynomial grammar, e.g. "3/2*t1*t3 - t2".
/// Terms are printed lex-descending; the zero polynomial prints as "0".
std::string to_string(const ExtPolynomial& p);

/// Parses the grammar
///   poly  := [sign] term { sign term }        sign := '+' | '-'
///   term  := coeff | coeff '*' mono | mono
///   coeff := integer | integer '/' positive-integer
///   mono  := 't' index { '*' 't' index }
/// Variable order and sign are normalized through the monomial product; a
/// repeated variable inside one mono yields the zero term.
ExtPolynomial parse_poly(const std::string& text, int n);

/// {"n": N, "terms": [{"subset": [...], "coeff": "p/q"}, ...]}
std::string to_json(const ExtPolynomial& p);
ExtPolynomial poly_from_json(const std::string& text);

std::ostream& operator<<(std::ostream& os, const ExtPolynomial& p);

}  // namespace eqsym

#endif
