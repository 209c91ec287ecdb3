#include "eqsym/ideal.hpp"

#include <bit>

#include "eqsym/caps.hpp"
#include "eqsym/quasisym.hpp"

namespace eqsym {

GFamily::GFamily(int n) : n_(n) { check_var_count(n); }

const ExtPolynomial& GFamily::poly(const BinarySeq& alpha) {
  if (alpha.length() != n_)
    throw DimensionMismatch("sequence length " + std::to_string(alpha.length()) +
                            " does not match n = " + std::to_string(n_));
  return compute(alpha.bits());
}

const ExtPolynomial& GFamily::compute(std::uint64_t bits) {
  if (auto it = memo_.find(bits); it != memo_.end()) return it->second;

  ExtPolynomial result(n_);
  if (bits == 0) {
    result = ExtPolynomial::one(n_);
  } else {
    const int last = 64 - std::countl_zero(bits);          // rightmost 1
    int start = last;                                      // start of the final 1-run
    while (start > 1 && ((bits >> (start - 2)) & 1)) --start;

    if (start == 1) {
      result = fundamental(n_, std::popcount(bits));       // bits = 1^s 0^(n-s)
    } else {
      const int s = last - start + 1;
      const int k = start - 1;                             // position of the 0 being consumed
      const std::uint64_t run = ((std::uint64_t{1} << s) - 1) << (start - 1);
      const std::uint64_t u = bits & ~run;                 // prefix of length k-1
      const std::uint64_t shifted = u | (run >> 1);        // u 1^s 0^...
      const std::uint64_t dropped = u | (run >> 1 & ~(std::uint64_t{1} << (last - 2)));
      // u 1^(s-1) 0^...: the shifted run minus its last element
      const ExtPolynomial& left = compute(shifted);
      const ExtPolynomial& right = compute(dropped);
      const int sign = (std::popcount(u) & 1) ? -1 : +1;
      result = left - Rational(sign) * (ExtPolynomial::variable(n_, k) * right);
    }
  }
  return memo_.emplace(bits, std::move(result)).first->second;
}

Ideal::Ideal(int n) : n_(n), fam_(n) {}

std::vector<BinarySeq> Ideal::ideal_basis_index() const {
  return enumerate_sequences(n_, SeqFilter::non_ballot);
}

std::vector<BinarySeq> Ideal::minimal_groebner_index() const {
  return enumerate_sequences(n_, SeqFilter::minimal_gb);
}

NormalFormResult Ideal::normal_form(const ExtPolynomial& p) {
  if (p.vars() != n_) throw DimensionMismatch("polynomial has the wrong variable count");
  NormalFormResult res{p, p, {}};
  ExtPolynomial& work = res.normal_form;
  for (;;) {
    // Lex-largest monomial whose exponent word is not ballot.
    const std::uint64_t* offending = nullptr;
    Rational c;
    for (auto it = work.terms().rbegin(); it != work.terms().rend(); ++it) {
      if (!is_ballot(BinarySeq(n_, it->first))) {
        offending = &it->first;
        c = it->second;
        break;
      }
    }
    if (!offending) break;
    const BinarySeq gamma(n_, *offending);
    work -= c * fam_.poly(gamma);
    res.decomposition.emplace_back(gamma, c);
  }
  return res;
}

ExtPolynomial Ideal::reduce_by_minimal(const ExtPolynomial& p) {
  if (p.vars() != n_) throw DimensionMismatch("polynomial has the wrong variable count");
  const std::vector<BinarySeq> basis = minimal_groebner_index();
  ExtPolynomial work = p;
  for (;;) {
    bool reduced = false;
    // Scan terms lex-descending for one divisible by a basis leading term.
    for (auto it = work.terms().rbegin(); it != work.terms().rend(); ++it) {
      const std::uint64_t gamma = it->first;
      for (const BinarySeq& alpha : basis) {
        if ((alpha.bits() & gamma) != alpha.bits()) continue;
        const std::uint64_t cofactor = gamma & ~alpha.bits();
        const int sign = mul_sign(cofactor, alpha.bits());
        const Rational scale = it->second * sign;
        work -= scale * (ExtPolynomial::monomial(n_, cofactor) * fam_.poly(alpha));
        reduced = true;
        break;
      }
      if (reduced) break;
    }
    if (!reduced) return work;
  }
}

std::vector<Monomial> quotient_basis(int n) {
  std::vector<Monomial> out;
  for (const BinarySeq& beta : enumerate_sequences(n, SeqFilter::ballot))
    out.push_back(beta.to_monomial());
  return out;
}

std::vector<std::uint64_t> hilbert_series(int n) {
  check_var_count(n);
  std::vector<std::uint64_t> out;
  for (int k = 0; 2 * k <= n; ++k) out.push_back(f_shape(n, k));
  return out;
}

bool shift_identity_check(const BinarySeq& alpha) {
  const int n = alpha.length() + 1;
  check_var_count(n);
  GFamily small(alpha.length());
  GFamily big(n);

  const BinarySeq zero_alpha(n, alpha.bits() << 1);
  const BinarySeq one_alpha(n, (alpha.bits() << 1) | 1);

  if (big.poly(zero_alpha) != shift_up(small.poly(alpha))) return false;

  const ExtPolynomial residue =
      big.poly(one_alpha) - ExtPolynomial::variable(n, 1) * big.poly(zero_alpha);
  for (const auto& [mask, c] : residue.terms())
    if (mask & 1) return false;  // theta_1 must not appear
  return true;
}

}  // namespace eqsym
