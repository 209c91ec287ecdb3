#include "eqsym/poly.hpp"

#include <algorithm>

namespace eqsym {

std::vector<std::uint64_t> degree_masks_desc(int n, int k) {
  check_var_count(n);
  if (k < 0 || k > n) return {};
  // Lex-descending indicator strings are exactly the prev_permutation chain
  // starting from 1^k 0^(n-k).
  std::string s(static_cast<std::size_t>(k), '1');
  s.append(static_cast<std::size_t>(n - k), '0');
  std::vector<std::uint64_t> out;
  do {
    std::uint64_t mask = 0;
    for (int i = 0; i < n; ++i)
      if (s[static_cast<std::size_t>(i)] == '1') mask |= var_bit(i + 1);
    out.push_back(mask);
  } while (std::prev_permutation(s.begin(), s.end()));
  return out;
}

bool ExtPolynomial::is_homogeneous(int* degree) const {
  int d = 0;
  bool first = true;
  for (const auto& [mask, c] : terms_) {
    const int dm = std::popcount(mask);
    if (first) {
      d = dm;
      first = false;
    } else if (dm != d) {
      return false;
    }
  }
  if (degree) *degree = d;
  return true;
}

ExtPolynomial ExtPolynomial::homogeneous_part(int k) const {
  ExtPolynomial out(n_);
  for (const auto& [mask, c] : terms_)
    if (std::popcount(mask) == k) out.add_term(mask, c);
  return out;
}

int ExtPolynomial::degree() const {
  int d = -1;
  for (const auto& [mask, c] : terms_) d = std::max(d, std::popcount(mask));
  return d;
}

ExtPolynomial& ExtPolynomial::operator+=(const ExtPolynomial& rhs) {
  if (n_ != rhs.n_) throw DimensionMismatch("adding polynomials of different variable counts");
  for (const auto& [mask, c] : rhs.terms_) add_term(mask, c);
  return *this;
}

ExtPolynomial& ExtPolynomial::operator-=(const ExtPolynomial& rhs) {
  if (n_ != rhs.n_)
    throw DimensionMismatch("subtracting polynomials of different variable counts");
  for (const auto& [mask, c] : rhs.terms_) add_term(mask, -c);
  return *this;
}

ExtPolynomial& ExtPolynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [mask, coeff] : terms_) coeff *= c;
  return *this;
}

ExtPolynomial operator*(const ExtPolynomial& lhs, const ExtPolynomial& rhs) {
  if (lhs.n_ != rhs.n_)
    throw DimensionMismatch("multiplying polynomials of different variable counts");
  ExtPolynomial out(lhs.n_);
  for (const auto& [ma, ca] : lhs.terms_) {
    for (const auto& [mb, cb] : rhs.terms_) {
      if (ma & mb) continue;
      Rational c = ca * cb;
      if (mul_sign(ma, mb) < 0) c = -c;
      out.add_term(ma | mb, c);
    }
  }
  return out;
}

ExtPolynomial partial(int i, const ExtPolynomial& p) {
  if (i < 1 || i > p.vars())
    throw PreconditionError("partial index " + std::to_string(i) + " out of range");
  const std::uint64_t bit = var_bit(i);
  const std::uint64_t below = bit - 1;
  ExtPolynomial out(p.vars());
  for (const auto& [mask, c] : p.terms()) {
    if (!(mask & bit)) continue;
    const bool flip = std::popcount(mask & below) & 1;
    out.add_term(mask ^ bit, flip ? -c : c);
  }
  return out;
}

ExtPolynomial bar(const ExtPolynomial& p) {
  ExtPolynomial out(p.vars());
  for (const auto& [mask, c] : p.terms()) {
    const int r = std::popcount(mask);
    const bool flip = (r * (r - 1) / 2) & 1;
    out.add_term(mask, flip ? -c : c);
  }
  return out;
}

ExtPolynomial apply_operator(const ExtPolynomial& p, const ExtPolynomial& q) {
  if (p.vars() != q.vars())
    throw DimensionMismatch("operator application across different variable counts");
  ExtPolynomial out(p.vars());
  for (const auto& [mask, c] : p.terms()) {
    ExtPolynomial acc = q;
    for (std::uint64_t rest = mask; rest != 0 && !acc.is_zero(); rest &= rest - 1)
      acc = partial(std::countr_zero(rest) + 1, acc);
    acc *= c;
    out += acc;
  }
  return out;
}

Rational inner_product(const ExtPolynomial& p, const ExtPolynomial& q) {
  if (p.vars() != q.vars())
    throw DimensionMismatch("inner product across different variable counts");
  const bool p_smaller = p.term_count() <= q.term_count();
  const ExtPolynomial& a = p_smaller ? p : q;
  const ExtPolynomial& b = p_smaller ? q : p;
  Rational sum = 0;
  for (const auto& [mask, c] : a.terms()) sum += c * b.coeff(mask);
  return sum;
}

ExtPolynomial shift_up(const ExtPolynomial& p) {
  check_var_count(p.vars() + 1);
  ExtPolynomial out(p.vars() + 1);
  for (const auto& [mask, c] : p.terms()) out.add_term(mask << 1, c);
  return out;
}

}  // namespace eqsym
