#ifndef EQSYM_MONOMIAL_HPP
#define EQSYM_MONOMIAL_HPP

#include <bit>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "eqsym/caps.hpp"
#include "eqsym/errors.hpp"

namespace eqsym {

inline void check_var_count(int n) {
  if (n < 0 || n > kMaxVars)
    throw PreconditionError("variable count must lie in [0, 64], got " + std::to_string(n));
}

/// Mask with the low n bits set.
inline std::uint64_t full_mask(int n) {
  return n == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
}

/// Bit for variable index i (1-based).
inline std::uint64_t var_bit(int i) { return std::uint64_t{1} << (i - 1); }

/// Number of pairs (a, b) with a in A, b in B and b < a.  This is the number
/// of adjacent interchanges needed to sort the concatenation of A and B, so
/// theta_A * theta_B = (-1)^{inversion_count} theta_{A u B} for disjoint
/// supports.
inline int inversion_count(std::uint64_t a, std::uint64_t b) {
  int count = 0;
  for (std::uint64_t rest = a; rest != 0; rest &= rest - 1) {
    const std::uint64_t below = (rest & -rest) - 1;
    count += std::popcount(b & below);
  }
  return count;
}

/// Sign of theta_A * theta_B for disjoint masks.
inline int mul_sign(std::uint64_t a, std::uint64_t b) {
  return (inversion_count(a, b) & 1) ? -1 : +1;
}

/// Exponent strings are compared left to right (theta_1 > ... > theta_n):
/// the mask owning the first differing position is the larger monomial.
inline bool lex_less_mask(std::uint64_t a, std::uint64_t b) {
  const std::uint64_t diff = a ^ b;
  if (diff == 0) return false;
  return (b >> std::countr_zero(diff)) & 1;
}

/// Strict weak order used as the term comparator of ExtPolynomial.
struct MonoLexLess {
  bool operator()(std::uint64_t a, std::uint64_t b) const { return lex_less_mask(a, b); }
};

/// Squarefree monomial theta_A over theta_1..theta_n.  The support
/// A subset of {1..n} is a bit mask with bit i-1 standing for index i, so
/// sign bookkeeping reduces to masked popcounts.
class Monomial {
public:
  Monomial() = default;

  Monomial(int n, std::uint64_t mask) : n_(n), mask_(mask) {
    check_var_count(n);
    if (mask & ~full_mask(n))
      throw PreconditionError("monomial support exceeds variable range");
  }

  static Monomial unit(int n) { return Monomial(n, 0); }

  static Monomial from_indices(int n, const std::vector<int>& indices) {
    std::uint64_t mask = 0;
    for (int i : indices) {
      if (i < 1 || i > n)
        throw PreconditionError("variable index " + std::to_string(i) + " out of range");
      if (mask & var_bit(i))
        throw PreconditionError("repeated variable index " + std::to_string(i));
      mask |= var_bit(i);
    }
    return Monomial(n, mask);
  }

  int vars() const { return n_; }
  std::uint64_t mask() const { return mask_; }
  int degree() const { return std::popcount(mask_); }
  bool contains(int i) const { return i >= 1 && i <= n_ && (mask_ & var_bit(i)); }

  /// Support as a sorted index list.
  std::vector<int> indices() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(degree()));
    for (std::uint64_t rest = mask_; rest != 0; rest &= rest - 1)
      out.push_back(std::countr_zero(rest) + 1);
    return out;
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;

private:
  int n_ = 0;
  std::uint64_t mask_ = 0;
};

struct SignedMonomial {
  int sign = 0;  // -1, 0 or +1
  Monomial product;
};

/// theta_A * theta_B: zero when the supports intersect, otherwise the union
/// with the interchange sign.
inline SignedMonomial mul_monomial(const Monomial& a, const Monomial& b) {
  if (a.vars() != b.vars())
    throw DimensionMismatch("monomial product across different variable counts");
  if (a.mask() & b.mask()) return {0, Monomial::unit(a.vars())};
  return {mul_sign(a.mask(), b.mask()), Monomial(a.vars(), a.mask() | b.mask())};
}

inline std::strong_ordering lex_compare(const Monomial& a, const Monomial& b) {
  if (a.vars() != b.vars())
    throw DimensionMismatch("lex comparison across different variable counts");
  if (a.mask() == b.mask()) return std::strong_ordering::equal;
  return lex_less_mask(a.mask(), b.mask()) ? std::strong_ordering::less
                                           : std::strong_ordering::greater;
}

/// All degree-k supports over n variables in lex-descending order.
std::vector<std::uint64_t> degree_masks_desc(int n, int k);

}  // namespace eqsym

#endif
