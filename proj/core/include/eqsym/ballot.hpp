#ifndef EQSYM_BALLOT_HPP
#define EQSYM_BALLOT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "eqsym/monomial.hpp"

namespace eqsym {

/// Word alpha in {0,1}^n.  Position 1 is the leftmost letter; bit i-1 of the
/// packed word stores position i, which makes a monomial support and its
/// exponent string the same mask.
class BinarySeq {
public:
  BinarySeq() = default;

  BinarySeq(int n, std::uint64_t bits) : n_(n), bits_(bits) {
    check_var_count(n);
    if (bits & ~full_mask(n)) throw PreconditionError("sequence bits exceed its length");
  }

  static BinarySeq from_string(const std::string& s);
  static BinarySeq from_monomial(const Monomial& m) { return BinarySeq(m.vars(), m.mask()); }

  int length() const { return n_; }
  std::uint64_t bits() const { return bits_; }
  bool bit(int i) const { return (bits_ >> (i - 1)) & 1; }  // 1 <= i <= n
  int ones() const { return std::popcount(bits_); }
  int prefix_ones(int r) const { return std::popcount(bits_ & full_mask(r)); }

  std::string to_string() const;
  Monomial to_monomial() const { return Monomial(n_, bits_); }

  friend bool operator==(const BinarySeq&, const BinarySeq&) = default;

private:
  int n_ = 0;
  std::uint64_t bits_ = 0;
};

/// Left-to-right comparison of equal-length words.
inline bool lex_less(const BinarySeq& a, const BinarySeq& b) {
  return lex_less_mask(a.bits(), b.bits());
}

/// Ballot condition: every prefix of length r holds at most r/2 ones.
bool is_ballot(const BinarySeq& alpha);

/// Least r whose prefix violates the ballot condition (2*ones > r), if any.
std::optional<int> first_break(const BinarySeq& alpha);

/// All positions where the ballot condition fails.
std::vector<int> break_positions(const BinarySeq& alpha);

/// True iff the break positions are exactly {position of the last 1}.
/// Requires at least one 1.
bool breaks_only_at_rightmost_one(const BinarySeq& alpha);

enum class SeqFilter { all, ballot, non_ballot, minimal_gb };

/// All length-n sequences passing the filter, in lex order.  Subject to the
/// enumeration cap.
std::vector<BinarySeq> enumerate_sequences(int n, SeqFilter filter);

/// List of pairs (i_r, j_r), i_r < j_r, pairwise nested or disjoint,
/// canonically ordered by increasing j.
struct NonCrossingPairing {
  std::vector<std::pair<int, int>> pairs;

  std::size_t size() const { return pairs.size(); }
  friend bool operator==(const NonCrossingPairing&, const NonCrossingPairing&) = default;
};

/// Validates both conditions: increasing closers j_1 < ... < j_k, and every
/// two pairs nested or disjoint.
bool is_noncrossing(const NonCrossingPairing& c);

/// Parenthesis matching 0 -> '(' and 1 -> ')': each 1 pairs with the nearest
/// unmatched 0 on its left.  A ballot word matches every 1, so the result has
/// one pair per 1; unmatched 0s are simply dropped.
NonCrossingPairing pairing_from_ballot(const BinarySeq& alpha);

/// Every non-crossing pairing with endpoints in [n] (all lengths k), ordered
/// arbitrarily.  Intended for exhaustive cross-checks at small n.
std::vector<NonCrossingPairing> all_noncrossing_pairings(int n);

/// Number of ballot sequences of length n with exactly k ones, equal to the
/// two-row standard tableau count: binomial(n,k) - binomial(n,k-1).
/// Requires 0 <= k <= n/2.
std::uint64_t f_shape(int n, int k);

}  // namespace eqsym

#endif
