#include "eqsym/ballot.hpp"

#include <algorithm>

#include "eqsym/binomial.hpp"
#include "eqsym/caps.hpp"

namespace eqsym {

BinarySeq BinarySeq::from_string(const std::string& s) {
  check_var_count(static_cast<int>(s.size()));
  std::uint64_t bits = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '1')
      bits |= std::uint64_t{1} << i;
    else if (s[i] != '0')
      throw ParseError("binary sequence may contain only '0' and '1': '" + s + "'");
  }
  return BinarySeq(static_cast<int>(s.size()), bits);
}

std::string BinarySeq::to_string() const {
  std::string s(static_cast<std::size_t>(n_), '0');
  for (int i = 1; i <= n_; ++i)
    if (bit(i)) s[static_cast<std::size_t>(i - 1)] = '1';
  return s;
}

bool is_ballot(const BinarySeq& alpha) { return !first_break(alpha).has_value(); }

std::optional<int> first_break(const BinarySeq& alpha) {
  int ones = 0;
  for (int r = 1; r <= alpha.length(); ++r) {
    if (alpha.bit(r)) ++ones;
    if (2 * ones > r) return r;
  }
  return std::nullopt;
}

std::vector<int> break_positions(const BinarySeq& alpha) {
  std::vector<int> out;
  int ones = 0;
  for (int r = 1; r <= alpha.length(); ++r) {
    if (alpha.bit(r)) ++ones;
    if (2 * ones > r) out.push_back(r);
  }
  return out;
}

bool breaks_only_at_rightmost_one(const BinarySeq& alpha) {
  if (alpha.bits() == 0)
    throw PreconditionError("sequence has no 1, so there is no rightmost 1");
  const int last_one = 64 - std::countl_zero(alpha.bits());
  const std::vector<int> breaks = break_positions(alpha);
  return breaks.size() == 1 && breaks.front() == last_one;
}

std::vector<BinarySeq> enumerate_sequences(int n, SeqFilter filter) {
  check_enumeration_cap(n);
  std::vector<BinarySeq> out;
  const std::uint64_t count = std::uint64_t{1} << n;
  // Reading a word as a binary number with position 1 as the most significant
  // digit makes numeric order equal lex order.
  for (std::uint64_t v = 0; v < count; ++v) {
    std::uint64_t bits = 0;
    for (int i = 1; i <= n; ++i)
      if ((v >> (n - i)) & 1) bits |= std::uint64_t{1} << (i - 1);
    BinarySeq seq(n, bits);
    bool keep = true;
    switch (filter) {
      case SeqFilter::all: break;
      case SeqFilter::ballot: keep = is_ballot(seq); break;
      case SeqFilter::non_ballot: keep = !is_ballot(seq); break;
      case SeqFilter::minimal_gb: keep = bits != 0 && breaks_only_at_rightmost_one(seq); break;
    }
    if (keep) out.push_back(seq);
  }
  return out;
}

bool is_noncrossing(const NonCrossingPairing& c) {
  const auto& ps = c.pairs;
  for (std::size_t r = 0; r < ps.size(); ++r) {
    if (ps[r].first < 1 || ps[r].first >= ps[r].second) return false;
    if (r + 1 < ps.size() && ps[r].second >= ps[r + 1].second) return false;
  }
  for (std::size_t r = 0; r < ps.size(); ++r) {
    for (std::size_t s = r + 1; s < ps.size(); ++s) {
      const auto [ir, jr] = ps[r];
      const auto [is, js] = ps[s];
      const bool disjoint = ir < jr && jr < is && is < js;
      const bool nested = is < ir && ir < jr && jr < js;
      if (!disjoint && !nested) return false;
    }
  }
  return true;
}

NonCrossingPairing pairing_from_ballot(const BinarySeq& alpha) {
  if (!is_ballot(alpha))
    throw PreconditionError("pairing requires a ballot sequence, got " + alpha.to_string());
  NonCrossingPairing out;
  std::vector<int> open;
  for (int i = 1; i <= alpha.length(); ++i) {
    if (alpha.bit(i)) {
      out.pairs.emplace_back(open.back(), i);  // ballot: an open position exists
      open.pop_back();
    } else {
      open.push_back(i);
    }
  }
  return out;  // closers already increase
}

namespace {

// Non-crossing structure splits at the partner of the last point: pairs fit
// either inside (i, hi) or entirely left of i.
void collect_pairings(int lo, int hi, std::vector<NonCrossingPairing>& out) {
  if (lo > hi) {
    out.push_back({});
    return;
  }
  std::vector<NonCrossingPairing> without;
  collect_pairings(lo, hi - 1, without);
  out.insert(out.end(), without.begin(), without.end());
  for (int i = lo; i < hi; ++i) {
    std::vector<NonCrossingPairing> left, inside;
    collect_pairings(lo, i - 1, left);
    collect_pairings(i + 1, hi - 1, inside);
    for (const auto& l : left) {
      for (const auto& in : inside) {
        NonCrossingPairing p = l;
        p.pairs.insert(p.pairs.end(), in.pairs.begin(), in.pairs.end());
        p.pairs.emplace_back(i, hi);
        std::sort(p.pairs.begin(), p.pairs.end(),
                  [](const auto& a, const auto& b) { return a.second < b.second; });
        out.push_back(std::move(p));
      }
    }
  }
}

}  // namespace

std::vector<NonCrossingPairing> all_noncrossing_pairings(int n) {
  check_var_count(n);
  std::vector<NonCrossingPairing> out;
  collect_pairings(1, n, out);
  return out;
}

std::uint64_t f_shape(int n, int k) {
  check_var_count(n);
  if (k < 0 || 2 * k > n)
    throw PreconditionError("tableau shape parameter k must satisfy 0 <= k <= n/2");
  return binomial(n, k) - binomial(n, k - 1);
}

}  // namespace eqsym
