#include "eqsym/harmonics.hpp"

#include <unordered_map>

#include "eqsym/linalg.hpp"

namespace eqsym {

ExtPolynomial d1(const ExtPolynomial& p) {
  ExtPolynomial out(p.vars());
  for (int i = 1; i <= p.vars(); ++i) out += partial(i, p);
  return out;
}

ExtPolynomial d2(const ExtPolynomial& p) {
  ExtPolynomial out(p.vars());
  for (int i = 1; i <= p.vars(); ++i) {
    const ExtPolynomial di = partial(i, p);
    if (di.is_zero()) continue;
    for (int j = i + 1; j <= p.vars(); ++j) out += partial(j, di);
  }
  return out;
}

bool is_harmonic(const ExtPolynomial& p) { return d1(p).is_zero() && d2(p).is_zero(); }

ExtPolynomial delta_poly(const NonCrossingPairing& c, int n) {
  if (!is_noncrossing(c)) throw PreconditionError("pairing is not non-crossing");
  ExtPolynomial out = ExtPolynomial::one(n);
  for (const auto& [i, j] : c.pairs) {
    if (j > n) throw PreconditionError("pairing endpoint exceeds variable count");
    out *= ExtPolynomial::variable(n, j) - ExtPolynomial::variable(n, i);
  }
  return out;
}

HarmonicBasis harmonic_candidate_basis(int n) {
  check_var_count(n);
  HarmonicBasis basis;
  basis.n = n;
  basis.by_degree.assign(static_cast<std::size_t>(n / 2) + 1, {});
  for (const BinarySeq& alpha : enumerate_sequences(n, SeqFilter::ballot)) {
    const NonCrossingPairing c = pairing_from_ballot(alpha);
    basis.by_degree[c.size()].emplace_back(alpha, delta_poly(c, n));
  }
  return basis;
}

std::vector<ExtPolynomial> harmonic_kernel(int n, int k) {
  check_var_count(n);
  if (k < 0 || k > n) throw PreconditionError("kernel degree outside [0, n]");
  const std::vector<std::uint64_t> cols = degree_masks_desc(n, k);
  const std::vector<std::uint64_t> rows1 = k >= 1 ? degree_masks_desc(n, k - 1) : std::vector<std::uint64_t>{};
  const std::vector<std::uint64_t> rows2 = k >= 2 ? degree_masks_desc(n, k - 2) : std::vector<std::uint64_t>{};

  std::unordered_map<std::uint64_t, int> row_index1, row_index2;
  for (std::size_t r = 0; r < rows1.size(); ++r) row_index1[rows1[r]] = static_cast<int>(r);
  for (std::size_t r = 0; r < rows2.size(); ++r) row_index2[rows2[r]] = static_cast<int>(r);

  RatMatrix m(static_cast<int>(rows1.size() + rows2.size()), static_cast<int>(cols.size()));
  for (std::size_t c = 0; c < cols.size(); ++c) {
    const ExtPolynomial mono = ExtPolynomial::monomial(n, cols[c]);
    for (const auto& [mask, coeff] : d1(mono).terms())
      m.at(row_index1.at(mask), static_cast<int>(c)) = coeff;
    for (const auto& [mask, coeff] : d2(mono).terms())
      m.at(static_cast<int>(rows1.size()) + row_index2.at(mask), static_cast<int>(c)) = coeff;
  }

  std::vector<ExtPolynomial> basis;
  for (const auto& v : nullspace(std::move(m))) {
    ExtPolynomial p(n);
    for (std::size_t c = 0; c < cols.size(); ++c) p.add_term(cols[c], v[c]);
    basis.push_back(std::move(p));
  }
  return basis;
}

Monomial smallest_lex_monomial(const ExtPolynomial& delta) {
  const auto trailing = delta.trailing_term();
  if (!trailing) throw PreconditionError("zero polynomial has no monomials");
  return trailing->first;
}

}  // namespace eqsym
