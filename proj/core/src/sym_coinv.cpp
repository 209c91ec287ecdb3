#include "eqsym/sym_coinv.hpp"

#include "eqsym/caps.hpp"
#include "eqsym/linalg.hpp"
#include "eqsym/quasisym.hpp"

namespace eqsym {

ExtPolynomial reduce_mod_j(const ExtPolynomial& p) {
  const int n = p.vars();
  if (n == 0) throw PreconditionError("reduction needs at least one variable");
  const std::uint64_t top = var_bit(n);
  const ExtPolynomial sum = fundamental(n - 1, 1);
  ExtPolynomial out(n - 1);
  for (const auto& [mask, c] : p.terms()) {
    if (!(mask & top)) {
      out.add_term(mask, c);
      continue;
    }
    // theta_A0 * theta_n with theta_n = -(theta_1 + ... + theta_{n-1});
    // theta_n sits rightmost, so no interchange sign is involved.
    out -= c * (ExtPolynomial::monomial(n - 1, mask ^ top) * sum);
  }
  return out;
}

TensorComponents tensor_decompose(const Monomial& m) {
  const int n = m.vars();
  if (n == 0) throw PreconditionError("decomposition needs at least one variable");
  const std::uint64_t top = var_bit(n);
  TensorComponents out{ExtPolynomial(n - 1), ExtPolynomial(n - 1)};
  if (!(m.mask() & top)) {
    out.unit_part.add_term(m.mask(), 1);
    return out;
  }
  const ExtPolynomial base = ExtPolynomial::monomial(n - 1, m.mask() ^ top);
  out.unit_part = -(base * fundamental(n - 1, 1));
  out.f1_part = base;
  return out;
}

int coinvariant_dim(int n) {
  check_enumeration_cap(n);
  if (n == 0) throw PreconditionError("dimension needs at least one variable");
  SpanBuilder span(n - 1);
  const std::uint64_t count = std::uint64_t{1} << n;
  for (std::uint64_t mask = 0; mask < count; ++mask)
    span.insert(reduce_mod_j(ExtPolynomial::monomial(n, mask)));
  return span.rank();
}

bool check_freeness(int n) {
  check_enumeration_cap(n);
  if (n < 1) throw PreconditionError("freeness check needs at least one variable");
  if (coinvariant_dim(n) != (1 << (n - 1))) return false;

  // Full rank of the decomposition map, with the pair (u, v) embedded into
  // R_n as u + v * theta_n (an injective linear encoding of the target).
  SpanBuilder span(n);
  const ExtPolynomial top = ExtPolynomial::variable(n, n);
  const std::uint64_t count = std::uint64_t{1} << n;
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    const TensorComponents tc = tensor_decompose(Monomial(n, mask));
    ExtPolynomial unit_n(n), f1_n(n);
    for (const auto& [m, c] : tc.unit_part.terms()) unit_n.add_term(m, c);
    for (const auto& [m, c] : tc.f1_part.terms()) f1_n.add_term(m, c);
    span.insert(unit_n + f1_n * top);
  }
  return span.rank() == static_cast<int>(count);
}

}  // namespace eqsym
