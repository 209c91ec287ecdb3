#include "eqsym/quasisym.hpp"

#include "eqsym/binomial.hpp"
#include "eqsym/caps.hpp"

namespace eqsym {

ExtPolynomial pi(int i, const ExtPolynomial& p) {
  if (i < 1 || i >= p.vars())
    throw PreconditionError("pi index " + std::to_string(i) + " outside [1, n)");
  const std::uint64_t lo = var_bit(i);
  const std::uint64_t hi = var_bit(i + 1);
  ExtPolynomial out(p.vars());
  for (const auto& [mask, c] : p.terms()) {
    std::uint64_t image = mask;
    const bool has_lo = mask & lo;
    const bool has_hi = mask & hi;
    if (has_lo != has_hi) image = mask ^ (lo | hi);  // shift the occupied index
    out.add_term(image, c);
  }
  return out;
}

ExtPolynomial fundamental(int n, int r) {
  check_var_count(n);
  if (r < 0) throw PreconditionError("fundamental degree must be nonnegative");
  ExtPolynomial out(n);
  for (const std::uint64_t mask : degree_masks_desc(n, r)) out.add_term(mask, 1);
  return out;
}

bool is_quasisymmetric(const ExtPolynomial& p) {
  for (int i = 1; i < p.vars(); ++i)
    if (pi(i, p) != p) return false;
  return true;
}

long long product_coefficient(int r, int s) {
  if (r < 0 || s < 0) throw PreconditionError("product coefficient indices must be nonnegative");
  if ((r & 1) && (s & 1)) return 0;
  return static_cast<long long>(binomial((r + s) / 2, r / 2));
}

long long product_coefficient_bruteforce(int r, int s) {
  if (r < 0 || s < 0) throw PreconditionError("product coefficient indices must be nonnegative");
  const int m = r + s;
  if (m > 24)
    throw CapExceeded("brute-force coefficient limited to r + s <= 24, got " + std::to_string(m));
  if (r == 0 || s == 0) return 1;
  // Walk the r-subsets of {1..m} with Gosper's hack.
  long long sum = 0;
  const std::uint64_t limit = std::uint64_t{1} << m;
  std::uint64_t a = (std::uint64_t{1} << r) - 1;
  while (a < limit) {
    const std::uint64_t complement = full_mask(m) & ~a;
    sum += (inversion_count(a, complement) & 1) ? -1 : +1;
    const std::uint64_t c = a & -a;
    const std::uint64_t rr = a + c;
    a = (((rr ^ a) >> 2) / c) | rr;
  }
  return sum;
}

std::vector<std::vector<long long>> generating_series_table(int max_degree) {
  if (max_degree < 0) throw PreconditionError("series degree must be nonnegative");
  const std::size_t dim = static_cast<std::size_t>(max_degree) + 1;
  std::vector<std::vector<long long>> c(dim, std::vector<long long>(dim, 0));
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t s = 0; s < dim; ++s) {
      long long v = 0;
      if ((r == 0 && s == 0) || (r == 1 && s == 0) || (r == 0 && s == 1)) v = 1;
      if (r >= 2) v += c[r - 2][s];
      if (s >= 2) v += c[r][s - 2];
      c[r][s] = v;
    }
  }
  return c;
}

}  // namespace eqsym
