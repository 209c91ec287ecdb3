#ifndef EQSYM_BINOMIAL_HPP
#define EQSYM_BINOMIAL_HPP

#include <cstdint>

namespace eqsym {

/// C(n, k) for n <= 64. Every value fits in 64 bits; intermediates use a
/// 128-bit product so the multiplicative formula never overflows.
inline std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n || n < 0) return 0;
  if (k > n - k) k = n - k;
  unsigned __int128 r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
  }
  return static_cast<std::uint64_t>(r);
}

}  // namespace eqsym

#endif
