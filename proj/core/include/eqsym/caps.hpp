#ifndef EQSYM_CAPS_HPP
#define EQSYM_CAPS_HPP

namespace eqsym {

/// Hard limit on the number of variables: monomial supports are stored in a
/// single machine word.
inline constexpr int kMaxVars = 64;

/// Cap applied to operations that walk all 2^n sequences or monomials.
/// Defaults to 18; override with the environment variable EQSYM_MAX_N
/// (clamped to [1, 30]).
int enumeration_cap();

/// Throws CapExceeded when n > enumeration_cap().
void check_enumeration_cap(int n);

}  // namespace eqsym

#endif
