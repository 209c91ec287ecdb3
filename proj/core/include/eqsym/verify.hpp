#ifndef EQSYM_VERIFY_HPP
#define EQSYM_VERIFY_HPP

#include <string>
#include <vector>

namespace eqsym {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;  // counterexample or error text when failing
};

/// Runs the whole cross-check battery with every n-indexed family capped at
/// n_max (checks with a smaller documented range keep their own bound).
/// Randomized checks draw from a fixed seed, so runs are reproducible.
std::vector<CheckResult> run_verification(int n_max);

/// True iff every result passes.
bool all_passed(const std::vector<CheckResult>& results);

}  // namespace eqsym

#endif
