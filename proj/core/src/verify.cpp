#include "eqsym/verify.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <random>
#include <set>
#include <sstream>

#include "eqsym/ballot.hpp"
#include "eqsym/binomial.hpp"
#include "eqsym/harmonics.hpp"
#include "eqsym/ideal.hpp"
#include "eqsym/linalg.hpp"
#include "eqsym/quasisym.hpp"
#include "eqsym/sym_coinv.hpp"

namespace eqsym {

namespace {

using Failure = std::optional<std::string>;

ExtPolynomial random_poly(std::mt19937_64& rng, int n, int max_terms = 8) {
  std::uniform_int_distribution<std::uint64_t> mask_dist(0, full_mask(n));
  std::uniform_int_distribution<int> coeff_dist(-3, 3);
  std::uniform_int_distribution<int> count_dist(0, max_terms);
  ExtPolynomial p(n);
  const int terms = count_dist(rng);
  for (int t = 0; t < terms; ++t) p.add_term(mask_dist(rng), coeff_dist(rng));
  return p;
}

std::string show(const ExtPolynomial& p) { return to_string(p); }

Failure check_anticommutation(int n_max) {
  for (int n = 1; n <= std::min(8, n_max); ++n) {
    for (int i = 1; i <= n; ++i) {
      const ExtPolynomial ti = ExtPolynomial::variable(n, i);
      if (!(ti * ti).is_zero()) return "theta_" + std::to_string(i) + "^2 != 0 at n=" + std::to_string(n);
      for (int j = 1; j <= n; ++j) {
        if (i == j) continue;
        const ExtPolynomial tj = ExtPolynomial::variable(n, j);
        if (ti * tj != -(tj * ti))
          return "theta_i theta_j != -theta_j theta_i for i=" + std::to_string(i) +
                 ", j=" + std::to_string(j);
      }
    }
  }
  return std::nullopt;
}

Failure check_graded_commutativity(int n_max) {
  std::mt19937_64 rng(11);
  for (int n = 1; n <= std::min(8, n_max); ++n) {
    for (int iter = 0; iter < 20; ++iter) {
      std::uniform_int_distribution<int> deg(0, n);
      const int r = deg(rng), s = deg(rng);
      const ExtPolynomial p = random_poly(rng, n).homogeneous_part(r);
      const ExtPolynomial q = random_poly(rng, n).homogeneous_part(s);
      ExtPolynomial rhs = q * p;
      if ((r * s) & 1) rhs = -rhs;
      if (p * q != rhs)
        return "graded commutativity failed at n=" + std::to_string(n) + ", p=" + show(p) +
               ", q=" + show(q);
    }
  }
  return std::nullopt;
}

Failure check_associativity(int n_max) {
  std::mt19937_64 rng(12);
  for (int n = 1; n <= std::min(8, n_max); ++n) {
    for (int iter = 0; iter < 20; ++iter) {
      const ExtPolynomial p = random_poly(rng, n), q = random_poly(rng, n),
                          r = random_poly(rng, n);
      if ((p * q) * r != p * (q * r))
        return "associativity failed at n=" + std::to_string(n);
    }
  }
  return std::nullopt;
}

Failure check_partial_relations(int n_max) {
  std::mt19937_64 rng(13);
  for (int n = 1; n <= std::min(8, n_max); ++n) {
    for (int iter = 0; iter < 10; ++iter) {
      const ExtPolynomial p = random_poly(rng, n);
      for (int i = 1; i <= n; ++i) {
        if (!partial(i, partial(i, p)).is_zero())
          return "d_i d_i != 0 at n=" + std::to_string(n);
        for (int j = i + 1; j <= n; ++j) {
          if (partial(i, partial(j, p)) != -partial(j, partial(i, p)))
            return "d_i d_j != -d_j d_i at n=" + std::to_string(n);
        }
      }
    }
  }
  return std::nullopt;
}

Failure check_inner_product_routes(int n_max) {
  std::mt19937_64 rng(14);
  for (int n = 1; n <= std::min(8, n_max); ++n) {
    for (int iter = 0; iter < 25; ++iter) {
      const ExtPolynomial p = random_poly(rng, n), q = random_poly(rng, n);
      const Rational dot = inner_product(p, q);
      const Rational via_op = apply_operator(p, q).coeff(0);
      if (dot != via_op)
        return "inner product routes disagree at n=" + std::to_string(n) + ": p=" + show(p) +
               ", q=" + show(q);
    }
  }
  return std::nullopt;
}

Failure check_bar_involution(int n_max) {
  std::mt19937_64 rng(15);
  for (int n = 0; n <= std::min(8, n_max); ++n) {
    for (int iter = 0; iter < 10; ++iter) {
      const ExtPolynomial p = random_poly(rng, n);
      if (bar(bar(p)) != p) return "bar(bar(p)) != p at n=" + std::to_string(n);
    }
  }
  return std::nullopt;
}

Failure check_lex_order(int n_max) {
  std::mt19937_64 rng(16);
  const int n = std::min(8, std::max(1, n_max));
  std::uniform_int_distribution<std::uint64_t> mask_dist(0, full_mask(n));
  for (int iter = 0; iter < 200; ++iter) {
    const std::uint64_t a = mask_dist(rng), b = mask_dist(rng), c = mask_dist(rng);
    const bool ab = lex_less_mask(a, b), ba = lex_less_mask(b, a);
    if (a == b && (ab || ba)) return "lex order not irreflexive";
    if (a != b && ab == ba) return "lex order not total";
    if (lex_less_mask(a, b) && lex_less_mask(b, c) && !lex_less_mask(a, c))
      return "lex order not transitive";
    if ((a & b) == 0) {
      const auto prod = mul_monomial(Monomial(n, a), Monomial(n, b));
      if (prod.sign == 0 || prod.product.mask() != (a | b))
        return "product of disjoint monomials is not their union";
    }
  }
  return std::nullopt;
}

Failure check_fundamental_product_rule(int n_max) {
  for (int n = 1; n <= std::min(10, n_max); ++n) {
    for (int r = 0; r <= n; ++r) {
      for (int s = 0; r + s <= n; ++s) {
        const ExtPolynomial lhs = fundamental(n, r) * fundamental(n, s);
        const ExtPolynomial rhs =
            Rational(product_coefficient(r, s)) * fundamental(n, r + s);
        if (lhs != rhs)
          return "F product rule failed at n=" + std::to_string(n) + ", r=" + std::to_string(r) +
                 ", s=" + std::to_string(s);
      }
    }
  }
  return std::nullopt;
}

Failure check_coefficient_bruteforce(int) {
  for (int r = 0; r <= 16; ++r) {
    for (int s = 0; r + s <= 16; ++s) {
      if (product_coefficient(r, s) != product_coefficient_bruteforce(r, s))
        return "closed form and signed sum disagree at r=" + std::to_string(r) +
               ", s=" + std::to_string(s);
    }
  }
  return std::nullopt;
}

Failure check_coefficient_symmetry(int) {
  for (int r = 0; r <= 16; ++r) {
    for (int s = 0; s <= 16; ++s) {
      if (product_coefficient(r, s) != product_coefficient(s, r))
        return "a_{r,s} != a_{s,r} at r=" + std::to_string(r) + ", s=" + std::to_string(s);
      if ((r & 1) && (s & 1)) {
        if (product_coefficient(r, s) != 0)
          return "odd-odd coefficient nonzero at r=" + std::to_string(r) +
                 ", s=" + std::to_string(s);
        if (r + s <= 16 && product_coefficient_bruteforce(r, s) != 0)
          return "odd-odd signed sum nonzero at r=" + std::to_string(r) +
                 ", s=" + std::to_string(s);
      }
    }
  }
  return std::nullopt;
}

Failure check_pi_not_multiplicative(int n_max) {
  if (n_max < 2) return std::nullopt;
  const int n = 2;
  const ExtPolynomial t1 = ExtPolynomial::variable(n, 1);
  const ExtPolynomial t2 = ExtPolynomial::variable(n, 2);
  const ExtPolynomial lhs = pi(1, t1 * t2);
  if (lhs != t1 * t2) return "pi_1(theta_1 theta_2) should be fixed";
  if (lhs != -(pi(1, t1) * pi(1, t2)))
    return "pi_1(theta_1 theta_2) != -pi_1(theta_1) pi_1(theta_2)";
  return std::nullopt;
}

Failure check_quasisymmetric_invariance(int n_max) {
  std::mt19937_64 rng(17);
  for (int n = 1; n <= std::min(8, n_max); ++n) {
    for (int r = 0; r <= n; ++r) {
      if (!is_quasisymmetric(fundamental(n, r)))
        return "F_{1^" + std::to_string(r) + "} not invariant at n=" + std::to_string(n);
    }
    // linear combinations stay invariant
    std::uniform_int_distribution<int> deg(0, n), coeff(-5, 5);
    ExtPolynomial combo(n);
    for (int t = 0; t < 3; ++t) combo += Rational(coeff(rng)) * fundamental(n, deg(rng));
    if (!is_quasisymmetric(combo)) return "linear combination of F's not invariant";
    if (n >= 2 && is_quasisymmetric(ExtPolynomial::variable(n, 1)))
      return "theta_1 wrongly reported invariant";
  }
  return std::nullopt;
}

Failure check_squared_fundamental_powers(int n_max) {
  for (int n = 2; n <= std::min(10, n_max); ++n) {
    const ExtPolynomial f2 = fundamental(n, 2);
    ExtPolynomial power = ExtPolynomial::one(n);
    Rational factorial = 1;
    for (int k = 1; 2 * k <= n; ++k) {
      power *= f2;
      factorial *= k;
      if (power != factorial * fundamental(n, 2 * k))
        return "(F_{1^2})^k != k! F_{1^{2k}} at n=" + std::to_string(n) +
               ", k=" + std::to_string(k);
    }
  }
  return std::nullopt;
}

Failure check_generating_series(int) {
  const auto table = generating_series_table(16);
  for (int r = 0; r <= 16; ++r)
    for (int s = 0; r + s <= 16; ++s)
      if (table[r][s] != product_coefficient(r, s))
        return "series coefficient differs from a_{r,s} at r=" + std::to_string(r) +
               ", s=" + std::to_string(s);
  return std::nullopt;
}

Failure check_ballot_counts(int n_max) {
  static const std::vector<std::vector<std::uint64_t>> table = {
      {1}, {1, 1}, {1, 2}, {1, 3, 2}, {1, 4, 5}, {1, 5, 9, 5}, {1, 6, 14, 14},
      {1, 7, 20, 28, 14}, {1, 8, 27, 48, 42}};
  for (int n = 1; n <= std::min(16, n_max); ++n) {
    std::vector<std::uint64_t> by_ones(static_cast<std::size_t>(n / 2) + 1, 0);
    std::uint64_t total = 0;
    for (const BinarySeq& seq : enumerate_sequences(n, SeqFilter::ballot)) {
      ++by_ones[static_cast<std::size_t>(seq.ones())];
      ++total;
    }
    if (total != binomial(n, n / 2))
      return "ballot count != C(n, n/2) at n=" + std::to_string(n);
    for (int k = 0; 2 * k <= n; ++k)
      if (by_ones[static_cast<std::size_t>(k)] != f_shape(n, k))
        return "enumerated ballot count != closed form at n=" + std::to_string(n) +
               ", k=" + std::to_string(k);
    if (n <= 9 && by_ones != table[static_cast<std::size_t>(n - 1)])
      return "graded ballot counts differ from the fixed table at n=" + std::to_string(n);
  }
  return std::nullopt;
}

Failure check_pairing_properties(int n_max) {
  for (int n = 1; n <= std::min(12, n_max); ++n) {
    std::set<std::vector<std::pair<int, int>>> seen;
    for (const BinarySeq& alpha : enumerate_sequences(n, SeqFilter::ballot)) {
      const NonCrossingPairing c = pairing_from_ballot(alpha);
      if (!is_noncrossing(c)) return "matched pairing crosses for alpha=" + alpha.to_string();
      if (static_cast<int>(c.size()) != alpha.ones())
        return "pair count != number of 1s for alpha=" + alpha.to_string();
      std::uint64_t closers = 0;
      for (const auto& [i, j] : c.pairs) closers |= var_bit(j);
      if (closers != alpha.bits())
        return "closers differ from the 1 positions for alpha=" + alpha.to_string();
      if (!seen.insert(c.pairs).second)
        return "pairing map not injective at n=" + std::to_string(n);
    }
  }
  return std::nullopt;
}

Failure check_delta_harmonic(int n_max) {
  for (int n = 1; n <= std::min(9, n_max); ++n) {
    for (const NonCrossingPairing& c : all_noncrossing_pairings(n)) {
      if (!is_harmonic(delta_poly(c, n))) {
        std::ostringstream os;
        os << "delta not harmonic at n=" << n << " for pairs";
        for (const auto& [i, j] : c.pairs) os << " (" << i << "," << j << ")";
        return os.str();
      }
    }
  }
  return std::nullopt;
}

Failure check_harmonic_basis_spans_kernel(int n_max) {
  for (int n = 1; n <= std::min(9, n_max); ++n) {
    const HarmonicBasis basis = harmonic_candidate_basis(n);
    for (int k = 0; k <= n; ++k) {
      const auto kernel = harmonic_kernel(n, k);
      const std::uint64_t expected = 2 * k <= n ? f_shape(n, k) : 0;
      if (kernel.size() != expected)
        return "kernel dimension != tableau count at n=" + std::to_string(n) +
               ", k=" + std::to_string(k);
      if (2 * k > n) continue;
      SpanBuilder candidates(n);
      for (const auto& [alpha, delta] : basis.by_degree[static_cast<std::size_t>(k)]) {
        if (smallest_lex_monomial(delta).mask() != alpha.bits())
          return "lex-smallest monomial is not the 1 positions for alpha=" + alpha.to_string();
        candidates.insert(delta);
      }
      if (candidates.rank() != static_cast<int>(expected))
        return "candidate family not independent at n=" + std::to_string(n) +
               ", k=" + std::to_string(k);
      SpanBuilder joint = candidates;
      for (const auto& v : kernel) joint.insert(v);
      if (joint.rank() != static_cast<int>(expected))
        return "candidate span differs from the kernel at n=" + std::to_string(n) +
               ", k=" + std::to_string(k);
    }
  }
  return std::nullopt;
}

Failure check_ideal_harmonic_orthogonality(int n_max) {
  for (int n = 1; n <= std::min(8, n_max); ++n) {
    Ideal ideal(n);
    const HarmonicBasis basis = harmonic_candidate_basis(n);
    for (const BinarySeq& alpha : ideal.ideal_basis_index()) {
      const ExtPolynomial& g = ideal.gpoly(alpha);
      for (const auto& grp : basis.by_degree) {
        for (const auto& [beta, h] : grp) {
          if (inner_product(g, h) != 0)
            return "<G_" + alpha.to_string() + ", Delta_" + beta.to_string() +
                   "> != 0 at n=" + std::to_string(n);
        }
      }
    }
  }
  return std::nullopt;
}

Failure check_g_leading_terms(int n_max) {
  for (int n = 1; n <= std::min(10, n_max); ++n) {
    GFamily fam(n);
    for (const BinarySeq& alpha : enumerate_sequences(n, SeqFilter::all)) {
      const auto lead = fam.poly(alpha).leading_term();
      if (!lead || lead->first.mask() != alpha.bits() || lead->second != 1)
        return "leading term of G_" + alpha.to_string() + " is not theta^alpha";
    }
  }
  return std::nullopt;
}

Failure check_normal_form_linearity(int n_max) {
  std::mt19937_64 rng(18);
  for (int n = 1; n <= std::min(8, n_max); ++n) {
    Ideal ideal(n);
    std::uniform_int_distribution<int> coeff(-4, 4);
    for (int iter = 0; iter < 10; ++iter) {
      const ExtPolynomial p = random_poly(rng, n), q = random_poly(rng, n);
      const Rational a = coeff(rng), b = coeff(rng);
      const ExtPolynomial lhs = ideal.normal_form(a * p + b * q).normal_form;
      const ExtPolynomial rhs = a * ideal.normal_form(p).normal_form +
                                b * ideal.normal_form(q).normal_form;
      if (lhs != rhs) return "normal form not linear at n=" + std::to_string(n);
      const ExtPolynomial nf = ideal.normal_form(p).normal_form;
      if (ideal.normal_form(nf).normal_form != nf)
        return "normal form not idempotent at n=" + std::to_string(n);
      const NormalFormResult full = ideal.normal_form(p);
      ExtPolynomial rebuilt = full.normal_form;
      for (const auto& [gamma, c] : full.decomposition) {
        if (is_ballot(gamma)) return "decomposition used a ballot index";
        rebuilt += c * ideal.gpoly(gamma);
      }
      if (rebuilt != p) return "decomposition does not rebuild the input";
    }
  }
  return std::nullopt;
}

Failure check_normal_form_kills_generators(int n_max) {
  for (int n = 1; n <= std::min(8, n_max); ++n) {
    Ideal ideal(n);
    for (int r = 1; r <= n; ++r)
      if (!ideal.in_ideal(fundamental(n, r)))
        return "normal form of F_{1^" + std::to_string(r) + "} nonzero at n=" + std::to_string(n);
  }
  return std::nullopt;
}

Failure check_ideal_closure(int n_max) {
  for (int n = 1; n <= std::min(7, n_max); ++n) {
    Ideal ideal(n);
    for (const BinarySeq& alpha : ideal.ideal_basis_index()) {
      const ExtPolynomial& g = ideal.gpoly(alpha);
      for (int i = 1; i <= n; ++i) {
        if (!ideal.in_ideal(ExtPolynomial::variable(n, i) * g))
          return "theta_" + std::to_string(i) + " G_" + alpha.to_string() +
                 " escapes the ideal at n=" + std::to_string(n);
      }
    }
  }
  return std::nullopt;
}

Failure check_direct_sum(int n_max) {
  for (int n = 1; n <= std::min(8, n_max); ++n) {
    Ideal ideal(n);
    const auto non_ballot = ideal.ideal_basis_index();
    const auto ballot = enumerate_sequences(n, SeqFilter::ballot);
    if (non_ballot.size() + ballot.size() != (std::uint64_t{1} << n))
      return "|A_n| + |B_n| != 2^n at n=" + std::to_string(n);
    SpanBuilder span(n);
    for (const BinarySeq& alpha : non_ballot) span.insert(ideal.gpoly(alpha));
    if (span.rank() != static_cast<int>(non_ballot.size()))
      return "ideal basis not independent at n=" + std::to_string(n);
    for (const BinarySeq& beta : ballot) span.insert(ExtPolynomial::monomial(n, beta.bits()));
    if (span.rank() != (1 << n))
      return "A_n together with ballot monomials does not span R_n at n=" + std::to_string(n);
  }
  return std::nullopt;
}

Failure check_two_generators(int n_max) {
  for (int n = 2; n <= std::min(8, n_max); ++n) {
    const ExtPolynomial f1 = fundamental(n, 1);
    const ExtPolynomial f2 = fundamental(n, 2);
    ExtPolynomial even = ExtPolynomial::one(n);  // (F_{1^2})^k
    for (int r = 1; r <= n; ++r) {
      ExtPolynomial witness(n);
      if (r % 2 == 0) {
        even = even * f2;
        Rational c = 1;
        for (int j = 2; j <= r / 2; ++j) c *= j;
        witness = Rational(1) / c * even;  // machinery-free membership witness
      } else if (r == 1) {
        witness = f1;
      } else {
        const ExtPolynomial prod = even * f1;  // even = (F_{1^2})^{(r-1)/2}
        const ExtPolynomial target = fundamental(n, r);
        if (target.is_zero()) continue;
        const auto lead = *target.leading_term();
        const Rational c = prod.coeff(lead.first.mask());
        if (c == 0) return "(F_{1^2})^k F_1 lost the top term at n=" + std::to_string(n);
        witness = Rational(1) / c * prod;
      }
      if (witness != fundamental(n, r))
        return "F_{1^" + std::to_string(r) + "} is not a multiple of the two-generator products";
    }
  }
  return std::nullopt;
}

Failure check_minimal_gb_equivalence(int n_max) {
  std::mt19937_64 rng(19);
  for (int n = 1; n <= std::min(7, n_max); ++n) {
    Ideal ideal(n);
    for (const BinarySeq& alpha : ideal.minimal_groebner_index()) {
      if (is_ballot(alpha)) return "minimal basis contains a ballot word";
    }
    // every basis element reduces to zero against the minimal subset
    for (const BinarySeq& alpha : ideal.ideal_basis_index()) {
      if (!ideal.reduce_by_minimal(ideal.gpoly(alpha)).is_zero())
        return "G_" + alpha.to_string() + " does not reduce to zero against the minimal basis";
    }
    for (int iter = 0; iter < 200; ++iter) {
      const ExtPolynomial p = random_poly(rng, n);
      const bool via_nf = ideal.in_ideal(p);
      const bool via_min = ideal.reduce_by_minimal(p).is_zero();
      if (via_nf != via_min)
        return "membership disagreement at n=" + std::to_string(n) + " for p=" + show(p);
    }
  }
  return std::nullopt;
}

Failure check_shift_identities(int n_max) {
  for (int n = 2; n <= std::min(8, n_max); ++n) {
    for (const BinarySeq& alpha : enumerate_sequences(n - 1, SeqFilter::all)) {
      if (!shift_identity_check(alpha))
        return "shift identity failed for alpha=" + alpha.to_string();
    }
    // residue of the all-ones prefix case: G_{1^(s+1)0...} - theta_1 G_{01^s0...}
    // equals F_{1^(s+1)} in the shifted variables
    GFamily fam(n);
    for (int s = 0; s < n; ++s) {
      const std::uint64_t run = (std::uint64_t{1} << s) - 1;
      const BinarySeq one_alpha(n, (run << 1) | 1);
      const BinarySeq zero_alpha(n, run << 1);
      const ExtPolynomial residue =
          fam.poly(one_alpha) - ExtPolynomial::variable(n, 1) * fam.poly(zero_alpha);
      if (residue != shift_up(fundamental(n - 1, s + 1)))
        return "all-ones residue is not the shifted fundamental at n=" + std::to_string(n) +
               ", s=" + std::to_string(s);
    }
  }
  return std::nullopt;
}

Failure check_coinvariant_dims(int n_max) {
  for (int n = 1; n <= std::min(10, n_max); ++n) {
    if (coinvariant_dim(n) != (1 << (n - 1)))
      return "dim R_n/J_n != 2^{n-1} at n=" + std::to_string(n);
  }
  return std::nullopt;
}

Failure check_reduce_mod_j_multiplicative(int n_max) {
  std::mt19937_64 rng(20);
  for (int n = 1; n <= std::min(8, n_max); ++n) {
    for (int iter = 0; iter < 20; ++iter) {
      const ExtPolynomial p = random_poly(rng, n), q = random_poly(rng, n);
      if (reduce_mod_j(p * q) != reduce_mod_j(p) * reduce_mod_j(q))
        return "reduction not multiplicative at n=" + std::to_string(n);
    }
  }
  return std::nullopt;
}

Failure check_tensor_rank(int n_max) {
  for (int n = 1; n <= std::min(10, n_max); ++n) {
    if (!check_freeness(n)) return "freeness decomposition fails at n=" + std::to_string(n);
  }
  return std::nullopt;
}

Failure check_j_kernel(int n_max) {
  for (int n = 1; n <= std::min(8, n_max); ++n) {
    const ExtPolynomial f1 = fundamental(n, 1);
    SpanBuilder multiples(n);
    const std::uint64_t count = std::uint64_t{1} << n;
    for (std::uint64_t mask = 0; mask < count; ++mask) {
      const ExtPolynomial prod = f1 * ExtPolynomial::monomial(n, mask);
      if (!reduce_mod_j(prod).is_zero())
        return "F_1 multiple survives the reduction at n=" + std::to_string(n);
      multiples.insert(prod);
    }
    // rank-nullity: the kernel has dimension 2^n - 2^{n-1} and contains the
    // F_1 multiples, whose span already has that dimension
    if (multiples.rank() != (1 << (n - 1)))
      return "F_1 R_n has the wrong dimension at n=" + std::to_string(n);
    if (coinvariant_dim(n) != (1 << (n - 1)))
      return "reduction rank wrong at n=" + std::to_string(n);
  }
  return std::nullopt;
}

Failure check_quotient_agreement(int n_max) {
  for (int n = 1; n <= std::min(8, n_max); ++n) {
    Ideal ideal(n);
    const auto series = hilbert_series(n);
    std::vector<std::uint64_t> survivors(series.size(), 0), enumerated(series.size(), 0);
    for (const Monomial& m : quotient_basis(n)) {
      ++enumerated[static_cast<std::size_t>(m.degree())];
      const ExtPolynomial mono = ExtPolynomial::monomial(n, m.mask());
      if (ideal.normal_form(mono).normal_form == mono)
        ++survivors[static_cast<std::size_t>(m.degree())];
    }
    for (std::size_t k = 0; k < series.size(); ++k) {
      if (enumerated[k] != series[k] || survivors[k] != series[k])
        return "quotient basis counts disagree at n=" + std::to_string(n) +
               ", k=" + std::to_string(k);
      if (harmonic_kernel(n, static_cast<int>(k)).size() != series[k])
        return "kernel dimension disagrees with the series at n=" + std::to_string(n) +
               ", k=" + std::to_string(k);
    }
  }
  return std::nullopt;
}

Failure check_worked_examples(int n_max) {
  if (n_max >= 4) {
    const ExtPolynomial lhs = pi(1, ExtPolynomial::variable(4, 2) * fundamental(4, 1));
    const ExtPolynomial expected = parse_poly("-t1*t2 + t1*t3 + t1*t4", 4);
    if (lhs != expected) return "pi_1(theta_2 F_1) has the wrong expansion";
    Ideal ideal(4);
    if (ideal.in_ideal(lhs)) return "pi_1(theta_2 F_1) wrongly inside the ideal";
    if (!ideal.in_ideal(ExtPolynomial::variable(4, 2) * fundamental(4, 1)))
      return "theta_2 F_1 should lie in the ideal";
  }
  if (n_max >= 6) {
    GFamily fam(6);
    if (fam.poly(BinarySeq::from_string("010110")) !=
        parse_poly("t2*t4*t5 + t2*t4*t6 + t2*t5*t6 + 2*t3*t4*t5 + 2*t3*t4*t6 + 2*t3*t5*t6 + "
                   "t4*t5*t6",
                   6))
      return "G_{010110} expansion differs from the fixed form";
    if (fam.poly(BinarySeq::from_string("001100")) !=
        parse_poly("t3*t4 + t3*t5 + t3*t6 + t4*t5 + t4*t6 + t5*t6", 6))
      return "G_{001100} expansion differs from the fixed form";
  }
  if (n_max >= 3) {
    const ExtPolynomial d12 = delta_poly(NonCrossingPairing{{{1, 2}}}, 3);
    const ExtPolynomial d13 = delta_poly(NonCrossingPairing{{{1, 3}}}, 3);
    const ExtPolynomial d23 = delta_poly(NonCrossingPairing{{{2, 3}}}, 3);
    if (!(d12 - d13 + d23).is_zero()) return "three-term delta relation fails at n=3";
  }
  if (n_max >= 4) {
    const ExtPolynomial t = [&] {
      const ExtPolynomial a = ExtPolynomial::variable(4, 3) - ExtPolynomial::variable(4, 1);
      const ExtPolynomial b = ExtPolynomial::variable(4, 4) - ExtPolynomial::variable(4, 2);
      return a * b;
    }();
    if (is_harmonic(t)) return "(theta_3-theta_1)(theta_4-theta_2) wrongly harmonic";
    if (!is_harmonic(delta_poly(pairing_from_ballot(BinarySeq::from_string("0101")), 4)))
      return "Delta_{C(0101)} should be harmonic";
  }
  if (n_max >= 10) {
    const NonCrossingPairing expected{{{2, 3}, {6, 7}, {5, 8}, {9, 10}}};
    if (pairing_from_ballot(BinarySeq::from_string("0010001101")) != expected)
      return "matching of 0010001101 differs from the fixed pairing";
  }
  return std::nullopt;
}

}  // namespace

std::vector<CheckResult> run_verification(int n_max) {
  if (n_max < 1) throw PreconditionError("verification needs n_max >= 1");
  check_enumeration_cap(n_max);
  using CheckFn = std::function<Failure(int)>;
  const std::vector<std::pair<std::string, CheckFn>> checks = {
      {"exterior/anticommutation", check_anticommutation},
      {"exterior/graded-commutativity", check_graded_commutativity},
      {"exterior/associativity", check_associativity},
      {"exterior/partial-relations", check_partial_relations},
      {"exterior/inner-product-routes", check_inner_product_routes},
      {"exterior/bar-involution", check_bar_involution},
      {"exterior/lex-order", check_lex_order},
      {"quasisym/product-rule", check_fundamental_product_rule},
      {"quasisym/coefficient-bruteforce", check_coefficient_bruteforce},
      {"quasisym/coefficient-symmetry", check_coefficient_symmetry},
      {"quasisym/pi-not-multiplicative", check_pi_not_multiplicative},
      {"quasisym/invariance", check_quasisymmetric_invariance},
      {"quasisym/squared-powers", check_squared_fundamental_powers},
      {"quasisym/generating-series", check_generating_series},
      {"ballot/counts", check_ballot_counts},
      {"ballot/pairings", check_pairing_properties},
      {"harmonics/delta-annihilated", check_delta_harmonic},
      {"harmonics/basis-spans-kernel", check_harmonic_basis_spans_kernel},
      {"harmonics/ideal-orthogonality", check_ideal_harmonic_orthogonality},
      {"ideal/leading-terms", check_g_leading_terms},
      {"ideal/normal-form-linearity", check_normal_form_linearity},
      {"ideal/generators-vanish", check_normal_form_kills_generators},
      {"ideal/closure", check_ideal_closure},
      {"ideal/direct-sum", check_direct_sum},
      {"ideal/two-generators", check_two_generators},
      {"ideal/minimal-gb-equivalence", check_minimal_gb_equivalence},
      {"ideal/shift-identities", check_shift_identities},
      {"symcoinv/dimensions", check_coinvariant_dims},
      {"symcoinv/multiplicative", check_reduce_mod_j_multiplicative},
      {"symcoinv/tensor-rank", check_tensor_rank},
      {"symcoinv/j-kernel", check_j_kernel},
      {"crosscheck/quotient-agreement", check_quotient_agreement},
      {"crosscheck/worked-examples", check_worked_examples},
  };

  std::vector<CheckResult> results;
  results.reserve(checks.size());
  for (const auto& [name, fn] : checks) {
    CheckResult res{name, true, ""};
    try {
      if (Failure f = fn(n_max)) {
        res.pass = false;
        res.detail = *f;
      }
    } catch (const std::exception& e) {
      res.pass = false;
      res.detail = std::string("exception: ") + e.what();
    }
    results.push_back(std::move(res));
  }
  return results;
}

bool all_passed(const std::vector<CheckResult>& results) {
  for (const auto& r : results)
    if (!r.pass) return false;
  return true;
}

}  // namespace eqsym
