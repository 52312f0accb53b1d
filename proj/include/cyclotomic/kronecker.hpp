#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "cyclotomic/closedform.hpp"
#include "cyclotomic/polyring.hpp"

namespace cyclo {

// f = x^e * prod Phi_d^{e_d}, indices ascending.
struct KroneckerFactorization {
  std::uint64_t monomial_exponent = 0;
  std::vector<std::pair<std::uint64_t, unsigned>> factors;  // (index d, multiplicity)

  friend bool operator==(const KroneckerFactorization&, const KroneckerFactorization&) = default;
};

// Strips the monomial part, then trial-divides by Phi_d for every candidate
// d with phi(d) <= remaining degree, ascending.  Returns nullopt when the
// residual is not the constant 1, which for monic integer input means f is
// not a product of cyclotomics and a monomial.  Rejects non-monic input.
std::optional<KroneckerFactorization> factor_kronecker(const IntPolynomial& f);

IntPolynomial expand_factorization(const KroneckerFactorization& fact);

// Parity of the Phi_1 multiplicity decides the palindrome class; requires a
// zero monomial exponent (f(0) != 0).
Reciprocity reciprocity_class(const KroneckerFactorization& fact);

// f(1) >= 0 always; f(-1) >= 0 once f(1) != 0; strictly positive on R when
// both are nonzero (indices 1 and 2 absent).  The positivity claim is also
// spot-checked on a small real grid.
struct SignFacts {
  BigInt value_at_one;
  BigInt value_at_minus_one;
  bool one_nonneg = false;
  bool minus_one_nonneg = false;
  bool strictly_positive = false;
};
SignFacts sign_facts(const IntPolynomial& f);

// |f(xi_m)| for m in {1,2,3,4,6} when every index in the factorization
// exceeds m: the integer exp(sum_{m|d} e_d Lambda(d/m)).  Throws
// InapplicableHypothesisError naming an offending small index.
BigInt abs_at_low_m(const KroneckerFactorization& fact, std::uint64_t m);

}  // namespace cyclo
