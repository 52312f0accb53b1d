#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "cyclotomic/types.hpp"

namespace cyclo {

struct PrimePower {
  std::uint64_t prime;
  unsigned exponent;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// A positive integer together with its full prime factorization.  All
// multiplicative functions below read the factor list and never refactor;
// this is the only input type they accept.
class FactoredInt {
 public:
  FactoredInt() : value_(1) {}  // the empty factorization of 1

  // Trial division; rejects n = 0.  Intended for desk-scale inputs.
  static FactoredInt of(std::uint64_t n);

  // Assembles a FactoredInt from an already-known factorization.  The list
  // must have strictly increasing primes and exponents >= 1; the value may
  // exceed 64 bits (used by the Vaughan construction).
  static FactoredInt from_prime_powers(std::vector<PrimePower> factors);

  const BigInt& value() const { return value_; }
  bool fits_u64() const;
  std::uint64_t value_u64() const;  // throws if the value exceeds 64 bits
  const std::vector<PrimePower>& factors() const { return factors_; }

  bool is_one() const { return factors_.empty(); }
  unsigned exponent_of(std::uint64_t p) const;
  FactoredInt without_prime(std::uint64_t p) const;
  FactoredInt radical_factored() const;

  friend bool operator==(const FactoredInt&, const FactoredInt&) = default;

 private:
  BigInt value_;
  std::vector<PrimePower> factors_;
};

BigInt euler_phi(const FactoredInt& n);
int moebius(const FactoredInt& n);
BigInt radical(const FactoredInt& n);
unsigned big_omega(const FactoredInt& n);
unsigned small_omega(const FactoredInt& n);

// e^{Lambda(n)} as an exact integer: p if n = p^e with e >= 1, else 1.
std::uint64_t mangoldt_exp(const FactoredInt& n);

// Number of positive integers j <= x with gcd(j, n) = 1.  Takes an exact
// rational so boundary cases at integral x are unambiguous.
BigInt phi_partial(const BigRat& x, const FactoredInt& n);

// Jordan totient J_k(n) = sum_{d|n} mu(n/d) d^k, evaluated by the product
// over prime powers p^{k(e-1)} (p^k - 1).  J_0(n) = [n = 1].
BigInt jordan_totient(unsigned k, const FactoredInt& n);

// sum_{2 < n <= x} log Phi_n(1), i.e. the Chebyshev psi sum minus the n = 2
// term.  Sieve-based; requires x >= 3.
double chebyshev_phi1_sum(std::uint64_t x);

// All positive divisors, ascending.  Requires the value to fit in 64 bits.
std::vector<std::uint64_t> divisors(const FactoredInt& n);

bool is_prime_power(std::uint64_t n, std::uint64_t* prime_out = nullptr);

}  // namespace cyclo
