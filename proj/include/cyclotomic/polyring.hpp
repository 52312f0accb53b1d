#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <vector>

#include "cyclotomic/numtheory.hpp"
#include "cyclotomic/types.hpp"

namespace cyclo {

// Division in Z[x] left a nonzero remainder (or a non-exact leading
// coefficient quotient).
class ExactDivisionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

enum class Reciprocity { self_reciprocal, anti_self_reciprocal, neither };

// Dense integer polynomial, coefficients ascending by power.  The
// representation is normalized: the highest stored coefficient is nonzero,
// and the zero polynomial stores nothing.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coeffs);

  static IntPolynomial one();
  static IntPolynomial monomial(BigInt coeff, std::size_t power);
  static IntPolynomial power_minus_one(std::uint64_t n);  // x^n - 1
  static IntPolynomial all_ones(std::size_t len);         // 1 + x + ... + x^{len-1}

  bool is_zero() const { return coeffs_.empty(); }
  // degree of the zero polynomial is -1
  std::int64_t degree() const { return static_cast<std::int64_t>(coeffs_.size()) - 1; }
  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  const BigInt& coeff(std::size_t k) const;
  const BigInt& leading() const;
  bool is_monic() const;

  IntPolynomial operator+(const IntPolynomial& o) const;
  IntPolynomial operator-(const IntPolynomial& o) const;
  IntPolynomial operator*(const IntPolynomial& o) const;
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  IntPolynomial derivative() const;
  // f(x^p); p >= 1
  IntPolynomial substitute_power(std::uint64_t p) const;
  BigInt eval(const BigInt& k) const;
  // largest |coefficient|; 0 for the zero polynomial
  BigInt height() const;

 private:
  void normalize();
  std::vector<BigInt> coeffs_;
};

// Quotient of an exact division in Z[x]; throws ExactDivisionError otherwise.
IntPolynomial exact_div(const IntPolynomial& num, const IntPolynomial& den);

// Same division, but non-divisibility is an expected outcome (trial division).
std::optional<IntPolynomial> try_exact_div(const IntPolynomial& num, const IntPolynomial& den);

// Palindrome classification of the coefficient list; rejects the zero
// polynomial.
Reciprocity reciprocity_type(const IntPolynomial& f);

using PolyPtr = std::shared_ptr<const IntPolynomial>;

// The n-th cyclotomic polynomial, memoized by n.  Thread safe: the cache is
// a concurrent insert-if-absent map, and duplicated computation on a race is
// harmless.
PolyPtr cyclotomic(const FactoredInt& n);

// Cache controls.  Capacity counts entries; 0 disables caching entirely.
void set_cyclotomic_cache_capacity(std::size_t max_entries);
void clear_cyclotomic_cache();
std::size_t cyclotomic_cache_size();

}  // namespace cyclo
