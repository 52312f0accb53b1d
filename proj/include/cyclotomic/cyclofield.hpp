#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "cyclotomic/numtheory.hpp"
#include "cyclotomic/polyring.hpp"
#include "cyclotomic/types.hpp"

namespace cyclo {

class DivisionByZeroError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class ModulusMismatchError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class PoleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class NotAlgebraicIntegerError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// zeta_order^exponent, a primitive root of unity: gcd(exponent, order) = 1.
// order = 1 (exponent 0) denotes the value 1.
struct RootOfUnity {
  std::uint64_t order = 1;
  std::uint64_t exponent = 0;

  // Canonicalizes j mod m and checks primitivity.
  static RootOfUnity make(std::uint64_t m, std::uint64_t j);
  // zeta_m^k for arbitrary k, reduced to a primitive root of lower order.
  static RootOfUnity zeta_power(std::uint64_t m, std::int64_t k);

  RootOfUnity power(std::int64_t k) const { return zeta_power(order, static_cast<std::int64_t>(exponent) * k); }
  friend bool operator==(const RootOfUnity&, const RootOfUnity&) = default;
};

// Element of Q(zeta_m) in the power basis 1, zeta, ..., zeta^{phi(m)-1}
// modulo Phi_m.  Representation is canonical, so equality is coordinate
// equality.
class CycloElement {
 public:
  CycloElement() : modulus_(1), coords_(1, BigRat(0)) {}
  explicit CycloElement(std::uint64_t modulus);  // zero element

  static CycloElement from_rational(std::uint64_t modulus, BigRat value);
  static CycloElement from_root(const RootOfUnity& r);  // zeta_m^j in Q(zeta_m)
  // zeta_m^k (any integer k) as an element of Q(zeta_m)
  static CycloElement zeta_power(std::uint64_t modulus, std::int64_t k);

  std::uint64_t modulus() const { return modulus_; }
  std::uint64_t degree() const { return coords_.size(); }  // = phi(m)
  const std::vector<BigRat>& coords() const { return coords_; }

  bool is_zero() const;
  bool is_rational() const;
  BigRat rational_value() const;  // throws unless is_rational()
  bool has_integer_coords() const;

  CycloElement operator+(const CycloElement& o) const;
  CycloElement operator-(const CycloElement& o) const;
  CycloElement operator-() const;
  CycloElement operator*(const CycloElement& o) const;
  CycloElement operator*(const BigRat& s) const;
  CycloElement inverse() const;  // DivisionByZeroError on zero
  CycloElement operator/(const CycloElement& o) const { return *this * o.inverse(); }

  // Galois automorphism zeta -> zeta^j; requires gcd(j, m) = 1.
  CycloElement automorphism(std::uint64_t j) const;
  CycloElement conjugate() const;

  friend bool operator==(const CycloElement&, const CycloElement&) = default;

 private:
  CycloElement(std::uint64_t modulus, std::vector<BigRat> reduced_coords);
  friend CycloElement reduce(const IntPolynomial& f, std::uint64_t m);
  friend CycloElement embed(const CycloElement& a, std::uint64_t big_modulus);
  friend CycloElement eval_poly_at_root(const IntPolynomial& f, const RootOfUnity& root);

  std::uint64_t modulus_;
  std::vector<BigRat> coords_;
};

// Image of f under Z[x] -> Q(zeta_m), x -> zeta_m (a ring homomorphism).
CycloElement reduce(const IntPolynomial& f, std::uint64_t m);

// Q(zeta_m) -> Q(zeta_M) for m | M, zeta_m -> zeta_M^{M/m}.
CycloElement embed(const CycloElement& a, std::uint64_t big_modulus);

// f(zeta_m^j), folding exponents with stride j.
CycloElement eval_poly_at_root(const IntPolynomial& f, const RootOfUnity& root);

// Galois norm: product of all conjugates; always lands in Q.
BigRat norm(const CycloElement& a);

// Exact Phi_n at a root of unity -- the oracle every closed form is tested
// against.  Zero iff n equals the order of the root.
CycloElement eval_phi_exact(const FactoredInt& n, const RootOfUnity& root);
CycloElement eval_phi_derivative_exact(const FactoredInt& n, const RootOfUnity& root);
// Phi_n'/Phi_n at the root; PoleError when n = order.
CycloElement logderiv_exact(const FactoredInt& n, const RootOfUnity& root);

std::complex<double> to_complex(const CycloElement& a);
Complex to_complex_ext(const CycloElement& a);
Complex to_complex_ext(const RootOfUnity& r);

// |norm| = 1 test for elements with integer coordinates; throws
// NotAlgebraicIntegerError otherwise.
bool is_unit(const CycloElement& a);

}  // namespace cyclo
