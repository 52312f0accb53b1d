#pragma once

#include <cstdint>

#include "cyclotomic/characters.hpp"
#include "cyclotomic/closedform.hpp"
#include "cyclotomic/cyclofield.hpp"
#include "cyclotomic/numtheory.hpp"

namespace cyclo {

// Fourier coefficient of g -> log(1 - xi_m^g) over the unit group:
// sum_{g in G(m)} conj(chi(g)) log(1 - xi_m^g), principal logarithm.
Complex char_coeff_value(const DirichletCharacter& chi, const RootOfUnity& root);

// Fourier coefficient of g -> xi_m^{g-1} / (1 - xi_m^g).
Complex char_coeff_logderiv(const DirichletCharacter& chi, const RootOfUnity& root);

// One character's ingredients for the two formulas at a fixed root; the
// n-dependent Euler factors are supplied by the evaluation itself.
struct CharFormulaTerm {
  DirichletCharacter chi;
  Complex value_coeff;     // coefficient in the value formula
  Complex logderiv_coeff;  // coefficient in the derivative formula
};

// All phi(m) terms at the given root, built once per root and cached.
const std::vector<CharFormulaTerm>& char_formula_terms(const RootOfUnity& root);

// Phi_n(xi_m) via the character-sum formula
//   exp( (1/phi(m)) sum_chi C_chi(xi_m) chi(n) prod_{p|n} (1 - conj(chi)(p)) ),
// for coprime n, m > 1.
Complex eval_phi_char_formula(const FactoredInt& n, const RootOfUnity& root);

// Phi_n'/Phi_n at xi_m via the derivative character formula
//   -(n/phi(m)) sum_chi c_chi(xi_m) chi(n) prod_{p|n} (1 - conj(chi)(p)/p),
// for coprime n, m > 1.
Complex logderiv_char_formula(const FactoredInt& n, const RootOfUnity& root);

// Exact closed form of Phi_n'/Phi_n at zeta_m for the quadratic-field orders
// m in {3, 4, 6} and gcd(n, m) = 1:
//   (phi(n) / (2 zeta)) (1 - (-1)^{Omega(n-)} ((1+zeta)/(1-zeta))
//                             prod_{p | n-} (p+1)/(p-1)),
// with n- the product of the prime powers p^k || n, p = -1 (mod m).
CycloElement logderiv_closed_quadratic(const FactoredInt& n, std::uint64_t m);

// Coprime reduction of the logarithmic derivative: with n = n1 n2 as in
// reduce_coprime,
//   f_n(xi) = sum_{d | n2} mu(n2/d) d xi^{d-1} f_{n1}(xi^d),
// each term evaluated exactly.  Propagates PoleError when a term degenerates
// (e.g. n1 = 1 and xi^d = 1).
CycloElement logderiv_coprime_reduce(const FactoredInt& n, const RootOfUnity& root);

// f_n(1) = phi(n)/2 for n > 1; f_n(-1) = -phi(n)/2 for n != 2.
BigRat logderiv_at_one(const FactoredInt& n);
BigRat logderiv_at_minus_one(const FactoredInt& n);

// Phi_n'(1): 1 for n = 1, p phi(n)/2 for n = p^e, else phi(n)/2.
// Phi_n'(-1): 1 for n in {1, 2}, -p phi(n)/2 for n = 2p^e, else -phi(n)/2.
BigRat phi_prime_at_one(const FactoredInt& n);
BigRat phi_prime_at_minus_one(const FactoredInt& n);

// n = product of the primes p <= x with p = +-2 (mod 5).  The bound is
// log|Phi_n| at the best primitive fifth root, 2^{omega-1} log(2 cos(pi/5)),
// and bound - log n lower-bounds log of the coefficient height.
struct VaughanPoint {
  std::uint64_t x;
  FactoredInt n;
  unsigned omega;
  RootOfUnity best_root;
  double bound;
  double log_n;
  double bound_minus_log_n;
};
VaughanPoint vaughan_construct(std::uint64_t x);

}  // namespace cyclo
