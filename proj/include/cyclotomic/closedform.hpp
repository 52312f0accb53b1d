#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "cyclotomic/cyclofield.hpp"
#include "cyclotomic/numtheory.hpp"

namespace cyclo {

// A stated hypothesis of a closed form does not hold for the given input.
class InapplicableHypothesisError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Phi_n(1): 0 for n = 1, p for n = p^e, otherwise 1.
BigInt value_at_one(const FactoredInt& n);
// Phi_n(-1): -2 for n = 1, 0 for n = 2, p for n = 2p^e, otherwise 1.
BigInt value_at_minus_one(const FactoredInt& n);

// Case p = 1 (mod m), n = p^k n' with p not dividing n': 1 when n' != m,
// p when n' = m.  Absent when no such prime divides n.
std::optional<BigInt> mod1_case(const FactoredInt& n, std::uint64_t m);

// Case p = -1 (mod m), m >= 2.  Absent when no such prime divides n (or m < 2,
// where the case degenerates).
std::optional<CycloElement> modminus1_case(const FactoredInt& n, std::uint64_t m);

// The full evaluation tables at the canonical primitive root of order 4, 3,
// 6 and 5 respectively.  Exact field elements; zero exactly when n = m.
CycloElement value_at_i(const FactoredInt& n);
CycloElement value_at_zeta3(const FactoredInt& n);
CycloElement value_at_zeta6(const FactoredInt& n);
CycloElement value_at_zeta5(const FactoredInt& n);

// n = coprime_part * rest with coprime_part the largest divisor coprime to m;
// plan lists (d, mu(rest/d)) with nonzero mu, so that
// Phi_n(x) = prod Phi_{coprime_part}(x^d)^{mu(rest/d)} wherever defined.
struct CoprimeReduction {
  std::uint64_t coprime_part;
  std::uint64_t rest;
  std::vector<std::pair<std::uint64_t, int>> plan;
};
CoprimeReduction reduce_coprime(const FactoredInt& n, std::uint64_t m);

// Phi_n(xi_m) is nonzero and real iff m | phi(n); requires n >= 2.
bool is_real_value(const FactoredInt& n, std::uint64_t m);

// Phi_n(xi_m) = sign * |Phi_n(xi_m)| * xi_m^{phi(n)/2}, with the sign counted
// by coprime integers up to n j / m and the half-power twist carried in the
// order-2m group.
struct SignMagnitudeForm {
  enum class Kind { integer, gamma_power, numeric };

  RootOfUnity root;   // the xi_m the split was computed at
  int sign = 1;
  RootOfUnity twist;  // reduced root; its order divides 2m
  Kind kind = Kind::numeric;
  BigInt integer_magnitude;      // kind == integer
  std::int64_t gamma_exponent = 0;  // kind == gamma_power: |1 + xi + ...|^e
  Real magnitude;                // numeric |Phi_n(xi_m)|, always filled
};
SignMagnitudeForm sign_magnitude(const FactoredInt& n, const RootOfUnity& root);

// |Phi_n(xi_m)| for m in {1,2,3,4,6} and n > m: p when n/m is a power of p,
// otherwise 1.
BigInt abs_value_low_m(std::uint64_t n, std::uint64_t m);

// gamma_m from the quartic-order formula: 1+xi (m=5), 1+xi+xi^2 (m=8,10),
// 1+xi+xi^2+xi^3+xi^4 (m=12).
CycloElement gamma_element(const RootOfUnity& root);

// log|Phi_n(xi_m)| = (-1)^{Omega(n)-1} 2^{omega(n)-1} log|gamma_m| for
// m in {5,8,10,12}, gcd(n,m)=1 and no prime divisor of n = +-1 (mod m).
// Throws InapplicableHypothesisError naming the offending prime otherwise.
Real abs_log_quartic(const FactoredInt& n, const RootOfUnity& root);
Real abs_log_quartic(const FactoredInt& n, std::uint64_t m);

// Dispatcher for the order <= 6 tables at an arbitrary primitive root,
// obtained from the canonical-root tables by the Galois automorphism.
CycloElement closed_value(const FactoredInt& n, const RootOfUnity& root);

}  // namespace cyclo
