#include "cyclotomic/resultant.hpp"

namespace cyclo {

BigInt resultant_closed(std::uint64_t n, std::uint64_t m) {
  if (m <= 1 || n <= m) throw std::invalid_argument("resultant_closed: requires n > m > 1");
  std::uint64_t p;
  if (n % m != 0 || !is_prime_power(n / m, &p)) return 1;
  const std::uint64_t e = euler_phi(FactoredInt::of(m)).convert_to<std::uint64_t>();
  BigInt out = 1;
  for (std::uint64_t i = 0; i < e; ++i) out *= p;
  return out;
}

BigRat resultant_bruteforce(const FactoredInt& n, std::uint64_t m) {
  if (m == 0 || n.value() < 1) throw std::invalid_argument("resultant_bruteforce: indices must be >= 1");
  if (n.value() == m)
    throw std::invalid_argument("resultant_bruteforce: the polynomials share a root when n = m");
  const RootOfUnity root = RootOfUnity::make(m, m == 1 ? 0 : 1);
  return norm(eval_phi_exact(n, root));
}

}  // namespace cyclo
