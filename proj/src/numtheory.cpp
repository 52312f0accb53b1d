#include "cyclotomic/numtheory.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace cyclo {

FactoredInt FactoredInt::of(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("factor: n must be >= 1");
  FactoredInt out;
  out.value_ = n;
  for (std::uint64_t p = 2; p <= n / p; ++p) {
    if (n % p != 0) continue;
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.factors_.push_back({p, e});
  }
  if (n > 1) out.factors_.push_back({n, 1});
  return out;
}

FactoredInt FactoredInt::from_prime_powers(std::vector<PrimePower> factors) {
  FactoredInt out;
  BigInt value = 1;
  std::uint64_t last = 0;
  for (const auto& [p, e] : factors) {
    if (p <= last) throw std::invalid_argument("from_prime_powers: primes must be strictly increasing");
    if (p < 2 || e < 1) throw std::invalid_argument("from_prime_powers: invalid prime power");
    last = p;
    for (unsigned i = 0; i < e; ++i) value *= p;
  }
  out.value_ = value;
  out.factors_ = std::move(factors);
  return out;
}

bool FactoredInt::fits_u64() const {
  return value_ <= BigInt(std::numeric_limits<std::uint64_t>::max());
}

std::uint64_t FactoredInt::value_u64() const {
  if (!fits_u64()) throw std::overflow_error("FactoredInt: value exceeds 64 bits");
  return value_.convert_to<std::uint64_t>();
}

unsigned FactoredInt::exponent_of(std::uint64_t p) const {
  for (const auto& f : factors_)
    if (f.prime == p) return f.exponent;
  return 0;
}

FactoredInt FactoredInt::without_prime(std::uint64_t p) const {
  std::vector<PrimePower> fs;
  for (const auto& f : factors_)
    if (f.prime != p) fs.push_back(f);
  return from_prime_powers(std::move(fs));
}

FactoredInt FactoredInt::radical_factored() const {
  std::vector<PrimePower> fs;
  for (const auto& f : factors_) fs.push_back({f.prime, 1});
  return from_prime_powers(std::move(fs));
}

BigInt euler_phi(const FactoredInt& n) {
  BigInt out = 1;
  for (const auto& [p, e] : n.factors()) {
    BigInt pe = 1;
    for (unsigned i = 0; i + 1 < e; ++i) pe *= p;
    out *= pe * (BigInt(p) - 1);
  }
  return out;
}

int moebius(const FactoredInt& n) {
  for (const auto& f : n.factors())
    if (f.exponent > 1) return 0;
  return (n.factors().size() % 2 == 0) ? 1 : -1;
}

BigInt radical(const FactoredInt& n) {
  BigInt out = 1;
  for (const auto& f : n.factors()) out *= f.prime;
  return out;
}

unsigned big_omega(const FactoredInt& n) {
  unsigned out = 0;
  for (const auto& f : n.factors()) out += f.exponent;
  return out;
}

unsigned small_omega(const FactoredInt& n) {
  return static_cast<unsigned>(n.factors().size());
}

std::uint64_t mangoldt_exp(const FactoredInt& n) {
  if (n.factors().size() == 1) return n.factors().front().prime;
  return 1;
}

BigInt phi_partial(const BigRat& x, const FactoredInt& n) {
  if (x < 0) throw std::invalid_argument("phi_partial: x must be >= 0");
  const BigInt limit = floor_nonneg(x);
  if (limit <= 0) return 0;
  // inclusion-exclusion over the squarefree divisors of rad(n)
  const auto& fs = n.factors();
  const std::size_t w = fs.size();
  if (w > 25) throw std::invalid_argument("phi_partial: too many distinct primes");
  BigInt count = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << w); ++mask) {
    BigInt d = 1;
    bool odd = false;
    for (std::size_t i = 0; i < w; ++i)
      if (mask & (std::uint64_t(1) << i)) {
        d *= fs[i].prime;
        odd = !odd;
      }
    BigInt term = limit / d;
    count += odd ? -term : term;
  }
  return count;
}

BigInt jordan_totient(unsigned k, const FactoredInt& n) {
  BigInt out = 1;
  for (const auto& [p, e] : n.factors()) {
    BigInt pk = 1;
    for (unsigned i = 0; i < k; ++i) pk *= p;
    BigInt term = pk - 1;
    for (unsigned i = 0; i + 1 < e; ++i) term *= pk;
    out *= term;
  }
  return out;
}

double chebyshev_phi1_sum(std::uint64_t x) {
  if (x < 3) throw std::invalid_argument("chebyshev_phi1_sum: x must be >= 3");
  std::vector<bool> composite(x + 1, false);
  double sum = 0.0;
  for (std::uint64_t p = 2; p <= x; ++p) {
    if (composite[p]) continue;
    for (std::uint64_t q = p * p; q <= x; q += p) composite[q] = true;
    const double lp = std::log(static_cast<double>(p));
    for (std::uint64_t pk = p; pk <= x; pk *= p) {
      if (pk != 2) sum += lp;  // skip n = 2: the sum starts at n = 3
      if (pk > x / p) break;
    }
  }
  return sum;
}

std::vector<std::uint64_t> divisors(const FactoredInt& n) {
  std::vector<std::uint64_t> divs{1};
  (void)n.value_u64();
  for (const auto& [p, e] : n.factors()) {
    const std::size_t base = divs.size();
    std::uint64_t pe = 1;
    for (unsigned i = 0; i < e; ++i) {
      pe *= p;
      for (std::size_t j = 0; j < base; ++j) divs.push_back(divs[j] * pe);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

bool is_prime_power(std::uint64_t n, std::uint64_t* prime_out) {
  if (n < 2) return false;
  const FactoredInt f = FactoredInt::of(n);
  if (f.factors().size() != 1) return false;
  if (prime_out) *prime_out = f.factors().front().prime;
  return true;
}

}  // namespace cyclo
