#include "cyclotomic/closedform.hpp"

#include <algorithm>

namespace cyclo {

namespace {

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
  while (b) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

CycloElement rat(std::uint64_t m, BigRat v) { return CycloElement::from_rational(m, std::move(v)); }
CycloElement zp(std::uint64_t m, std::int64_t k) { return CycloElement::zeta_power(m, k); }

// (d, mu(n/d)) for the divisors d with mu(n/d) != 0, ascending in d
std::vector<std::pair<std::uint64_t, int>> moebius_divisor_plan(const FactoredInt& n) {
  const auto& fs = n.factors();
  const std::size_t w = fs.size();
  std::vector<std::pair<std::uint64_t, int>> plan;
  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << w); ++mask) {
    std::uint64_t d = 1;
    int mu = 1;
    for (std::size_t i = 0; i < w; ++i) {
      unsigned take = fs[i].exponent;
      if (mask & (std::uint64_t(1) << i)) {
        take -= 1;  // leave one factor of p in n/d
        mu = -mu;
      }
      for (unsigned t = 0; t < take; ++t) d *= fs[i].prime;
    }
    plan.emplace_back(d, mu);
  }
  std::sort(plan.begin(), plan.end());
  return plan;
}

}  // namespace

BigInt value_at_one(const FactoredInt& n) {
  if (n.is_one()) return 0;
  if (n.factors().size() == 1) return n.factors().front().prime;
  return 1;
}

BigInt value_at_minus_one(const FactoredInt& n) {
  const BigInt& v = n.value();
  if (v == 1) return -2;
  if (v == 2) return 0;
  // n = 2 p^e ?
  if (v % 2 == 0) {
    const std::uint64_t half = (v / 2).convert_to<std::uint64_t>();
    std::uint64_t p;
    if (is_prime_power(half, &p)) return p;
  }
  return 1;
}

std::optional<BigInt> mod1_case(const FactoredInt& n, std::uint64_t m) {
  if (m == 0) throw std::invalid_argument("mod1_case: m must be >= 1");
  bool found = false;
  for (const auto& [p, e] : n.factors()) {
    if (p % m != 1 % m) continue;
    found = true;
    FactoredInt rest = n.without_prime(p);
    if (rest.value() == m) return BigInt(p);
    (void)e;
  }
  if (!found) return std::nullopt;
  return BigInt(1);
}

std::optional<CycloElement> modminus1_case(const FactoredInt& n, std::uint64_t m) {
  if (m < 2) return std::nullopt;  // the case needs xi_m^{p} != 1, degenerate at m = 1
  for (const auto& [p, e] : n.factors()) {
    if (p % m != m - 1) continue;
    const int dir = (e % 2 == 0) ? 1 : -1;  // exponent sign (-1)^k
    const FactoredInt rest = n.without_prime(p);
    if (rest.is_one()) return -zp(m, dir);
    if (rest.value() == m) {
      const std::int64_t fm = static_cast<std::int64_t>(euler_phi(FactoredInt::of(m)).convert_to<std::uint64_t>());
      return zp(m, dir * fm) * BigRat(-BigInt(p));
    }
    const std::int64_t fr =
        static_cast<std::int64_t>((euler_phi(rest) % BigInt(m)).convert_to<std::uint64_t>());
    return zp(m, dir * fr);
  }
  return std::nullopt;
}

CycloElement value_at_i(const FactoredInt& n) {
  const std::uint64_t nv = n.value_u64();
  if (nv == 1) return zp(4, 1) - rat(4, 1);
  if (nv == 2) return zp(4, 1) + rat(4, 1);
  if (nv == 4) return CycloElement(4);
  if (nv % 4 == 0) {
    std::uint64_t p;
    if (is_prime_power(nv / 4, &p)) return rat(4, BigRat(p));
    return rat(4, 1);
  }
  for (const auto& f : n.factors())
    if (f.prime % 4 == 1) return rat(4, 1);
  // n odd or 2||n, every odd prime factor = 3 (mod 4)
  const bool even = (nv % 2 == 0);
  unsigned odd_primes = 0, k = 0;
  for (const auto& f : n.factors())
    if (f.prime != 2) {
      ++odd_primes;
      k = f.exponent;
    }
  if (odd_primes == 1) {
    const bool plus = even ? (k % 2 == 0) : (k % 2 == 1);  // (-1)^k i resp. (-1)^{k+1} i
    return plus ? zp(4, 1) : -zp(4, 1);
  }
  if (odd_primes == 2) return rat(4, -1);
  return rat(4, 1);
}

CycloElement value_at_zeta3(const FactoredInt& n) {
  const std::uint64_t nv = n.value_u64();
  if (nv == 1) return zp(3, 1) - rat(3, 1);
  if (nv == 3) return CycloElement(3);
  const unsigned v3 = n.exponent_of(3);
  if (v3 >= 2) return rat(3, small_omega(n) == 1 ? 3 : 1);
  for (const auto& f : n.factors())
    if (f.prime % 3 == 1) {
      std::uint64_t p;
      if (nv % 3 == 0 && is_prime_power(nv / 3, &p) && p % 3 == 1) return rat(3, BigRat(p));
      return rat(3, 1);
    }
  // all prime factors other than 3 are = 2 (mod 3)
  const unsigned s = big_omega(n) - small_omega(n);
  const std::int64_t zdir = (s % 2 == 0) ? 1 : -1;  // zeta = zeta3^zdir
  const unsigned rest_omega = small_omega(n) - (v3 == 1 ? 1 : 0);
  if (v3 == 0) {
    if (rest_omega == 1) return -zp(3, -zdir);  // -1/zeta
    return zp(3, -zdir);                        // 1/zeta
  }
  if (rest_omega == 1) {
    std::uint64_t q = 0;
    for (const auto& f : n.factors())
      if (f.prime != 3) q = f.prime;
    return zp(3, zdir) * BigRat(-BigInt(q));  // -q zeta
  }
  return zp(3, zdir);  // zeta
}

CycloElement value_at_zeta6(const FactoredInt& n) {
  const std::uint64_t nv = n.value_u64();
  if (nv == 1) return zp(6, 2);             // zeta_3
  if (nv == 2) return zp(6, 1) + rat(6, 1);
  if (nv == 3) return zp(6, 1) * BigRat(2);
  if (nv == 6) return CycloElement(6);
  const unsigned v3 = n.exponent_of(3);
  std::uint64_t pow3 = 1;
  for (unsigned i = 0; i < v3; ++i) pow3 *= 3;
  if (v3 >= 2) return rat(6, nv / pow3 == 2 ? 3 : 1);
  for (const auto& f : n.factors())
    if (f.prime % 6 == 1) {
      std::uint64_t p;
      if (nv % 6 == 0 && is_prime_power(nv / 6, &p) && p % 6 == 1) return rat(6, BigRat(p));
      return rat(6, 1);
    }
  // remaining primes are 2, at most one 3, and primes = 5 (mod 6)
  const unsigned s = big_omega(n) - small_omega(n);
  const std::int64_t zdir = (s % 2 == 0) ? 1 : -1;  // zeta = zeta3^zdir = zeta6^{2 zdir}
  const std::uint64_t u = nv / pow3;
  std::uint64_t q = 0;
  const bool u_is_2qk = (u % 2 == 0) && is_prime_power(u / 2, &q);
  if (v3 == 0) {
    if (u_is_2qk) return -zp(6, 2 * zdir);  // -zeta
    return zp(6, 2 * zdir);                 // zeta
  }
  if (u_is_2qk) return zp(6, -2 * zdir) * BigRat(-BigInt(q));  // -q / zeta
  return zp(6, -2 * zdir);                                     // 1 / zeta
}

CycloElement value_at_zeta5(const FactoredInt& n) {
  const std::uint64_t nv = n.value_u64();
  if (nv == 1) return zp(5, 1) - rat(5, 1);
  if (nv == 5) return CycloElement(5);
  const unsigned v5 = n.exponent_of(5);
  if (v5 >= 2) return rat(5, small_omega(n) == 1 ? 5 : 1);
  if (v5 == 1) {
    // Phi_{5 n1}(zeta_5) = e^{Lambda(n1)} / Phi_{n1}(zeta_5)
    const FactoredInt n1 = n.without_prime(5);
    return rat(5, BigRat(mangoldt_exp(n1))) / value_at_zeta5(n1);
  }
  for (const auto& f : n.factors())
    if (f.prime % 5 == 1) return rat(5, 1);
  for (const auto& f : n.factors()) {
    if (f.prime % 5 != 4) continue;
    const std::int64_t dir = (f.exponent % 2 == 0) ? 1 : -1;
    const FactoredInt rest = n.without_prime(f.prime);
    if (rest.is_one()) return -zp(5, dir);
    const std::int64_t fr =
        static_cast<std::int64_t>((euler_phi(rest) % BigInt(5)).convert_to<std::uint64_t>());
    return zp(5, dir * fr);
  }
  // every prime factor is = +-2 (mod 5): evaluate the Moebius product
  // prod_{d|n} (zeta_5^d - 1)^{mu(n/d)} directly in the field
  CycloElement num = rat(5, 1), den = rat(5, 1);
  for (const auto& [d, mu] : moebius_divisor_plan(n)) {
    const CycloElement factor = zp(5, static_cast<std::int64_t>(d % 5)) - rat(5, 1);
    if (mu > 0)
      num = num * factor;
    else
      den = den * factor;
  }
  return num / den;
}

CoprimeReduction reduce_coprime(const FactoredInt& n, std::uint64_t m) {
  if (m == 0) throw std::invalid_argument("reduce_coprime: m must be >= 1");
  std::vector<PrimePower> coprime, rest;
  for (const auto& f : n.factors())
    (m % f.prime == 0 ? rest : coprime).push_back(f);
  const FactoredInt n1 = FactoredInt::from_prime_powers(std::move(coprime));
  const FactoredInt n2 = FactoredInt::from_prime_powers(std::move(rest));
  return {n1.value_u64(), n2.value_u64(), moebius_divisor_plan(n2)};
}

bool is_real_value(const FactoredInt& n, std::uint64_t m) {
  if (n.value() < 2) throw std::invalid_argument("is_real_value: requires n >= 2");
  return euler_phi(n) % BigInt(m) == 0;
}

CycloElement gamma_element(const RootOfUnity& root) {
  const std::uint64_t m = root.order;
  unsigned terms;
  switch (m) {
    case 5: terms = 2; break;
    case 8:
    case 10: terms = 3; break;
    case 12: terms = 5; break;
    default:
      throw std::invalid_argument("gamma_element: order must be one of 5, 8, 10, 12");
  }
  CycloElement out(m);
  for (unsigned k = 0; k < terms; ++k)
    out = out + zp(m, static_cast<std::int64_t>(k) * static_cast<std::int64_t>(root.exponent));
  return out;
}

SignMagnitudeForm sign_magnitude(const FactoredInt& n, const RootOfUnity& root) {
  if (n.value() < 2) throw std::invalid_argument("sign_magnitude: requires n >= 2");
  const std::uint64_t m = root.order;
  if (n.value() == m)
    throw std::invalid_argument("sign_magnitude: Phi_n vanishes at a primitive n-th root");
  const CycloElement value = eval_phi_exact(n, root);

  SignMagnitudeForm out;
  out.root = root;
  const BigRat crossing_bound(n.value() * root.exponent, m);
  out.sign = (phi_partial(crossing_bound, n) % 2 == 0) ? 1 : -1;

  const BigInt phi_n = euler_phi(n);
  const std::uint64_t twist_exp =
      ((BigInt(root.exponent) * phi_n) % BigInt(2 * m)).convert_to<std::uint64_t>();
  out.twist = RootOfUnity::zeta_power(2 * m, static_cast<std::int64_t>(twist_exp));
  out.magnitude = abs(to_complex_ext(value));

  // strip the twist exactly: u = value * zeta_{2m}^{-twist} should be sign*|value|
  const CycloElement u =
      embed(value, 2 * m) * CycloElement::zeta_power(2 * m, -static_cast<std::int64_t>(twist_exp));
  if (u.is_rational()) {
    const BigRat r = u.rational_value();
    if (denominator(r) != 1)
      throw std::logic_error("sign_magnitude: integral value expected after twist removal");
    if ((r < 0 && out.sign != -1) || (r > 0 && out.sign != 1))
      throw std::logic_error("sign_magnitude: crossing-count sign disagrees with the exact value");
    out.kind = SignMagnitudeForm::Kind::integer;
    out.integer_magnitude = abs(numerator(r));
    return out;
  }
  const bool quartic = (m == 5 || m == 8 || m == 10 || m == 12);
  const std::uint64_t n_mod_m = (n.value() % BigInt(m)).convert_to<std::uint64_t>();
  bool hypothesis = quartic && gcd_u64(n_mod_m, m) == 1;
  if (hypothesis)
    for (const auto& f : n.factors())
      if (f.prime % m == 1 || f.prime % m == m - 1) {
        hypothesis = false;
        break;
      }
  if (hypothesis) {
    out.kind = SignMagnitudeForm::Kind::gamma_power;
    const unsigned w = small_omega(n);
    std::int64_t e = 1;
    for (unsigned i = 0; i + 1 < w; ++i) e *= 2;
    if (big_omega(n) % 2 == 0) e = -e;  // (-1)^{Omega - 1}
    out.gamma_exponent = e;
    return out;
  }
  out.kind = SignMagnitudeForm::Kind::numeric;
  return out;
}

BigInt abs_value_low_m(std::uint64_t n, std::uint64_t m) {
  if (m != 1 && m != 2 && m != 3 && m != 4 && m != 6)
    throw std::invalid_argument("abs_value_low_m: m must be one of 1, 2, 3, 4, 6");
  if (n <= m) throw std::invalid_argument("abs_value_low_m: requires n > m");
  std::uint64_t p;
  if (n % m == 0 && is_prime_power(n / m, &p)) return BigInt(p);
  return 1;
}

Real abs_log_quartic(const FactoredInt& n, const RootOfUnity& root) {
  const std::uint64_t m = root.order;
  if (m != 5 && m != 8 && m != 10 && m != 12)
    throw std::invalid_argument("abs_log_quartic: order must be one of 5, 8, 10, 12");
  if (n.value() < 2) throw std::invalid_argument("abs_log_quartic: requires n > 1");
  for (const auto& f : n.factors()) {
    if (m % f.prime == 0)
      throw InapplicableHypothesisError("abs_log_quartic: n shares the prime " +
                                        std::to_string(f.prime) + " with the order");
    if (f.prime % m == 1 || f.prime % m == m - 1)
      throw InapplicableHypothesisError("abs_log_quartic: prime divisor " +
                                        std::to_string(f.prime) + " is +-1 modulo the order");
  }
  const Real log_gamma = log(abs(to_complex_ext(gamma_element(root))));
  Real coeff = 1;
  const unsigned w = small_omega(n);
  for (unsigned i = 0; i + 1 < w; ++i) coeff *= 2;
  if (big_omega(n) % 2 == 0) coeff = -coeff;
  return coeff * log_gamma;
}

Real abs_log_quartic(const FactoredInt& n, std::uint64_t m) {
  return abs_log_quartic(n, RootOfUnity::make(m, 1));
}

CycloElement closed_value(const FactoredInt& n, const RootOfUnity& root) {
  switch (root.order) {
    case 1: return rat(1, BigRat(value_at_one(n)));
    case 2: return rat(2, BigRat(value_at_minus_one(n)));
    case 3: return value_at_zeta3(n).automorphism(root.exponent);
    case 4: return value_at_i(n).automorphism(root.exponent);
    case 5: return value_at_zeta5(n).automorphism(root.exponent);
    case 6: return value_at_zeta6(n).automorphism(root.exponent);
    default:
      throw std::invalid_argument("closed_value: tables cover orders 1 through 6 only");
  }
}

}  // namespace cyclo
