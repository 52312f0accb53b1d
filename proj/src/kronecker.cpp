#include "cyclotomic/kronecker.hpp"

#include <algorithm>

namespace cyclo {

namespace {

// phi(d) for d <= limit by sieve
std::vector<std::uint32_t> phi_table(std::uint64_t limit) {
  std::vector<std::uint32_t> phi(limit + 1);
  for (std::uint64_t i = 0; i <= limit; ++i) phi[i] = static_cast<std::uint32_t>(i);
  for (std::uint64_t p = 2; p <= limit; ++p) {
    if (phi[p] != p) continue;  // p composite
    for (std::uint64_t j = p; j <= limit; j += p) phi[j] -= phi[j] / p;
  }
  return phi;
}

}  // namespace

std::optional<KroneckerFactorization> factor_kronecker(const IntPolynomial& f) {
  if (f.is_zero()) throw std::invalid_argument("factor_kronecker: zero polynomial");
  if (!f.is_monic()) throw std::invalid_argument("factor_kronecker: input must be monic");

  KroneckerFactorization out;
  while (f.coeff(out.monomial_exponent) == 0) ++out.monomial_exponent;
  std::vector<BigInt> shifted(f.coeffs().begin() + out.monomial_exponent, f.coeffs().end());
  IntPolynomial residual{std::move(shifted)};

  const std::uint64_t deg0 = static_cast<std::uint64_t>(residual.degree());
  if (deg0 == 0) return out;  // pure monomial
  // phi(d) > sqrt(d/2), so phi(d) <= deg0 forces d <= 2 deg0^2
  const std::uint64_t limit = 2 * deg0 * deg0;
  constexpr std::uint64_t kSieveCap = std::uint64_t(1) << 24;
  std::vector<std::uint32_t> phi;
  if (limit <= kSieveCap) phi = phi_table(limit);

  for (std::uint64_t d = 1; d <= limit && residual.degree() > 0; ++d) {
    const std::uint64_t phi_d =
        phi.empty() ? euler_phi(FactoredInt::of(d)).convert_to<std::uint64_t>() : phi[d];
    if (phi_d > static_cast<std::uint64_t>(residual.degree())) continue;
    const PolyPtr cand = cyclotomic(FactoredInt::of(d));
    unsigned mult = 0;
    while (auto q = try_exact_div(residual, *cand)) {
      residual = std::move(*q);
      ++mult;
      if (residual.degree() == 0) break;
    }
    if (mult > 0) out.factors.emplace_back(d, mult);
  }
  if (residual == IntPolynomial::one()) return out;
  return std::nullopt;
}

IntPolynomial expand_factorization(const KroneckerFactorization& fact) {
  IntPolynomial out = IntPolynomial::monomial(1, fact.monomial_exponent);
  for (const auto& [d, mult] : fact.factors) {
    const PolyPtr phi_d = cyclotomic(FactoredInt::of(d));
    for (unsigned i = 0; i < mult; ++i) out = out * *phi_d;
  }
  return out;
}

Reciprocity reciprocity_class(const KroneckerFactorization& fact) {
  if (fact.monomial_exponent != 0)
    throw std::invalid_argument("reciprocity_class: requires f(0) != 0");
  unsigned k = 0;
  for (const auto& [d, mult] : fact.factors)
    if (d == 1) k = mult;
  return (k % 2 == 0) ? Reciprocity::self_reciprocal : Reciprocity::anti_self_reciprocal;
}

SignFacts sign_facts(const IntPolynomial& f) {
  const auto fact = factor_kronecker(f);
  if (!fact) throw std::invalid_argument("sign_facts: not a Kronecker polynomial");
  if (fact->monomial_exponent != 0) throw std::invalid_argument("sign_facts: requires f(0) != 0");

  SignFacts out;
  out.value_at_one = f.eval(1);
  out.value_at_minus_one = f.eval(-1);
  out.one_nonneg = out.value_at_one >= 0;
  out.minus_one_nonneg = out.value_at_minus_one >= 0;
  bool has_1 = false, has_2 = false;
  for (const auto& [d, mult] : fact->factors) {
    (void)mult;
    if (d == 1) has_1 = true;
    if (d == 2) has_2 = true;
  }
  out.strictly_positive = !has_1 && !has_2;
  if (!out.one_nonneg) throw std::logic_error("sign_facts: f(1) < 0 for a Kronecker polynomial");
  if (out.value_at_one != 0 && !out.minus_one_nonneg)
    throw std::logic_error("sign_facts: f(-1) < 0 with f(1) != 0");
  if (out.strictly_positive != (out.value_at_one > 0 && out.value_at_minus_one > 0))
    throw std::logic_error("sign_facts: factor analysis disagrees with the evaluations");
  if (out.strictly_positive) {
    for (int i = -8; i <= 8; ++i) {  // grid spot check on [-2, 2]
      const double x = i / 4.0;
      double acc = 0.0;
      for (auto it = f.coeffs().rbegin(); it != f.coeffs().rend(); ++it)
        acc = acc * x + it->convert_to<double>();
      if (acc <= 0.0) throw std::logic_error("sign_facts: grid sample contradicts positivity");
    }
  }
  return out;
}

BigInt abs_at_low_m(const KroneckerFactorization& fact, std::uint64_t m) {
  if (m != 1 && m != 2 && m != 3 && m != 4 && m != 6)
    throw std::invalid_argument("abs_at_low_m: m must be one of 1, 2, 3, 4, 6");
  for (const auto& [d, mult] : fact.factors) {
    (void)mult;
    if (d <= m)
      throw InapplicableHypothesisError("abs_at_low_m: factor index " + std::to_string(d) +
                                        " does not exceed m");
  }
  BigInt out = 1;
  for (const auto& [d, mult] : fact.factors) {
    if (d % m != 0) continue;
    const std::uint64_t lam = mangoldt_exp(FactoredInt::of(d / m));
    for (unsigned i = 0; i < mult; ++i) out *= lam;
  }
  return out;
}

}  // namespace cyclo
