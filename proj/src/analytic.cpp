#include "cyclotomic/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>

namespace cyclo {

namespace {

Complex unit_root(std::uint64_t order, std::int64_t k) {
  return to_complex_ext(RootOfUnity::zeta_power(order, k));
}

void require_coprime_pair(const FactoredInt& n, const RootOfUnity& root, const char* who) {
  if (n.value() < 2 || root.order < 2)
    throw std::invalid_argument(std::string(who) + ": requires n, m > 1");
  for (const auto& f : n.factors())
    if (root.order % f.prime == 0)
      throw std::invalid_argument(std::string(who) + ": n must be coprime to the order");
}

}  // namespace

Complex char_coeff_value(const DirichletCharacter& chi, const RootOfUnity& root) {
  const std::uint64_t m = root.order;
  if (m < 2) throw std::invalid_argument("char_coeff_value: order must exceed 1");
  if (chi.modulus() != m)
    throw std::invalid_argument("char_coeff_value: character modulus differs from root order");
  const std::uint64_t L = chi.group().exponent;
  Complex sum = 0;
  for (std::uint64_t g : chi.group().residues) {
    const std::uint64_t t = *chi.eval_exponent(g);
    const Complex term = log(Complex(1) - unit_root(m, static_cast<std::int64_t>(root.exponent * g)));
    sum += unit_root(L, -static_cast<std::int64_t>(t)) * term;
  }
  return sum;
}

Complex char_coeff_logderiv(const DirichletCharacter& chi, const RootOfUnity& root) {
  const std::uint64_t m = root.order;
  if (m < 2) throw std::invalid_argument("char_coeff_logderiv: order must exceed 1");
  if (chi.modulus() != m)
    throw std::invalid_argument("char_coeff_logderiv: character modulus differs from root order");
  const std::uint64_t L = chi.group().exponent;
  Complex sum = 0;
  for (std::uint64_t g : chi.group().residues) {
    const std::uint64_t t = *chi.eval_exponent(g);
    const Complex num = unit_root(m, static_cast<std::int64_t>(root.exponent) *
                                         (static_cast<std::int64_t>(g) - 1));
    const Complex den = Complex(1) - unit_root(m, static_cast<std::int64_t>(root.exponent * g));
    sum += unit_root(L, -static_cast<std::int64_t>(t)) * (num / den);
  }
  return sum;
}

const std::vector<CharFormulaTerm>& char_formula_terms(const RootOfUnity& root) {
  static std::mutex mutex;
  static std::map<std::pair<std::uint64_t, std::uint64_t>, std::vector<CharFormulaTerm>> cache;
  std::lock_guard lock(mutex);
  auto [it, inserted] = cache.try_emplace({root.order, root.exponent});
  if (inserted) {
    for (auto& chi : all_characters(root.order)) {
      const Complex value = char_coeff_value(chi, root);
      const Complex deriv = char_coeff_logderiv(chi, root);
      it->second.push_back({std::move(chi), value, deriv});
    }
  }
  return it->second;
}

Complex eval_phi_char_formula(const FactoredInt& n, const RootOfUnity& root) {
  require_coprime_pair(n, root, "eval_phi_char_formula");
  const std::uint64_t m = root.order;
  const BigInt phi_m = euler_phi(FactoredInt::of(m));
  Complex sum = 0;
  for (const auto& term : char_formula_terms(root)) {
    const DirichletCharacter& chi = term.chi;
    const std::uint64_t L = chi.group().exponent;
    const std::uint64_t tn =
        *chi.eval_exponent((n.value() % BigInt(m)).convert_to<std::uint64_t>());
    Complex euler = 1;
    for (const auto& f : n.factors()) {
      const std::uint64_t tp = *chi.eval_exponent(f.prime);
      euler *= Complex(1) - unit_root(L, -static_cast<std::int64_t>(tp));
    }
    if (euler == Complex(0)) continue;  // a prime with chi(p) = 1 kills the character
    sum += term.value_coeff * unit_root(L, static_cast<std::int64_t>(tn)) * euler;
  }
  return exp(sum / to_real(phi_m));
}

Complex logderiv_char_formula(const FactoredInt& n, const RootOfUnity& root) {
  require_coprime_pair(n, root, "logderiv_char_formula");
  const std::uint64_t m = root.order;
  const BigInt phi_m = euler_phi(FactoredInt::of(m));
  Complex sum = 0;
  for (const auto& term : char_formula_terms(root)) {
    const DirichletCharacter& chi = term.chi;
    const std::uint64_t L = chi.group().exponent;
    const std::uint64_t tn =
        *chi.eval_exponent((n.value() % BigInt(m)).convert_to<std::uint64_t>());
    Complex euler = 1;
    for (const auto& f : n.factors()) {
      const std::uint64_t tp = *chi.eval_exponent(f.prime);
      euler *= Complex(1) - unit_root(L, -static_cast<std::int64_t>(tp)) / Real(f.prime);
    }
    sum += term.logderiv_coeff * unit_root(L, static_cast<std::int64_t>(tn)) * euler;
  }
  return -(to_real(n.value()) / to_real(phi_m)) * sum;
}

CycloElement logderiv_closed_quadratic(const FactoredInt& n, std::uint64_t m) {
  if (m != 3 && m != 4 && m != 6)
    throw std::invalid_argument("logderiv_closed_quadratic: m must be one of 3, 4, 6");
  if (n.value() < 2) throw std::invalid_argument("logderiv_closed_quadratic: requires n > 1");
  for (const auto& f : n.factors())
    if (m % f.prime == 0)
      throw std::invalid_argument("logderiv_closed_quadratic: n must be coprime to m");
  unsigned omega_minus = 0;
  BigRat ratio_prod = 1;
  for (const auto& f : n.factors()) {
    if (f.prime % m != m - 1) continue;
    omega_minus += f.exponent;
    ratio_prod *= BigRat(BigInt(f.prime) + 1, BigInt(f.prime) - 1);
  }
  const CycloElement one = CycloElement::from_rational(m, 1);
  const CycloElement zeta = CycloElement::zeta_power(m, 1);
  CycloElement bracket = (one + zeta) * (one - zeta).inverse() * ratio_prod;
  if (omega_minus % 2 == 1) bracket = -bracket;
  const BigRat half_phi(euler_phi(n), 2);
  return (one - bracket) * CycloElement::zeta_power(m, -1) * half_phi;
}

CycloElement logderiv_coprime_reduce(const FactoredInt& n, const RootOfUnity& root) {
  if (n.value() < 2) throw std::invalid_argument("logderiv_coprime_reduce: requires n > 1");
  const std::uint64_t m = root.order;
  const CoprimeReduction red = reduce_coprime(n, m);
  const FactoredInt n1 = FactoredInt::of(red.coprime_part);
  CycloElement acc(m);
  for (const auto& [d, mu] : red.plan) {
    const RootOfUnity power_root =
        RootOfUnity::zeta_power(m, static_cast<std::int64_t>(root.exponent * d));
    const CycloElement term = embed(logderiv_exact(n1, power_root), m);
    const CycloElement chain =
        CycloElement::zeta_power(m, static_cast<std::int64_t>(root.exponent) *
                                        (static_cast<std::int64_t>(d) - 1)) *
        BigRat(BigInt(mu) * d);
    acc = acc + term * chain;
  }
  return acc;
}

BigRat logderiv_at_one(const FactoredInt& n) {
  if (n.value() == 1) throw PoleError("logderiv_at_one: Phi_1(1) = 0");
  return BigRat(euler_phi(n), 2);
}

BigRat logderiv_at_minus_one(const FactoredInt& n) {
  if (n.value() == 2) throw PoleError("logderiv_at_minus_one: Phi_2(-1) = 0");
  return BigRat(-euler_phi(n), 2);
}

BigRat phi_prime_at_one(const FactoredInt& n) {
  if (n.value() == 1) return 1;
  const BigRat half_phi(euler_phi(n), 2);
  if (n.factors().size() == 1) return half_phi * BigRat(n.factors().front().prime);
  return half_phi;
}

BigRat phi_prime_at_minus_one(const FactoredInt& n) {
  if (n.value() == 1 || n.value() == 2) return 1;
  const BigRat half_phi(euler_phi(n), 2);
  const std::uint64_t nv = n.value_u64();
  std::uint64_t p;
  if (nv % 2 == 0 && is_prime_power(nv / 2, &p)) return -half_phi * BigRat(p);
  return -half_phi;
}

VaughanPoint vaughan_construct(std::uint64_t x) {
  if (x < 2) throw std::invalid_argument("vaughan_construct: requires x >= 2");
  std::vector<bool> composite(x + 1, false);
  std::vector<PrimePower> picked;
  double log_n = 0.0;
  for (std::uint64_t p = 2; p <= x; ++p) {
    if (composite[p]) continue;
    if (p <= x / p)
      for (std::uint64_t q = p * p; q <= x; q += p) composite[q] = true;
    if (p % 5 == 2 || p % 5 == 3) {
      picked.push_back({p, 1});
      log_n += std::log(static_cast<double>(p));
    }
  }
  VaughanPoint out;
  out.x = x;
  out.n = FactoredInt::from_prime_powers(std::move(picked));
  out.omega = small_omega(out.n);
  // odd omega wants log|1+zeta| > 0 (j = 1), even omega wants it < 0 (j = 2)
  const std::uint64_t j = (out.omega % 2 == 1) ? 1 : 2;
  out.best_root = RootOfUnity::make(5, j);
  const Real log_gamma = log(abs(Complex(1) + to_complex_ext(out.best_root)));
  Real coeff = 1;
  for (unsigned i = 0; i + 1 < out.omega; ++i) coeff *= 2;
  if (out.omega % 2 == 0) coeff = -coeff;  // (-2)^{omega-1}
  out.bound = (coeff * log_gamma).convert_to<double>();
  out.log_n = log_n;
  out.bound_minus_log_n = out.bound - log_n;
  return out;
}

}  // namespace cyclo
