#include <doctest.h>

#include <cmath>
#include <numeric>
#include <random>

#include "cyclotomic/closedform.hpp"
#include "cyclotomic/textio.hpp"

using namespace cyclo;

namespace {

CycloElement rat(std::uint64_t m, BigRat v) { return CycloElement::from_rational(m, std::move(v)); }
CycloElement zp(std::uint64_t m, std::int64_t k) { return CycloElement::zeta_power(m, k); }
CycloElement oracle(std::uint64_t n, std::uint64_t m, std::uint64_t j) {
  return eval_phi_exact(FactoredInt::of(n), RootOfUnity::make(m, j));
}

}  // namespace

TEST_SUITE("closedform") {

TEST_CASE("values at 1 and -1") {
  CHECK(value_at_one(FactoredInt::of(1)) == 0);
  CHECK(value_at_one(FactoredInt::of(9)) == 3);
  CHECK(value_at_one(FactoredInt::of(12)) == 1);
  CHECK(value_at_minus_one(FactoredInt::of(1)) == -2);
  CHECK(value_at_minus_one(FactoredInt::of(2)) == 0);
  CHECK(value_at_minus_one(FactoredInt::of(18)) == 3);
  CHECK(value_at_minus_one(FactoredInt::of(12)) == 1);
  CHECK(value_at_minus_one(FactoredInt::of(4)) == 2);
}

TEST_CASE("congruence-1 reduction") {
  CHECK(mod1_case(FactoredInt::of(49), 3) == BigInt(1));    // 7 = 1 (mod 3), n' = 1 != 3
  CHECK(mod1_case(FactoredInt::of(147), 3) == BigInt(7));   // n = 3 * 7^2
  CHECK(!mod1_case(FactoredInt::of(8), 3).has_value());     // 2 = -1 (mod 3)
  CHECK(!mod1_case(FactoredInt::of(363), 3).has_value());   // 3 * 11^2: 11 = -1 (mod 3)
  CHECK(mod1_case(FactoredInt::of(8), 1) == BigInt(2));     // n' = 1 = m
  CHECK(mod1_case(FactoredInt::of(12), 1) == BigInt(1));
  CHECK(mod1_case(FactoredInt::of(2 * 49), 2) == BigInt(7));  // n = 2 * 7^2
}

TEST_CASE("congruence-minus-1 reduction") {
  // n = 2^3, m = 3: k odd, n' = 1 -> -zeta^{-1} = -zeta_3^2
  const auto v8 = modminus1_case(FactoredInt::of(8), 3);
  REQUIRE(v8.has_value());
  CHECK(*v8 == -zp(3, -1));
  CHECK(*v8 == oracle(8, 3, 1));
  CHECK(!modminus1_case(FactoredInt::of(7), 3).has_value());  // 7 = 1 (mod 3)
  CHECK(!modminus1_case(FactoredInt::of(8), 1).has_value());  // degenerate order

  // agreement with the oracle wherever the hypothesis holds
  for (std::uint64_t m : {2, 3, 4, 5, 6}) {
    for (std::uint64_t n = 2; n <= 400; ++n) {
      if (n == m) continue;
      const FactoredInt nf = FactoredInt::of(n);
      if (const auto v = modminus1_case(nf, m)) CHECK(*v == oracle(n, m, 1));
      if (const auto v = mod1_case(nf, m)) CHECK(rat(m, BigRat(*v)) == oracle(n, m, 1));
    }
  }
}

TEST_CASE("table at i") {
  CHECK(value_at_i(FactoredInt::of(1)) == zp(4, 1) - rat(4, 1));
  CHECK(value_at_i(FactoredInt::of(2)) == zp(4, 1) + rat(4, 1));
  CHECK(value_at_i(FactoredInt::of(4)).is_zero());
  CHECK(value_at_i(FactoredInt::of(3)) == zp(4, 1));     // i
  CHECK(value_at_i(FactoredInt::of(9)) == -zp(4, 1));    // (-1)^{k+1} i, k = 2
  CHECK(value_at_i(FactoredInt::of(6)) == -zp(4, 1));    // (-1)^k i, k = 1
  CHECK(value_at_i(FactoredInt::of(21)) == rat(4, -1));
  CHECK(value_at_i(FactoredInt::of(42)) == rat(4, -1));
  CHECK(value_at_i(FactoredInt::of(20)) == rat(4, 5));
  CHECK(value_at_i(FactoredInt::of(8)) == rat(4, 2));
  CHECK(value_at_i(FactoredInt::of(5)) == rat(4, 1));
}

TEST_CASE("table at zeta_3") {
  CHECK(value_at_zeta3(FactoredInt::of(1)) == zp(3, 1) - rat(3, 1));
  CHECK(value_at_zeta3(FactoredInt::of(3)).is_zero());
  CHECK(value_at_zeta3(FactoredInt::of(2)) == -zp(3, 2));  // 1 + zeta_3
  CHECK(value_at_zeta3(FactoredInt::of(2)) == rat(3, 1) + zp(3, 1));
  CHECK(value_at_zeta3(FactoredInt::of(9)) == rat(3, 3));
  CHECK(value_at_zeta3(FactoredInt::of(147)) == rat(3, 7));
  CHECK(value_at_zeta3(FactoredInt::of(6)) == zp(3, 1) * BigRat(-2));  // -2 zeta, s = 0
  CHECK(value_at_zeta3(FactoredInt::of(4)) == -zp(3, 1));              // s = 1: -1/zeta = -zeta_3
  CHECK(value_at_zeta3(FactoredInt::of(10)) == zp(3, -1));             // r = 2: 1/zeta, s = 0
}

TEST_CASE("table at zeta_6") {
  CHECK(value_at_zeta6(FactoredInt::of(1)) == zp(6, 2));
  CHECK(value_at_zeta6(FactoredInt::of(2)) == zp(6, 1) + rat(6, 1));
  CHECK(value_at_zeta6(FactoredInt::of(3)) == zp(6, 1) * BigRat(2));
  CHECK(value_at_zeta6(FactoredInt::of(6)).is_zero());
  CHECK(value_at_zeta6(FactoredInt::of(5)) == zp(6, 2));   // zeta with s = 0
  CHECK(value_at_zeta6(FactoredInt::of(42)) == rat(6, 7));  // 6 p^k with p = 7
  CHECK(value_at_zeta6(FactoredInt::of(54)) == rat(6, 3));  // 6 * 3^2
  CHECK(value_at_zeta6(FactoredInt::of(12)) == zp(6, 2) * BigRat(-2));  // -2/zeta, s = 1
  CHECK(value_at_zeta6(FactoredInt::of(4)) == -zp(6, -2));               // -zeta, s = 1
  CHECK(value_at_zeta6(FactoredInt::of(15)) == zp(6, -2));               // 1/zeta, s = 0
}

TEST_CASE("table at zeta_5") {
  CHECK(value_at_zeta5(FactoredInt::of(1)) == zp(5, 1) - rat(5, 1));
  CHECK(value_at_zeta5(FactoredInt::of(5)).is_zero());
  CHECK(value_at_zeta5(FactoredInt::of(7)) == rat(5, 1) + zp(5, 1));  // geometric sum
  CHECK(value_at_zeta5(FactoredInt::of(25)) == rat(5, 5));
  CHECK(value_at_zeta5(FactoredInt::of(11)) == rat(5, 1));
  CHECK(value_at_zeta5(FactoredInt::of(55)) == rat(5, 11));
  CHECK(value_at_zeta5(FactoredInt::of(19)) == -zp(5, -1));  // q = 19 = -1 (mod 5), k = 1
  CHECK(value_at_zeta5(FactoredInt::of(10)) ==
        rat(5, 2) * (rat(5, 1) + zp(5, 1)).inverse());  // 2 / Phi_2(zeta_5)
}

TEST_CASE("all four tables against the oracle up to 400") {
  for (std::uint64_t n = 1; n <= 400; ++n) {
    const FactoredInt nf = FactoredInt::of(n);
    CHECK(value_at_zeta3(nf) == oracle(n, 3, 1));
    CHECK(value_at_i(nf) == oracle(n, 4, 1));
    CHECK(value_at_zeta5(nf) == oracle(n, 5, 1));
    CHECK(value_at_zeta6(nf) == oracle(n, 6, 1));
  }
}

TEST_CASE("coprime reduction plan") {
  const CoprimeReduction red = reduce_coprime(FactoredInt::of(12), 4);
  CHECK(red.coprime_part == 3);
  CHECK(red.rest == 4);
  const std::vector<std::pair<std::uint64_t, int>> expected{{2, -1}, {4, 1}};
  CHECK(red.plan == expected);

  const CoprimeReduction triv = reduce_coprime(FactoredInt::of(7), 4);
  CHECK(triv.coprime_part == 7);
  CHECK(triv.rest == 1);
  CHECK(triv.plan == std::vector<std::pair<std::uint64_t, int>>{{1, 1}});

  // evaluated plan reproduces the value: prod Phi_{n1}(xi^d)^{mu}
  for (std::uint64_t n : {12, 18, 20, 36, 63, 100}) {
    for (std::uint64_t m : {3, 4, 5, 6}) {
      if (n == m) continue;
      const CoprimeReduction r = reduce_coprime(FactoredInt::of(n), m);
      CycloElement acc = rat(m, 1);
      bool pole = false;
      for (const auto& [d, mu] : r.plan) {
        const CycloElement term =
            embed(eval_phi_exact(FactoredInt::of(r.coprime_part), RootOfUnity::zeta_power(m, d)), m);
        if (term.is_zero()) { pole = true; break; }
        acc = mu > 0 ? acc * term : acc * term.inverse();
      }
      if (!pole) CHECK(acc == oracle(n, m, 1));
    }
  }
}

TEST_CASE("reality criterion") {
  CHECK(is_real_value(FactoredInt::of(5), 4));
  CHECK_FALSE(is_real_value(FactoredInt::of(3), 4));
  CHECK(oracle(3, 4, 1) != oracle(3, 4, 1).conjugate());
  CHECK(is_real_value(FactoredInt::of(7), 6));
  CHECK_THROWS_AS(is_real_value(FactoredInt::of(1), 3), std::invalid_argument);

  for (std::uint64_t n = 2; n <= 200; ++n)
    for (std::uint64_t m = 1; m <= 12; ++m) {
      const CycloElement v = oracle(n, m, m == 1 ? 0 : 1);
      const bool nonzero_real = !v.is_zero() && v == v.conjugate();
      CHECK(is_real_value(FactoredInt::of(n), m) == nonzero_real);
    }
}

TEST_CASE("sign-magnitude split") {
  const SignMagnitudeForm f24 = sign_magnitude(FactoredInt::of(2), RootOfUnity::make(4, 1));
  CHECK(f24.sign == 1);
  CHECK(f24.twist == RootOfUnity{8, 1});
  CHECK(f24.kind == SignMagnitudeForm::Kind::numeric);
  CHECK(std::abs(f24.magnitude.convert_to<double>() - std::sqrt(2.0)) < 1e-12);
  const Complex rebuilt24 = to_complex_ext(f24.twist) * f24.magnitude;  // = 1 + i
  CHECK(abs(rebuilt24 - Complex(1, 1)).convert_to<double>() < 1e-12);

  const SignMagnitudeForm f75 = sign_magnitude(FactoredInt::of(7), RootOfUnity::make(5, 1));
  CHECK(f75.sign == -1);
  CHECK(f75.twist == RootOfUnity{5, 3});
  CHECK(f75.kind == SignMagnitudeForm::Kind::gamma_power);
  CHECK(f75.gamma_exponent == 1);

  const SignMagnitudeForm f31 = sign_magnitude(FactoredInt::of(3), RootOfUnity{1, 0});
  CHECK(f31.sign == 1);
  CHECK(f31.kind == SignMagnitudeForm::Kind::integer);
  CHECK(f31.integer_magnitude == 3);

  const SignMagnitudeForm f12 = sign_magnitude(FactoredInt::of(12), RootOfUnity::make(4, 1));
  CHECK(f12.kind == SignMagnitudeForm::Kind::integer);
  CHECK(f12.integer_magnitude == 3);
  CHECK(f12.sign == -1);
  CHECK(f12.twist == RootOfUnity{2, 1});  // zeta_8^{phi(12)} = -1

  CHECK_THROWS_AS(sign_magnitude(FactoredInt::of(4), RootOfUnity::make(4, 1)),
                  std::invalid_argument);
  CHECK_THROWS_AS(sign_magnitude(FactoredInt::of(1), RootOfUnity::make(3, 1)),
                  std::invalid_argument);
}

TEST_CASE("sign-magnitude reconstruction matches the oracle") {
  std::mt19937_64 rng(57);
  int done = 0;
  while (done < 150) {
    const std::uint64_t n = 2 + rng() % 199;
    const std::uint64_t m = 1 + rng() % 10;
    std::uint64_t j = rng() % m;
    if (m > 1 && std::gcd(j, m) != 1) continue;
    if (m == 1) j = 0;
    if (n == m) continue;
    const RootOfUnity root{m, j};
    const SignMagnitudeForm form = sign_magnitude(FactoredInt::of(n), root);
    const Complex twist = to_complex_ext(form.twist);
    const Complex rebuilt = twist * (form.magnitude * Real(form.sign));
    const Complex direct = to_complex_ext(oracle(n, m, j));
    const double err = abs(rebuilt - direct).convert_to<double>();
    CHECK(err < 1e-9 * (1.0 + abs(direct).convert_to<double>()));
    ++done;
  }
}

TEST_CASE("unit values obey the combined sign rule") {
  // whenever Phi_n(xi_m) is +-1 it equals (-1)^{phi(nj/m; n) + j phi(n)/m}
  for (std::uint64_t n = 2; n <= 200; ++n)
    for (std::uint64_t m = 1; m <= 10; ++m)
      for (std::uint64_t j = (m == 1 ? 0 : 1); j < std::max<std::uint64_t>(m, 1); ++j) {
        if (m > 1 && std::gcd(j, m) != 1) continue;
        const CycloElement v = oracle(n, m, j);
        if (!v.is_rational() || (v.rational_value() != 1 && v.rational_value() != -1)) {
          if (m == 1) break;
          continue;
        }
        const FactoredInt nf = FactoredInt::of(n);
        const BigInt phi_n = euler_phi(nf);
        REQUIRE(phi_n % BigInt(m) == 0);
        const BigInt crossings = phi_partial(BigRat(BigInt(n) * j, m), nf);
        const BigInt exponent = crossings + BigInt(j) * (phi_n / BigInt(m));
        const BigRat expected = (exponent % 2 == 0) ? 1 : -1;
        CHECK(v.rational_value() == expected);
        if (m == 1) break;
      }
}

TEST_CASE("absolute values at low orders") {
  CHECK(abs_value_low_m(12, 4) == 3);
  CHECK(abs_value_low_m(15, 4) == 1);
  CHECK(abs_value_low_m(18, 6) == 3);
  CHECK_THROWS_AS(abs_value_low_m(12, 5), std::invalid_argument);
  CHECK_THROWS_AS(abs_value_low_m(4, 4), std::invalid_argument);
}

TEST_CASE("quartic-order log-magnitude formula") {
  const Real log_gamma5 = log(abs(to_complex_ext(gamma_element(RootOfUnity::make(5, 1)))));
  CHECK(abs(abs_log_quartic(FactoredInt::of(2), 5) - log_gamma5).convert_to<double>() < 1e-30);
  CHECK(abs(abs_log_quartic(FactoredInt::of(6), 5) + 2 * log_gamma5).convert_to<double>() < 1e-30);

  const Real log_gamma12 = log(abs(to_complex_ext(gamma_element(RootOfUnity::make(12, 1)))));
  CHECK(abs(abs_log_quartic(FactoredInt::of(7), 12) - log_gamma12).convert_to<double>() < 1e-30);
  CHECK(std::abs(log_gamma12.convert_to<double>() - std::log(2.0 + std::sqrt(3.0))) < 1e-12);

  CHECK_THROWS_AS(abs_log_quartic(FactoredInt::of(11), 5), InapplicableHypothesisError);
  CHECK_THROWS_AS(abs_log_quartic(FactoredInt::of(10), 5), InapplicableHypothesisError);
  CHECK_THROWS_AS(abs_log_quartic(FactoredInt::of(1), 5), std::invalid_argument);

  // against the oracle at every admissible root
  for (std::uint64_t m : {5, 8, 10, 12}) {
    for (std::uint64_t n = 2; n <= 150; ++n) {
      const FactoredInt nf = FactoredInt::of(n);
      bool ok = std::gcd(n, m) == 1;
      for (const auto& f : nf.factors())
        if (f.prime % m == 1 || f.prime % m == m - 1) ok = false;
      if (!ok) continue;
      for (std::uint64_t j = 1; j < m; ++j) {
        if (std::gcd(j, m) != 1) continue;
        const RootOfUnity root{m, j};
        const double lhs = abs_log_quartic(nf, root).convert_to<double>();
        const double rhs = log(abs(to_complex_ext(oracle(n, m, j)))).convert_to<double>();
        CHECK(std::abs(lhs - rhs) < 1e-9 * (1.0 + std::abs(rhs)));
      }
    }
  }
}

TEST_CASE("quadratic-order closed form when no prime divisor is 1 mod m") {
  // Phi_n(xi_m) = (-xi_m)^{(-1)^{Omega} 2^{omega-1}} for m in {3,4,6},
  // gcd(n, m) = 1 and every prime divisor of n = -1 (mod m)
  for (std::uint64_t m : {3, 4, 6}) {
    for (std::uint64_t n = 2; n <= 1000; ++n) {
      if (std::gcd(n, m) != 1) continue;
      const FactoredInt nf = FactoredInt::of(n);
      bool all_minus_one = true;
      for (const auto& f : nf.factors())
        if (f.prime % m != m - 1) all_minus_one = false;
      if (!all_minus_one) continue;
      std::int64_t e = 1;
      for (unsigned i = 0; i + 1 < small_omega(nf); ++i) e *= 2;
      if (big_omega(nf) % 2 == 1) e = -e;
      const CycloElement base = -zp(m, 1);
      CycloElement power = rat(m, 1);
      const CycloElement step = e > 0 ? base : base.inverse();
      for (std::int64_t i = 0; i < (e > 0 ? e : -e); ++i) power = power * step;
      CHECK(power == closed_value(nf, RootOfUnity::make(m, 1)));
    }
  }
}

TEST_CASE("gamma elements") {
  CHECK(gamma_element(RootOfUnity::make(5, 1)) == rat(5, 1) + zp(5, 1));
  CHECK(gamma_element(RootOfUnity::make(8, 3)) == rat(8, 1) + zp(8, 3) + zp(8, 6));
  CHECK_THROWS_AS(gamma_element(RootOfUnity::make(7, 1)), std::invalid_argument);
}

}  // TEST_SUITE
