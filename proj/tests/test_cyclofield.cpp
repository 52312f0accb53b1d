#include <doctest.h>

#include <cmath>
#include <numeric>
#include <random>

#include "cyclotomic/cyclofield.hpp"
#include "cyclotomic/polyring.hpp"

using namespace cyclo;

namespace {

CycloElement rnd_element(std::mt19937_64& rng, std::uint64_t m) {
  CycloElement out(m);
  const std::uint64_t phi = out.degree();
  for (std::uint64_t i = 0; i < phi; ++i) {
    const long long num = static_cast<long long>(rng() % 11) - 5;
    const long long den = 1 + static_cast<long long>(rng() % 4);
    out = out + CycloElement::zeta_power(m, static_cast<std::int64_t>(i)) * BigRat(num, den);
  }
  return out;
}

double cabs(const std::complex<double>& z) { return std::abs(z); }

}  // namespace

TEST_SUITE("cyclofield") {

TEST_CASE("root of unity canonicalization") {
  CHECK(RootOfUnity::make(4, 5) == RootOfUnity{4, 1});
  CHECK(RootOfUnity::make(1, 7) == RootOfUnity{1, 0});
  CHECK_THROWS_AS(RootOfUnity::make(4, 2), std::invalid_argument);
  CHECK_THROWS_AS(RootOfUnity::make(0, 1), std::invalid_argument);
  CHECK(RootOfUnity::zeta_power(12, 8) == RootOfUnity{3, 2});
  CHECK(RootOfUnity::zeta_power(12, -1) == RootOfUnity{12, 11});
  CHECK(RootOfUnity::zeta_power(5, 10) == RootOfUnity{1, 0});
}

TEST_CASE("reduction to the power basis") {
  CHECK(reduce(IntPolynomial::monomial(1, 3), 3) == CycloElement::from_rational(3, 1));
  CHECK(reduce(IntPolynomial::all_ones(3), 3).is_zero());
  CHECK(reduce(IntPolynomial::monomial(1, 1), 4) == CycloElement::zeta_power(4, 1));

  // ring homomorphism on random polynomials
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    const std::uint64_t m = 1 + rng() % 16;
    std::vector<BigInt> fc(1 + rng() % 12), gc(1 + rng() % 12);
    for (auto& c : fc) c = static_cast<long long>(rng() % 9) - 4;
    for (auto& c : gc) c = static_cast<long long>(rng() % 9) - 4;
    const IntPolynomial f{std::move(fc)}, g{std::move(gc)};
    CHECK(reduce(f * g, m) == reduce(f, m) * reduce(g, m));
    CHECK(reduce(f + g, m) == reduce(f, m) + reduce(g, m));
  }
}

TEST_CASE("inverse") {
  const CycloElement z5 = CycloElement::zeta_power(5, 1);
  const CycloElement inv = z5.inverse();
  // zeta_5^4 = -1 - zeta - zeta^2 - zeta^3 in the power basis
  CHECK(inv == CycloElement::zeta_power(5, 4));
  CHECK(inv.coords() == std::vector<BigRat>{-1, -1, -1, -1});
  CHECK(z5 * inv == CycloElement::from_rational(5, 1));
  CHECK_THROWS_AS(CycloElement(7).inverse(), DivisionByZeroError);
}

TEST_CASE("modulus mismatch") {
  const CycloElement a = CycloElement::from_rational(3, 1);
  const CycloElement b = CycloElement::from_rational(4, 1);
  CHECK_THROWS_AS(a + b, ModulusMismatchError);
  CHECK_THROWS_AS(a * b, ModulusMismatchError);
  CHECK(a != b);
}

TEST_CASE("field laws on random elements") {
  std::mt19937_64 rng(41);
  for (std::uint64_t m = 1; m <= 24; ++m) {
    for (int trial = 0; trial < 6; ++trial) {
      const CycloElement a = rnd_element(rng, m), b = rnd_element(rng, m), c = rnd_element(rng, m);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a * b == b * a);
      if (!a.is_zero()) CHECK(a * a.inverse() == CycloElement::from_rational(m, 1));
    }
  }
}

TEST_CASE("automorphisms") {
  CHECK(CycloElement::zeta_power(5, 1).automorphism(2) == CycloElement::zeta_power(5, 2));
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const std::uint64_t m = 1 + rng() % 20;
    const CycloElement a = rnd_element(rng, m);
    CHECK(a.automorphism(1) == a);
  }
  // composition and conjugation
  for (std::uint64_t m : {5, 8, 12, 15}) {
    const CycloElement a = rnd_element(rng, m);
    for (std::uint64_t j = 1; j < m; ++j) {
      if (std::gcd(j, m) != 1) continue;
      for (std::uint64_t j2 = 1; j2 < m; ++j2) {
        if (std::gcd(j2, m) != 1) continue;
        CHECK(a.automorphism(j).automorphism(j2) == a.automorphism((j * j2) % m));
      }
      const auto lhs = to_complex(a.automorphism(m - 1));
      const auto rhs = std::conj(to_complex(a));
      CHECK(cabs(lhs - rhs) < 1e-9);
    }
  }
  CHECK_THROWS_AS(CycloElement::zeta_power(4, 1).automorphism(2), std::invalid_argument);
}

TEST_CASE("norm identities") {
  // norm(k - zeta_m) = Phi_m(k)
  for (std::uint64_t m = 1; m <= 30; ++m) {
    const PolyPtr phi_m = cyclotomic(FactoredInt::of(m));
    for (long long k = -3; k <= 3; ++k) {
      const CycloElement elem =
          CycloElement::from_rational(m, k) - CycloElement::zeta_power(m, 1);
      CHECK(norm(elem) == BigRat(phi_m->eval(k)));
    }
  }
  CHECK(norm(CycloElement::from_rational(9, 1)) == 1);
  // norm(zeta_m) equals the sign-adjusted constant coefficient of Phi_m
  for (std::uint64_t m = 3; m <= 30; ++m) {
    const PolyPtr phi_m = cyclotomic(FactoredInt::of(m));
    const BigInt sign = (phi_m->degree() % 2 == 0) ? 1 : -1;
    CHECK(norm(CycloElement::zeta_power(m, 1)) == BigRat(sign * phi_m->coeff(0)));
    CHECK(norm(CycloElement::zeta_power(m, 1)) == 1);
  }
}

TEST_CASE("exact evaluation oracle") {
  CHECK(eval_phi_exact(FactoredInt::of(4), RootOfUnity::make(4, 1)).is_zero());
  CHECK(eval_phi_exact(FactoredInt::of(3), RootOfUnity::make(4, 1)) ==
        CycloElement::zeta_power(4, 1));
  CHECK(eval_phi_exact(FactoredInt::of(9), RootOfUnity::make(3, 1)) ==
        CycloElement::from_rational(3, 3));
  for (std::uint64_t n = 1; n <= 50; ++n)
    for (std::uint64_t m = 1; m <= 12; ++m) {
      const RootOfUnity root = RootOfUnity::make(m, m == 1 ? 0 : 1);
      CHECK(eval_phi_exact(FactoredInt::of(n), root).is_zero() == (n == m));
    }
}

TEST_CASE("derivative and logarithmic derivative") {
  CHECK(eval_phi_derivative_exact(FactoredInt::of(5), RootOfUnity{1, 0}) ==
        CycloElement::from_rational(1, 10));
  // f_2(zeta_3) = 1/(1+zeta_3) = -zeta_3
  CHECK(logderiv_exact(FactoredInt::of(2), RootOfUnity::make(3, 1)) ==
        -CycloElement::zeta_power(3, 1));
  // f_6(1) = phi(6)/2 = 1
  CHECK(logderiv_exact(FactoredInt::of(6), RootOfUnity{1, 0}) ==
        CycloElement::from_rational(1, 1));
  CHECK_THROWS_AS(logderiv_exact(FactoredInt::of(6), RootOfUnity::make(6, 1)), PoleError);
}

TEST_CASE("complex projection") {
  const auto i = to_complex(CycloElement::zeta_power(4, 1));
  CHECK(cabs(i - std::complex<double>(0, 1)) < 1e-15);
  const auto half = to_complex(CycloElement::from_rational(6, BigRat(1, 2)));
  CHECK(cabs(half - std::complex<double>(0.5, 0)) < 1e-15);
}

TEST_CASE("unit detection") {
  CHECK_FALSE(is_unit(eval_phi_exact(FactoredInt::of(12), RootOfUnity::make(4, 1))));
  CHECK(is_unit(eval_phi_exact(FactoredInt::of(7), RootOfUnity::make(3, 1))));
  CHECK_THROWS_AS(is_unit(CycloElement::from_rational(5, BigRat(1, 2))),
                  NotAlgebraicIntegerError);
}

TEST_CASE("Galois invariance of the evaluation") {
  for (std::uint64_t m = 1; m <= 20; ++m)
    for (std::uint64_t n = 1; n <= 100; ++n) {
      const FactoredInt nf = FactoredInt::of(n);
      const CycloElement base = eval_phi_exact(nf, RootOfUnity::make(m, m == 1 ? 0 : 1));
      for (std::uint64_t j = 2; j < m; ++j) {
        if (std::gcd(j, m) != 1) continue;
        CHECK(eval_phi_exact(nf, RootOfUnity::make(m, j)) == base.automorphism(j));
      }
    }
}

TEST_CASE("palindromes give integers after twist removal in quadratic fields") {
  for (std::uint64_t m : {3, 4, 6}) {
    for (std::uint64_t n = 4; n <= 300; ++n) {
      const BigInt phi_n = euler_phi(FactoredInt::of(n));
      const std::int64_t half_deg = (phi_n / 2).convert_to<std::int64_t>();
      const CycloElement twisted =
          eval_phi_exact(FactoredInt::of(n), RootOfUnity::make(m, 1)) *
          CycloElement::zeta_power(m, -half_deg);
      CHECK(twisted.is_rational());
      CHECK(denominator(twisted.rational_value()) == 1);
    }
  }
}

TEST_CASE("unit-circle split of palindrome values") {
  // f(z) = +- |f(z)| z^{deg/2} at 50 random roots of unity
  std::mt19937_64 rng(91);
  int done = 0;
  while (done < 50) {
    const std::uint64_t n = 3 + rng() % 298;
    const std::uint64_t m = 2 + rng() % 29;
    std::uint64_t j = 1 + rng() % m;
    while (std::gcd(j, m) != 1) j = 1 + rng() % m;
    if (n == m) continue;
    const FactoredInt nf = FactoredInt::of(n);
    const Complex w = to_complex_ext(eval_phi_exact(nf, RootOfUnity::make(m, j % m)));
    const std::uint64_t d = euler_phi(nf).convert_to<std::uint64_t>();
    const Real angle = real_pi() * Real(d) * Real(j % m) / Real(m);
    const Complex half_twist(cos(angle), sin(angle));
    const Complex target = abs(w) * half_twist;
    const Real err = std::min(abs(w - target), abs(w + target));
    CHECK(err.convert_to<double>() < 1e-9 * (1.0 + abs(w).convert_to<double>()));
    ++done;
  }
}

TEST_CASE("embedding into a larger field") {
  std::mt19937_64 rng(3);
  for (auto [m, big] : std::vector<std::pair<std::uint64_t, std::uint64_t>>{
           {3, 12}, {4, 8}, {5, 10}, {6, 12}, {1, 7}}) {
    const CycloElement a = rnd_element(rng, m);
    const CycloElement b = embed(a, big);
    CHECK(b.modulus() == big);
    CHECK(cabs(to_complex(a) - to_complex(b)) < 1e-9);
  }
  CHECK_THROWS_AS(embed(CycloElement::from_rational(5, 1), 12), ModulusMismatchError);
}

}  // TEST_SUITE
