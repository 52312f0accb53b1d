#pragma once

#include <string>
#include <string_view>

#include "cyclotomic/closedform.hpp"
#include "cyclotomic/cyclofield.hpp"
#include "cyclotomic/polyring.hpp"

namespace cyclo {

// Canonical polynomial form: comma-separated ascending coefficients,
// e.g. "-1,0,1" for x^2 - 1.
std::string format_polynomial(const IntPolynomial& f);
IntPolynomial parse_polynomial(std::string_view text);

// Rationals in lowest terms as "p" or "p/q".
std::string format_rational(const BigRat& q);

// Canonical exact-value form: "c0 + c1*z{m}^1 + ...", rational coefficients
// in lowest terms, zero terms omitted, unit coefficients shortened, e.g.
// "-2*z3^1" for -2 zeta_3 and "z4^1" for i.
std::string format_element(const CycloElement& a);

// Roots are written order/exponent, e.g. "4/1" for i.
std::string format_root(const RootOfUnity& r);
RootOfUnity parse_root(std::string_view text);

// Display form of a sign/magnitude split: sign, then an integer magnitude or
// a symbolic |g{m}|^e power (or a decimal when neither applies), then the
// "z{2m}^k" half-power twist, e.g. "-|g5|^1*z5^3" or "-3*z2^1".
std::string format_sign_magnitude(const SignMagnitudeForm& form);

std::string format_complex(const std::complex<double>& z);

}  // namespace cyclo
