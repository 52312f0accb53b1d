#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <cstdint>

namespace cyclo {

// Exact integer/rational arithmetic everywhere; floating point only appears
// when a value is explicitly projected to C.  The ~50 decimal digit floats
// give a wide margin over every 1e-9 tolerance used by the test suites.
using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;
using Real = boost::multiprecision::cpp_bin_float_50;
using Complex = boost::multiprecision::cpp_complex_50;

Real to_real(const BigInt& n);
Real to_real(const BigRat& q);
std::complex<double> to_double(const Complex& z);

// pi at working precision
const Real& real_pi();

// floor(q) for q >= 0
BigInt floor_nonneg(const BigRat& q);

}  // namespace cyclo
