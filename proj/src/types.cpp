#include "cyclotomic/types.hpp"

#include <boost/math/constants/constants.hpp>

namespace cyclo {

Real to_real(const BigInt& n) { return Real(n); }

Real to_real(const BigRat& q) {
  return Real(numerator(q)) / Real(denominator(q));
}

std::complex<double> to_double(const Complex& z) {
  return {z.real().convert_to<double>(), z.imag().convert_to<double>()};
}

const Real& real_pi() {
  static const Real pi = boost::math::constants::pi<Real>();
  return pi;
}

BigInt floor_nonneg(const BigRat& q) {
  return numerator(q) / denominator(q);
}

}  // namespace cyclo
