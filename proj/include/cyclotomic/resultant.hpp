#pragma once

#include <cstdint>

#include "cyclotomic/cyclofield.hpp"
#include "cyclotomic/numtheory.hpp"

namespace cyclo {

// Resultant of Phi_n and Phi_m for n > m > 1: p^{phi(m)} when n/m is a power
// of the prime p, otherwise 1.
BigInt resultant_closed(std::uint64_t n, std::uint64_t m);

// Product of Phi_n over all primitive m-th roots of unity, computed exactly
// in Q(zeta_m) and collapsed to a rational.  Defined for n != m, n, m >= 1;
// this is the independent oracle for the closed form.
BigRat resultant_bruteforce(const FactoredInt& n, std::uint64_t m);

}  // namespace cyclo
