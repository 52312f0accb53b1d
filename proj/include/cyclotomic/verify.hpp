#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cyclotomic/closedform.hpp"

namespace cyclo {

struct VerifyMismatch {
  std::uint64_t n;
  std::uint64_t order;
  std::uint64_t exponent;
  std::string closed_text;
  std::string oracle_text;
};

struct VerifyReport {
  std::uint64_t max_n = 0;
  std::vector<std::uint64_t> orders;
  unsigned jobs = 1;
  std::uint64_t values_checked = 0;
  std::vector<VerifyMismatch> failures;  // empty exactly when the sweep passed
  double elapsed_seconds = 0.0;

  bool ok() const { return failures.empty(); }
};

// Sweeps n in [1, max_n] and every primitive root of each requested order
// (all must be <= 6), comparing the closed-form tables against the exact
// field oracle.  Deterministic: identical reports for any job count, with
// failures ordered by (n, order, exponent).
VerifyReport verify_closed_forms(std::uint64_t max_n, const std::vector<std::uint64_t>& orders,
                                 unsigned jobs = 1);

}  // namespace cyclo
