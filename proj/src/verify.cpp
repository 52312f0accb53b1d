#include "cyclotomic/verify.hpp"

#include <algorithm>
#include <chrono>
#include <thread>
#include <tuple>

#include "cyclotomic/textio.hpp"

namespace cyclo {

namespace {

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
  while (b) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

struct BlockResult {
  std::uint64_t values_checked = 0;
  std::vector<VerifyMismatch> failures;
};

BlockResult sweep_block(std::uint64_t lo, std::uint64_t hi,
                        const std::vector<std::uint64_t>& orders) {
  BlockResult out;
  for (std::uint64_t nv = lo; nv < hi; ++nv) {
    const FactoredInt n = FactoredInt::of(nv);
    const PolyPtr phi = cyclotomic(n);
    for (std::uint64_t m : orders) {
      // table values at the canonical root, conjugated per exponent
      for (std::uint64_t j = (m == 1 ? 0 : 1); j < std::max<std::uint64_t>(m, 1); ++j) {
        if (m > 1 && gcd_u64(j, m) != 1) continue;
        const RootOfUnity root{m, j};
        const CycloElement closed = closed_value(n, root);
        const CycloElement oracle = eval_poly_at_root(*phi, root);
        ++out.values_checked;
        if (closed != oracle)
          out.failures.push_back({nv, m, j, format_element(closed), format_element(oracle)});
        if (m == 1) break;
      }
    }
  }
  return out;
}

}  // namespace

VerifyReport verify_closed_forms(std::uint64_t max_n, const std::vector<std::uint64_t>& orders,
                                 unsigned jobs) {
  for (std::uint64_t m : orders)
    if (m < 1 || m > 6)
      throw std::invalid_argument("verify_closed_forms: orders must lie in 1..6");
  if (max_n < 1) throw std::invalid_argument("verify_closed_forms: max_n must be >= 1");
  if (jobs < 1) jobs = 1;

  const auto start = std::chrono::steady_clock::now();
  VerifyReport report;
  report.max_n = max_n;
  report.orders = orders;
  report.jobs = jobs;

  const std::uint64_t total = max_n;
  const unsigned workers = static_cast<unsigned>(std::min<std::uint64_t>(jobs, total));
  std::vector<BlockResult> results(workers);
  std::vector<std::thread> threads;
  const std::uint64_t chunk = (total + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    const std::uint64_t lo = 1 + w * chunk;
    const std::uint64_t hi = std::min<std::uint64_t>(1 + (w + 1) * chunk, max_n + 1);
    if (lo > max_n) break;
    threads.emplace_back([&results, w, lo, hi, &orders] { results[w] = sweep_block(lo, hi, orders); });
  }
  for (auto& t : threads) t.join();

  for (auto& r : results) {
    report.values_checked += r.values_checked;
    report.failures.insert(report.failures.end(), std::make_move_iterator(r.failures.begin()),
                           std::make_move_iterator(r.failures.end()));
  }
  std::sort(report.failures.begin(), report.failures.end(), [](const auto& a, const auto& b) {
    return std::tie(a.n, a.order, a.exponent) < std::tie(b.n, b.order, b.exponent);
  });
  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace cyclo
