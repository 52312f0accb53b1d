// Command-line surface for exact cyclotomic-polynomial evaluation at roots of
// unity: coefficients, exact/float/closed-form values, logarithmic
// derivatives, resultants, Kronecker factorization, the height-bound
// construction, the closed-form verification sweep and the log Phi_n(1) sum.
//
// Exit codes: 0 success, 1 verification mismatch, 2 usage error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>

#include "cyclotomic/analytic.hpp"
#include "cyclotomic/characters.hpp"
#include "cyclotomic/closedform.hpp"
#include "cyclotomic/cyclofield.hpp"
#include "cyclotomic/kronecker.hpp"
#include "cyclotomic/numtheory.hpp"
#include "cyclotomic/polyring.hpp"
#include "cyclotomic/resultant.hpp"
#include "cyclotomic/textio.hpp"
#include "cyclotomic/verify.hpp"

using json = nlohmann::ordered_json;
using namespace cyclo;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

void apply_cache_controls(bool no_memo) {
  if (no_memo) {
    set_cyclotomic_cache_capacity(0);
    return;
  }
  if (const char* cap = std::getenv("CYCLO_MEMO_CAP")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(cap, &end, 10);
    if (end && *end == '\0') set_cyclotomic_cache_capacity(static_cast<std::size_t>(v));
  }
}

std::string root_str(const RootOfUnity& r) { return format_root(r); }

int cmd_coeffs(std::uint64_t n, bool as_json) {
  const FactoredInt nf = FactoredInt::of(n);
  const PolyPtr phi = cyclotomic(nf);
  if (as_json) {
    json out{{"command", "coeffs"},
             {"n", n},
             {"degree", phi->degree()},
             {"height", phi->height().str()},
             {"coefficients", json::array()}};
    for (const auto& c : phi->coeffs()) out["coefficients"].push_back(c.str());
    std::cout << out.dump() << "\n";
  } else {
    std::cout << format_polynomial(*phi) << "\n";
  }
  return kExitOk;
}

int cmd_eval(std::uint64_t n, const std::string& root_text, bool want_float, bool closed_form,
             bool as_json) {
  const RootOfUnity root = parse_root(root_text);
  const FactoredInt nf = FactoredInt::of(n);
  const CycloElement exact = eval_phi_exact(nf, root);
  const std::complex<double> approx = to_complex(exact);

  bool matches = true;
  std::string closed_text;
  if (closed_form) {
    const CycloElement closed = closed_value(nf, root);
    closed_text = format_element(closed);
    matches = (closed == exact);
  }

  if (as_json) {
    json out{{"command", "eval"}, {"n", n}, {"root", root_str(root)},
             {"exact", format_element(exact)},
             {"float", {{"re", approx.real()}, {"im", approx.imag()}}}};
    if (n >= 2 && !exact.is_zero())
      out["sign_form"] = format_sign_magnitude(sign_magnitude(nf, root));
    if (closed_form) {
      out["closed_form"] = closed_text;
      out["matches_oracle"] = matches;
    }
    std::cout << out.dump() << "\n";
  } else {
    if (closed_form) {
      std::cout << closed_text << "\n" << (matches ? "MATCHES ORACLE" : "MISMATCH: oracle = " + format_element(exact)) << "\n";
    } else if (want_float) {
      std::cout << format_complex(approx) << "\n";
    } else {
      std::cout << format_element(exact) << "\n";
    }
  }
  return matches ? kExitOk : kExitMismatch;
}

int cmd_logderiv(std::uint64_t n, const std::string& root_text, bool as_json) {
  const RootOfUnity root = parse_root(root_text);
  const FactoredInt nf = FactoredInt::of(n);
  const CycloElement exact = logderiv_exact(nf, root);

  const std::uint64_t m = root.order;
  bool have_closed = false, matches = true;
  std::string closed_text;
  bool coprime = true;
  for (const auto& f : nf.factors())
    if (m % f.prime == 0) coprime = false;
  if ((m == 3 || m == 4 || m == 6) && coprime && n > 1) {
    const CycloElement closed = logderiv_closed_quadratic(nf, m).automorphism(root.exponent);
    closed_text = format_element(closed);
    have_closed = true;
    matches = (closed == exact);
  }

  if (as_json) {
    json out{{"command", "logderiv"}, {"n", n}, {"root", root_str(root)},
             {"exact", format_element(exact)}};
    if (have_closed) {
      out["closed_quadratic"] = closed_text;
      out["matches"] = matches;
    }
    std::cout << out.dump() << "\n";
  } else {
    std::cout << format_element(exact) << "\n";
    if (have_closed)
      std::cout << "closed form: " << closed_text << (matches ? " (EXACT MATCH)" : " (MISMATCH)")
                << "\n";
  }
  return matches ? kExitOk : kExitMismatch;
}

int cmd_resultant(std::uint64_t n, std::uint64_t m, bool brute, bool as_json) {
  bool swapped = false;
  if (n < m) {
    std::swap(n, m);
    swapped = true;
  }
  if (n == m) throw std::invalid_argument("resultant: indices must differ");
  const FactoredInt nf = FactoredInt::of(n);

  BigInt closed;
  if (m > 1) {
    closed = resultant_closed(n, m);
  } else {
    closed = value_at_one(nf);  // single root z = 1
  }
  bool matches = true;
  BigRat brute_value;
  if (brute) {
    brute_value = resultant_bruteforce(nf, m);
    matches = (brute_value == BigRat(closed));
  }

  if (as_json) {
    json out{{"command", "resultant"}, {"n", n}, {"m", m}, {"swapped", swapped},
             {"closed", closed.str()}};
    if (brute) {
      out["brute"] = format_rational(brute_value);
      out["matches"] = matches;
    }
    std::cout << out.dump() << "\n";
  } else {
    if (swapped) std::cerr << "note: computing resultant(" << n << ", " << m << ")\n";
    std::cout << closed.str() << "\n";
    if (brute)
      std::cout << "brute force: " << format_rational(brute_value)
                << (matches ? " (MATCH)" : " (MISMATCH)") << "\n";
  }
  return matches ? kExitOk : kExitMismatch;
}

int cmd_kronecker(const std::string& coeffs_text, std::int64_t abs_at, bool as_json) {
  const IntPolynomial f = parse_polynomial(coeffs_text);
  const auto fact = factor_kronecker(f);

  json out{{"command", "kronecker"}, {"input", format_polynomial(f)}};
  std::string line;
  if (!fact) {
    out["kronecker"] = false;
    if (as_json)
      std::cout << out.dump() << "\n";
    else
      std::cout << "NotKronecker\n";
    return kExitOk;
  }
  out["kronecker"] = true;
  out["monomial_exponent"] = fact->monomial_exponent;
  out["factors"] = json::array();
  for (const auto& [d, mult] : fact->factors)
    out["factors"].push_back({{"index", d}, {"multiplicity", mult}});

  if (fact->monomial_exponent > 0) line += "x^" + std::to_string(fact->monomial_exponent);
  for (const auto& [d, mult] : fact->factors) {
    if (!line.empty()) line += " * ";
    line += "Phi_" + std::to_string(d);
    if (mult > 1) line += "^" + std::to_string(mult);
  }
  if (line.empty()) line = "1";

  std::string reciprocity;
  json sign;
  bool have_sign = false;
  if (fact->monomial_exponent == 0) {
    reciprocity = reciprocity_class(*fact) == Reciprocity::self_reciprocal
                      ? "self_reciprocal"
                      : "anti_self_reciprocal";
    out["reciprocity"] = reciprocity;
    const SignFacts sf = sign_facts(f);
    sign = {{"value_at_one", sf.value_at_one.str()},
            {"value_at_minus_one", sf.value_at_minus_one.str()},
            {"strictly_positive", sf.strictly_positive}};
    out["sign_facts"] = sign;
    have_sign = true;
  }
  std::string abs_line;
  if (abs_at >= 0) {
    const BigInt v = abs_at_low_m(*fact, static_cast<std::uint64_t>(abs_at));
    out["abs_at"] = {{"m", abs_at}, {"value", v.str()}};
    abs_line = "|f| at order " + std::to_string(abs_at) + " roots: " + v.str();
  }

  if (as_json) {
    std::cout << out.dump() << "\n";
  } else {
    std::cout << line << "\n";
    if (have_sign) {
      std::cout << "reciprocity: " << reciprocity << "\n";
      std::cout << "f(1) = " << sign["value_at_one"].get<std::string>()
                << ", f(-1) = " << sign["value_at_minus_one"].get<std::string>()
                << ", strictly positive: " << (sign["strictly_positive"].get<bool>() ? "yes" : "no")
                << "\n";
    }
    if (!abs_line.empty()) std::cout << abs_line << "\n";
  }
  return kExitOk;
}

int cmd_vaughan(const std::vector<std::uint64_t>& xs, bool verify_oracle, std::uint64_t oracle_cap,
                bool as_json) {
  json points = json::array();
  bool all_ok = true;
  for (std::uint64_t x : xs) {
    const VaughanPoint pt = vaughan_construct(x);
    json row{{"x", pt.x},
             {"n", pt.n.value().str()},
             {"omega", pt.omega},
             {"best_root", root_str(pt.best_root)},
             {"bound", pt.bound},
             {"bound_minus_log_n", pt.bound_minus_log_n}};
    if (verify_oracle) {
      const BigInt phi_n = euler_phi(pt.n);
      if (phi_n <= BigInt(oracle_cap)) {
        const CycloElement value = eval_phi_exact(pt.n, pt.best_root);
        const double oracle_log = log(abs(to_complex_ext(value))).convert_to<double>();
        row["oracle_log"] = oracle_log;
        const bool ok = std::abs(oracle_log - pt.bound) <= 1e-6 * (1.0 + std::abs(pt.bound));
        row["oracle_matches"] = ok;
        all_ok = all_ok && ok;
      } else {
        row["oracle_log"] = nullptr;  // skipped: phi(n) beyond the coefficient cap
      }
    }
    points.push_back(std::move(row));
  }
  if (as_json) {
    std::cout << json{{"command", "vaughan"}, {"points", points}}.dump() << "\n";
  } else {
    std::cout << "x n omega best_root bound bound-log_n\n";
    for (const auto& row : points) {
      char nums[64];
      std::snprintf(nums, sizeof(nums), "%.6f %.6f", row["bound"].get<double>(),
                    row["bound_minus_log_n"].get<double>());
      std::cout << row["x"] << " " << row["n"].get<std::string>() << " " << row["omega"] << " "
                << row["best_root"].get<std::string>() << " " << nums;
      if (row.contains("oracle_log") && !row["oracle_log"].is_null()) {
        std::snprintf(nums, sizeof(nums), "%.6f", row["oracle_log"].get<double>());
        std::cout << " oracle_log=" << nums
                  << (row["oracle_matches"].get<bool>() ? " (MATCH)" : " (MISMATCH)");
      }
      std::cout << "\n";
    }
  }
  return all_ok ? kExitOk : kExitMismatch;
}

int cmd_verify(std::uint64_t max_n, const std::string& orders_text, unsigned jobs, bool as_json) {
  std::vector<std::uint64_t> orders;
  std::size_t start = 0;
  while (start <= orders_text.size()) {
    std::size_t comma = orders_text.find(',', start);
    if (comma == std::string::npos) comma = orders_text.size();
    const std::string item = orders_text.substr(start, comma - start);
    if (!item.empty()) orders.push_back(std::stoull(item));
    start = comma + 1;
    if (comma == orders_text.size()) break;
  }
  if (orders.empty()) throw std::invalid_argument("verify: no orders given");

  const VerifyReport report = verify_closed_forms(max_n, orders, jobs);
  std::cerr << "verify: " << report.values_checked << " values in " << report.elapsed_seconds
            << "s\n";
  if (as_json) {
    json out{{"command", "verify"},
             {"max_n", report.max_n},
             {"orders", report.orders},
             {"values_checked", report.values_checked},
             {"failures", json::array()}};
    for (const auto& f : report.failures)
      out["failures"].push_back({{"n", f.n},
                                 {"order", f.order},
                                 {"exponent", f.exponent},
                                 {"closed", f.closed_text},
                                 {"oracle", f.oracle_text}});
    std::cout << out.dump() << "\n";
  } else {
    if (report.ok()) {
      std::cout << "PASS: " << report.values_checked << " closed-form values match the oracle (n <= "
                << report.max_n << ")\n";
    } else {
      const auto& f = report.failures.front();
      std::cout << "FAIL: " << report.failures.size() << " mismatches; first at n = " << f.n
                << ", root " << f.order << "/" << f.exponent << ": closed = " << f.closed_text
                << ", oracle = " << f.oracle_text << "\n";
    }
  }
  return report.ok() ? kExitOk : kExitMismatch;
}

int cmd_pnt(std::uint64_t x, bool as_json) {
  const double sum = chebyshev_phi1_sum(x);
  const double ratio = sum / static_cast<double>(x);
  if (as_json) {
    std::cout << json{{"command", "pnt"}, {"x", x}, {"sum", sum}, {"ratio", ratio}}.dump() << "\n";
  } else {
    char buf[128];
    std::snprintf(buf, sizeof(buf), "sum = %.6f\nratio to x = %.6f", sum, ratio);
    std::cout << buf << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact cyclotomic polynomial values, derivatives and resultants at roots of unity"};
  app.require_subcommand(1);
  bool no_memo = false;
  app.add_flag("--no-memo", no_memo, "disable the cyclotomic coefficient cache");

  // coeffs
  auto* coeffs = app.add_subcommand("coeffs", "print Phi_n as ascending coefficients");
  std::uint64_t coeffs_n = 1;
  bool coeffs_json = false;
  coeffs->add_option("n", coeffs_n, "index n")->required();
  coeffs->add_flag("--json", coeffs_json, "JSON output");

  // eval
  auto* eval = app.add_subcommand("eval", "evaluate Phi_n at a root of unity");
  std::uint64_t eval_n = 1;
  std::string eval_root = "1/0";
  bool eval_float = false, eval_closed = false, eval_exact_flag = false, eval_json = false;
  eval->add_option("n", eval_n, "index n")->required();
  eval->add_option("--root", eval_root, "root of unity, order/exponent")->required();
  eval->add_flag("--exact", eval_exact_flag, "exact output (default)");
  eval->add_flag("--float", eval_float, "floating-point output");
  eval->add_flag("--closed-form", eval_closed, "closed-form table value with oracle cross-check");
  eval->add_flag("--json", eval_json, "JSON output");

  // logderiv
  auto* logd = app.add_subcommand("logderiv", "Phi_n'/Phi_n at a root of unity");
  std::uint64_t logd_n = 1;
  std::string logd_root = "1/0";
  bool logd_json = false;
  logd->add_option("n", logd_n, "index n")->required();
  logd->add_option("--root", logd_root, "root of unity, order/exponent")->required();
  logd->add_flag("--json", logd_json, "JSON output");

  // resultant
  auto* res = app.add_subcommand("resultant", "resultant of Phi_n and Phi_m");
  std::uint64_t res_n = 1, res_m = 1;
  bool res_brute = false, res_json = false;
  res->add_option("n", res_n, "first index")->required();
  res->add_option("m", res_m, "second index")->required();
  res->add_flag("--brute", res_brute, "cross-check with the exact field product");
  res->add_flag("--json", res_json, "JSON output");

  // kronecker
  auto* kron = app.add_subcommand("kronecker", "factor a monic polynomial into cyclotomics");
  std::string kron_coeffs;
  std::int64_t kron_abs_at = -1;
  bool kron_json = false;
  kron->add_option("coefficients", kron_coeffs, "ascending comma-separated coefficients")->required();
  kron->add_option("--abs-at", kron_abs_at, "report |f| at primitive roots of this order (1,2,3,4,6)");
  kron->add_flag("--json", kron_json, "JSON output");

  // vaughan
  auto* vau = app.add_subcommand("vaughan", "height lower-bound construction from fifth roots");
  std::vector<std::uint64_t> vau_x;
  bool vau_verify = false, vau_json = false;
  std::uint64_t vau_cap = 200000;
  vau->add_option("--x", vau_x, "prime cutoff(s)")->required()->delimiter(',');
  vau->add_flag("--verify-oracle", vau_verify, "cross-check against the exact field value");
  vau->add_option("--oracle-cap", vau_cap, "skip the oracle when phi(n) exceeds this");
  vau->add_flag("--json", vau_json, "JSON output");

  // verify
  auto* ver = app.add_subcommand("verify", "closed-form vs oracle sweep");
  std::uint64_t ver_max_n = 2000;
  std::string ver_orders = "1,2,3,4,5,6";
  unsigned ver_jobs = 1;
  bool ver_json = false;
  ver->add_option("--max-n", ver_max_n, "largest n to check");
  ver->add_option("--orders", ver_orders, "comma-separated root orders (subset of 1..6)");
  ver->add_option("--jobs", ver_jobs, "worker threads");
  ver->add_flag("--json", ver_json, "JSON output");

  // pnt
  auto* pnt = app.add_subcommand("pnt", "sum of log Phi_n(1) for 2 < n <= x");
  std::uint64_t pnt_x = 3;
  bool pnt_json = false;
  pnt->add_option("--x", pnt_x, "upper limit")->required();
  pnt->add_flag("--json", pnt_json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? kExitOk : kExitUsage;
  }

  try {
    apply_cache_controls(no_memo);
    if (coeffs->parsed()) return cmd_coeffs(coeffs_n, coeffs_json);
    if (eval->parsed()) return cmd_eval(eval_n, eval_root, eval_float, eval_closed, eval_json);
    if (logd->parsed()) return cmd_logderiv(logd_n, logd_root, logd_json);
    if (res->parsed()) return cmd_resultant(res_n, res_m, res_brute, res_json);
    if (kron->parsed()) return cmd_kronecker(kron_coeffs, kron_abs_at, kron_json);
    if (vau->parsed()) return cmd_vaughan(vau_x, vau_verify, vau_cap, vau_json);
    if (ver->parsed()) return cmd_verify(ver_max_n, ver_orders, ver_jobs, ver_json);
    if (pnt->parsed()) return cmd_pnt(pnt_x, pnt_json);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
