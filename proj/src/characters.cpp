#include "cyclotomic/characters.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <shared_mutex>

namespace cyclo {

namespace {

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
  while (b) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t out = 1 % m;
  base %= m;
  while (exp) {
    if (exp & 1) out = mul_mod(out, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return out;
}

// smallest primitive root modulo an odd prime power p^e
std::uint64_t primitive_root_odd(std::uint64_t p, unsigned e) {
  std::uint64_t pe = 1;
  for (unsigned i = 0; i < e; ++i) pe *= p;
  const std::uint64_t phi_p = p - 1;
  const auto phi_factors = FactoredInt::of(phi_p).factors();
  std::uint64_t g = 0;
  for (std::uint64_t cand = 2; cand < p; ++cand) {
    bool ok = true;
    for (const auto& f : phi_factors)
      if (pow_mod(cand, phi_p / f.prime, p) == 1) {
        ok = false;
        break;
      }
    if (ok) {
      g = cand;
      break;
    }
  }
  if (e == 1) return g;
  // lift: g is primitive mod p^e unless g^{p-1} = 1 (mod p^2), in which case g+p is
  if (pow_mod(g, p - 1, p * p) == 1) g += p;
  return g % pe;
}

// CRT lift: x = r (mod q), x = 1 (mod m/q)
std::uint64_t crt_lift(std::uint64_t r, std::uint64_t q, std::uint64_t m) {
  const std::uint64_t rest = m / q;
  for (std::uint64_t x = r % m;; x += q) {
    if (x % rest == 1 % rest) return x % m;
  }
}

std::unique_ptr<UnitGroup> build_unit_group(std::uint64_t m) {
  auto g = std::make_unique<UnitGroup>();
  g->modulus = m;
  const FactoredInt mf = FactoredInt::of(m);
  for (const auto& [p, e] : mf.factors()) {
    std::uint64_t q = 1;
    for (unsigned i = 0; i < e; ++i) q *= p;
    if (p == 2) {
      if (e == 1) continue;  // (Z/2)* is trivial
      if (e == 2) {
        g->generators.push_back({crt_lift(3, q, m), 2});
      } else {
        g->generators.push_back({crt_lift(q - 1, q, m), 2});  // -1 mod 2^e
        g->generators.push_back({crt_lift(5, q, m), q / 4});
      }
    } else {
      g->generators.push_back({crt_lift(primitive_root_odd(p, e), q, m), q - q / p});
    }
  }
  g->phi = euler_phi(mf).convert_to<std::uint64_t>();
  g->exponent = 1;
  for (const auto& gen : g->generators) g->exponent = std::lcm(g->exponent, gen.order);
  if (m == 1) {
    g->residues = {0};
    g->dlog[0] = {};
    return g;
  }
  for (std::uint64_t j = 1; j < m; ++j)
    if (gcd_u64(j, m) == 1) g->residues.push_back(j);
  if (m == 2) g->residues = {1};
  // enumerate all products of generator powers to fill the dlog table
  const std::size_t k = g->generators.size();
  std::vector<std::uint64_t> tuple(k, 0);
  std::uint64_t residue = 1 % m;
  while (true) {
    g->dlog[residue] = tuple;
    // odometer increment; a wrapped digit has absorbed g_i^order = 1, so the
    // running residue is already correct for the reset digit
    std::size_t i = 0;
    for (; i < k; ++i) {
      tuple[i]++;
      residue = mul_mod(residue, g->generators[i].residue, m);
      if (tuple[i] < g->generators[i].order) break;
      tuple[i] = 0;
    }
    if (i == k) break;
  }
  if (g->dlog.size() != g->phi)
    throw std::logic_error("unit_group: generator decomposition did not enumerate the group");
  return g;
}

}  // namespace

UnitGroupPtr unit_group(std::uint64_t m) {
  if (m == 0) throw std::invalid_argument("unit_group: modulus must be >= 1");
  static std::shared_mutex mutex;
  static std::unordered_map<std::uint64_t, UnitGroupPtr> cache;
  {
    std::shared_lock lock(mutex);
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
  }
  UnitGroupPtr built = build_unit_group(m);
  std::unique_lock lock(mutex);
  auto [it, inserted] = cache.try_emplace(m, built);
  return it->second;
}

DirichletCharacter::DirichletCharacter(UnitGroupPtr group, std::vector<std::uint64_t> exponents)
    : group_(std::move(group)), exponents_(std::move(exponents)) {
  if (exponents_.size() != group_->generators.size())
    throw std::invalid_argument("DirichletCharacter: exponent list does not match generators");
  for (std::size_t i = 0; i < exponents_.size(); ++i)
    if (exponents_[i] >= group_->generators[i].order)
      throw std::invalid_argument("DirichletCharacter: exponent out of range");
}

std::optional<std::uint64_t> DirichletCharacter::eval_exponent(std::uint64_t a) const {
  const std::uint64_t m = group_->modulus;
  a %= m;
  auto it = group_->dlog.find(a);
  if (it == group_->dlog.end()) return std::nullopt;
  const std::uint64_t L = group_->exponent;
  std::uint64_t t = 0;
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    const std::uint64_t oi = group_->generators[i].order;
    t = (t + (L / oi) * ((exponents_[i] * it->second[i]) % oi)) % L;
  }
  return t;
}

std::optional<RootOfUnity> DirichletCharacter::eval(std::uint64_t a) const {
  auto t = eval_exponent(a);
  if (!t) return std::nullopt;
  return RootOfUnity::zeta_power(group_->exponent, static_cast<std::int64_t>(*t));
}

bool DirichletCharacter::is_principal() const {
  return std::all_of(exponents_.begin(), exponents_.end(), [](std::uint64_t e) { return e == 0; });
}

bool DirichletCharacter::is_real() const {
  for (std::size_t i = 0; i < exponents_.size(); ++i)
    if ((2 * exponents_[i]) % group_->generators[i].order != 0) return false;
  return true;
}

int DirichletCharacter::parity() const {
  const std::uint64_t m = group_->modulus;
  if (m <= 2) return 1;
  const std::uint64_t t = *eval_exponent(m - 1);
  const std::uint64_t L = group_->exponent;
  if (t == 0) return 1;
  if (2 * t == L) return -1;
  throw std::logic_error("parity: chi(-1) is not +-1");
}

std::vector<DirichletCharacter> all_characters(std::uint64_t m) {
  UnitGroupPtr g = unit_group(m);
  std::vector<DirichletCharacter> out;
  const std::size_t k = g->generators.size();
  std::vector<std::uint64_t> tuple(k, 0);
  while (true) {
    out.emplace_back(g, tuple);
    std::size_t i = 0;
    for (; i < k; ++i) {
      if (++tuple[i] < g->generators[i].order) break;
      tuple[i] = 0;
    }
    if (i == k) break;
  }
  return out;
}

DirichletCharacter quadratic_character(std::uint64_t m) {
  std::optional<DirichletCharacter> found;
  for (auto& chi : all_characters(m)) {
    if (chi.is_principal() || !chi.is_real() || chi.parity() != 1) continue;
    if (found) throw std::domain_error("quadratic_character: not unique for this modulus");
    found = std::move(chi);
  }
  if (!found) throw std::domain_error("quadratic_character: no real non-principal even character");
  return *found;
}

CycloElement jordan_char(unsigned k, const DirichletCharacter& chi, const FactoredInt& n) {
  const std::uint64_t L = chi.group().exponent;
  CycloElement out = CycloElement::from_rational(L, 1);
  for (const auto& [p, e] : n.factors()) {
    const auto tp = chi.eval_exponent(p);
    if (!tp) {
      // chi(p) = 0: only the d with p^{e-1} || d survive; zero unless e = 1
      if (e > 1) return CycloElement(L);
      out = out * BigRat(-1);
      continue;
    }
    BigInt pk = 1;
    for (unsigned i = 0; i < k; ++i) pk *= p;
    // p^{k(e-1)} chi(p^{e-1}) (p^k chi(p) - 1)
    BigInt scale = 1;
    for (unsigned i = 0; i + 1 < e; ++i) scale *= pk;
    const CycloElement chi_pow =
        CycloElement::zeta_power(L, static_cast<std::int64_t>((*tp * (e - 1)) % L));
    const CycloElement bracket =
        CycloElement::zeta_power(L, static_cast<std::int64_t>(*tp)) * BigRat(pk) -
        CycloElement::from_rational(L, 1);
    out = out * chi_pow * bracket * BigRat(scale);
  }
  return out;
}

}  // namespace cyclo
