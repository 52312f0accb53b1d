#include "cyclotomic/polyring.hpp"

#include <algorithm>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>

namespace cyclo {

namespace {
const BigInt kZero = 0;
}

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
  normalize();
}

void IntPolynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial IntPolynomial::one() { return IntPolynomial({BigInt(1)}); }

IntPolynomial IntPolynomial::monomial(BigInt coeff, std::size_t power) {
  std::vector<BigInt> c(power + 1, BigInt(0));
  c[power] = std::move(coeff);
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::power_minus_one(std::uint64_t n) {
  std::vector<BigInt> c(n + 1, BigInt(0));
  c[0] = -1;
  c[n] = 1;
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::all_ones(std::size_t len) {
  return IntPolynomial(std::vector<BigInt>(len, BigInt(1)));
}

const BigInt& IntPolynomial::coeff(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : kZero;
}

const BigInt& IntPolynomial::leading() const {
  if (coeffs_.empty()) return kZero;
  return coeffs_.back();
}

bool IntPolynomial::is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

IntPolynomial IntPolynomial::operator+(const IntPolynomial& o) const {
  std::vector<BigInt> c(std::max(coeffs_.size(), o.coeffs_.size()), BigInt(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] = coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) c[i] += o.coeffs_[i];
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& o) const {
  std::vector<BigInt> c(std::max(coeffs_.size(), o.coeffs_.size()), BigInt(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] = coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) c[i] -= o.coeffs_[i];
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<BigInt> c(coeffs_.size() + o.coeffs_.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) c[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<BigInt> c(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) c[i - 1] = coeffs_[i] * BigInt(i);
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::substitute_power(std::uint64_t p) const {
  if (p == 0) throw std::invalid_argument("substitute_power: p must be >= 1");
  if (is_zero() || p == 1) return *this;
  std::vector<BigInt> c((coeffs_.size() - 1) * p + 1, BigInt(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i * p] = coeffs_[i];
  return IntPolynomial(std::move(c));
}

BigInt IntPolynomial::eval(const BigInt& k) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * k + *it;
  return acc;
}

BigInt IntPolynomial::height() const {
  BigInt h = 0;
  for (const auto& c : coeffs_) {
    BigInt a = abs(c);
    if (a > h) h = a;
  }
  return h;
}

std::optional<IntPolynomial> try_exact_div(const IntPolynomial& num, const IntPolynomial& den) {
  if (den.is_zero()) throw ExactDivisionError("exact_div: division by zero polynomial");
  if (num.is_zero()) return IntPolynomial{};
  if (num.degree() < den.degree()) return std::nullopt;
  std::vector<BigInt> rem(num.coeffs());
  const auto& d = den.coeffs();
  const std::size_t dd = d.size() - 1;
  const BigInt& lead = d.back();
  std::vector<BigInt> quot(rem.size() - dd, BigInt(0));
  for (std::size_t i = rem.size(); i-- > dd;) {
    if (rem[i] == 0) continue;
    if (rem[i] % lead != 0) return std::nullopt;
    BigInt q = rem[i] / lead;
    quot[i - dd] = q;
    for (std::size_t j = 0; j <= dd; ++j) rem[i - dd + j] -= q * d[j];
  }
  for (const auto& r : rem)
    if (r != 0) return std::nullopt;
  return IntPolynomial(std::move(quot));
}

IntPolynomial exact_div(const IntPolynomial& num, const IntPolynomial& den) {
  auto q = try_exact_div(num, den);
  if (!q) throw ExactDivisionError("exact_div: divisor does not divide exactly");
  return std::move(*q);
}

Reciprocity reciprocity_type(const IntPolynomial& f) {
  if (f.is_zero()) throw std::invalid_argument("reciprocity_type: zero polynomial");
  const auto& c = f.coeffs();
  const std::size_t n = c.size();
  bool pal = true, anti = true;
  for (std::size_t i = 0; i < n; ++i) {
    if (c[i] != c[n - 1 - i]) pal = false;
    if (c[i] != -c[n - 1 - i]) anti = false;
  }
  if (pal) return Reciprocity::self_reciprocal;
  if (anti) return Reciprocity::anti_self_reciprocal;
  return Reciprocity::neither;
}

namespace {

struct CycloCache {
  std::shared_mutex mutex;
  std::unordered_map<std::uint64_t, PolyPtr> map;
  std::size_t capacity = static_cast<std::size_t>(-1);

  PolyPtr lookup(std::uint64_t n) {
    std::shared_lock lock(mutex);
    auto it = map.find(n);
    return it == map.end() ? nullptr : it->second;
  }

  PolyPtr insert(std::uint64_t n, PolyPtr poly) {
    std::unique_lock lock(mutex);
    auto it = map.find(n);
    if (it != map.end()) return it->second;  // lost the race; keep the first
    if (map.size() < capacity) map.emplace(n, poly);
    return poly;
  }
};

CycloCache& cache() {
  static CycloCache c;
  return c;
}

// Phi_rad(n) by incorporating primes in ascending order, then x -> x^{n/rad}.
// The largest prime enters last, which keeps every exact division small.
IntPolynomial compute_cyclotomic(const FactoredInt& n) {
  const auto& fs = n.factors();
  if (fs.empty()) return IntPolynomial({BigInt(-1), BigInt(1)});  // x - 1
  std::uint64_t rad = 1;
  for (const auto& f : fs) rad *= f.prime;
  IntPolynomial poly = IntPolynomial::all_ones(fs.front().prime);
  std::uint64_t built = fs.front().prime;
  for (std::size_t i = 1; i < fs.size(); ++i) {
    const std::uint64_t p = fs[i].prime;
    // try the cache for the partial product before dividing
    built *= p;
    if (PolyPtr hit = cache().lookup(built)) {
      poly = *hit;
      continue;
    }
    poly = exact_div(poly.substitute_power(p), poly);
    cache().insert(built, std::make_shared<const IntPolynomial>(poly));
  }
  const std::uint64_t q = n.value_u64() / rad;
  if (q > 1) poly = poly.substitute_power(q);
  return poly;
}

}  // namespace

PolyPtr cyclotomic(const FactoredInt& n) {
  const std::uint64_t key = n.value_u64();
  if (PolyPtr hit = cache().lookup(key)) return hit;
  auto poly = std::make_shared<const IntPolynomial>(compute_cyclotomic(n));
  return cache().insert(key, std::move(poly));
}

void set_cyclotomic_cache_capacity(std::size_t max_entries) {
  std::unique_lock lock(cache().mutex);
  cache().capacity = max_entries;
  if (cache().map.size() > max_entries) cache().map.clear();
}

void clear_cyclotomic_cache() {
  std::unique_lock lock(cache().mutex);
  cache().map.clear();
}

std::size_t cyclotomic_cache_size() {
  std::shared_lock lock(cache().mutex);
  return cache().map.size();
}

}  // namespace cyclo
