#include "cyclotomic/cyclofield.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>

namespace cyclo {

namespace {

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
  while (b) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

// Per-modulus data shared by every element of Q(zeta_m).
struct FieldContext {
  std::uint64_t m;
  std::size_t phi;
  std::vector<BigInt> min_poly;          // Phi_m, ascending, monic
  std::vector<std::uint64_t> residues;   // coprime residues in [0, m)
  std::vector<Real> root_cos, root_sin;  // zeta_m^i for i < m
};

const FieldContext& context(std::uint64_t m) {
  static std::shared_mutex mutex;
  static std::unordered_map<std::uint64_t, std::unique_ptr<const FieldContext>> map;
  {
    std::shared_lock lock(mutex);
    auto it = map.find(m);
    if (it != map.end()) return *it->second;
  }
  auto ctx = std::make_unique<FieldContext>();
  ctx->m = m;
  ctx->min_poly = cyclotomic(FactoredInt::of(m))->coeffs();
  ctx->phi = ctx->min_poly.size() - 1;
  if (m == 1) {
    ctx->residues = {0};
  } else {
    for (std::uint64_t j = 1; j < m; ++j)
      if (gcd_u64(j, m) == 1) ctx->residues.push_back(j);
  }
  ctx->root_cos.resize(m);
  ctx->root_sin.resize(m);
  const Real two_pi = 2 * real_pi();
  for (std::uint64_t i = 0; i < m; ++i) {
    const Real angle = two_pi * Real(i) / Real(m);
    ctx->root_cos[i] = cos(angle);
    ctx->root_sin[i] = sin(angle);
  }
  std::unique_lock lock(mutex);
  auto [it, inserted] = map.try_emplace(m, std::move(ctx));
  return *it->second;
}

// In-place reduction of a rational coefficient vector modulo Phi_m.
void reduce_mod_min_poly(std::vector<BigRat>& v, const FieldContext& ctx) {
  const std::size_t d = ctx.phi;
  for (std::size_t i = v.size(); i-- > d;) {
    if (v[i] == 0) continue;
    BigRat c = std::move(v[i]);
    v[i] = 0;
    for (std::size_t k = 0; k < d; ++k)
      if (ctx.min_poly[k] != 0) v[i - d + k] -= c * BigRat(ctx.min_poly[k]);
  }
  v.resize(d);
}

// scratch vector long enough to fold exponents mod m before reduction
std::vector<BigRat> folded_zero(const FieldContext& ctx) {
  return std::vector<BigRat>(std::max<std::size_t>(ctx.m, ctx.phi), BigRat(0));
}

using RatVec = std::vector<BigRat>;

void trim(RatVec& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

// r <- r mod d; d must be trimmed and nonzero
void divmod_in_place(RatVec& r, const RatVec& d, RatVec* quot) {
  trim(r);
  if (quot) quot->assign(r.size() >= d.size() ? r.size() - d.size() + 1 : 0, BigRat(0));
  while (r.size() >= d.size()) {
    BigRat q = r.back() / d.back();
    const std::size_t shift = r.size() - d.size();
    if (quot) (*quot)[shift] = q;
    for (std::size_t i = 0; i < d.size(); ++i) r[shift + i] -= q * d[i];
    trim(r);
  }
}

RatVec sub_mul(const RatVec& a, const RatVec& q, const RatVec& b) {
  RatVec out = a;  // a - q*b
  if (!q.empty() && !b.empty()) {
    out.resize(std::max(out.size(), q.size() + b.size() - 1), BigRat(0));
    for (std::size_t i = 0; i < q.size(); ++i) {
      if (q[i] == 0) continue;
      for (std::size_t j = 0; j < b.size(); ++j) out[i + j] -= q[i] * b[j];
    }
  }
  trim(out);
  return out;
}

}  // namespace

RootOfUnity RootOfUnity::make(std::uint64_t m, std::uint64_t j) {
  if (m == 0) throw std::invalid_argument("RootOfUnity: order must be >= 1");
  j %= m;
  if (m == 1) return {1, 0};
  if (gcd_u64(j, m) != 1)
    throw std::invalid_argument("RootOfUnity: exponent not coprime to order");
  return {m, j};
}

RootOfUnity RootOfUnity::zeta_power(std::uint64_t m, std::int64_t k) {
  if (m == 0) throw std::invalid_argument("RootOfUnity: order must be >= 1");
  const std::int64_t mm = static_cast<std::int64_t>(m);
  std::int64_t r = k % mm;
  if (r < 0) r += mm;
  const std::uint64_t e = static_cast<std::uint64_t>(r);
  if (e == 0) return {1, 0};
  const std::uint64_t g = gcd_u64(e, m);
  return {m / g, e / g};
}

CycloElement::CycloElement(std::uint64_t modulus) : modulus_(modulus) {
  if (modulus == 0) throw std::invalid_argument("CycloElement: modulus must be >= 1");
  coords_.assign(context(modulus).phi, BigRat(0));
}

CycloElement::CycloElement(std::uint64_t modulus, std::vector<BigRat> reduced_coords)
    : modulus_(modulus), coords_(std::move(reduced_coords)) {}

CycloElement CycloElement::from_rational(std::uint64_t modulus, BigRat value) {
  CycloElement out(modulus);
  out.coords_[0] = std::move(value);
  return out;
}

CycloElement CycloElement::from_root(const RootOfUnity& r) {
  return zeta_power(r.order, static_cast<std::int64_t>(r.exponent));
}

CycloElement CycloElement::zeta_power(std::uint64_t modulus, std::int64_t k) {
  const FieldContext& ctx = context(modulus);
  const std::int64_t mm = static_cast<std::int64_t>(modulus);
  std::int64_t r = k % mm;
  if (r < 0) r += mm;
  std::vector<BigRat> v = folded_zero(ctx);
  v[static_cast<std::size_t>(r)] = 1;
  reduce_mod_min_poly(v, ctx);
  CycloElement out(modulus);
  out.coords_ = std::move(v);
  return out;
}

bool CycloElement::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const BigRat& c) { return c == 0; });
}

bool CycloElement::is_rational() const {
  for (std::size_t i = 1; i < coords_.size(); ++i)
    if (coords_[i] != 0) return false;
  return true;
}

BigRat CycloElement::rational_value() const {
  if (!is_rational()) throw std::domain_error("CycloElement: value is not rational");
  return coords_[0];
}

bool CycloElement::has_integer_coords() const {
  return std::all_of(coords_.begin(), coords_.end(),
                     [](const BigRat& c) { return denominator(c) == 1; });
}

CycloElement CycloElement::operator+(const CycloElement& o) const {
  if (modulus_ != o.modulus_) throw ModulusMismatchError("CycloElement: mixed moduli in +");
  CycloElement out(modulus_);
  for (std::size_t i = 0; i < coords_.size(); ++i) out.coords_[i] = coords_[i] + o.coords_[i];
  return out;
}

CycloElement CycloElement::operator-(const CycloElement& o) const {
  if (modulus_ != o.modulus_) throw ModulusMismatchError("CycloElement: mixed moduli in -");
  CycloElement out(modulus_);
  for (std::size_t i = 0; i < coords_.size(); ++i) out.coords_[i] = coords_[i] - o.coords_[i];
  return out;
}

CycloElement CycloElement::operator-() const {
  CycloElement out(modulus_);
  for (std::size_t i = 0; i < coords_.size(); ++i) out.coords_[i] = -coords_[i];
  return out;
}

CycloElement CycloElement::operator*(const CycloElement& o) const {
  if (modulus_ != o.modulus_) throw ModulusMismatchError("CycloElement: mixed moduli in *");
  const FieldContext& ctx = context(modulus_);
  std::vector<BigRat> prod(2 * ctx.phi, BigRat(0));
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (coords_[i] == 0) continue;
    for (std::size_t j = 0; j < o.coords_.size(); ++j) {
      if (o.coords_[j] == 0) continue;
      prod[i + j] += coords_[i] * o.coords_[j];
    }
  }
  reduce_mod_min_poly(prod, ctx);
  CycloElement out(modulus_);
  out.coords_ = std::move(prod);
  return out;
}

CycloElement CycloElement::operator*(const BigRat& s) const {
  CycloElement out(modulus_);
  for (std::size_t i = 0; i < coords_.size(); ++i) out.coords_[i] = coords_[i] * s;
  return out;
}

CycloElement CycloElement::inverse() const {
  if (is_zero()) throw DivisionByZeroError("CycloElement: inverse of zero");
  const FieldContext& ctx = context(modulus_);
  // extended Euclid over Q[x] against Phi_m, keeping t with t*a = r (mod Phi_m)
  RatVec r0(ctx.min_poly.size());
  for (std::size_t i = 0; i < ctx.min_poly.size(); ++i) r0[i] = BigRat(ctx.min_poly[i]);
  RatVec r1(coords_);
  trim(r1);
  RatVec t0;
  RatVec t1{BigRat(1)};
  while (r1.size() > 1) {
    RatVec quot;
    RatVec rem = r0;
    divmod_in_place(rem, r1, &quot);
    RatVec t2 = sub_mul(t0, quot, t1);
    r0 = std::move(r1);
    r1 = std::move(rem);
    t0 = std::move(t1);
    t1 = std::move(t2);
    if (r1.empty())
      throw std::logic_error("CycloElement: zero gcd step against an irreducible modulus");
  }
  const BigRat c = r1[0];
  std::vector<BigRat> coords(t1);
  coords.resize(std::max<std::size_t>(coords.size(), ctx.phi), BigRat(0));
  for (auto& x : coords) x /= c;
  reduce_mod_min_poly(coords, ctx);
  CycloElement out(modulus_);
  out.coords_ = std::move(coords);
  return out;
}

CycloElement CycloElement::automorphism(std::uint64_t j) const {
  const std::uint64_t m = modulus_;
  j %= m;
  if (m == 1) return *this;
  if (gcd_u64(j, m) != 1)
    throw std::invalid_argument("automorphism: exponent not coprime to modulus");
  const FieldContext& ctx = context(m);
  std::vector<BigRat> v = folded_zero(ctx);
  std::uint64_t pos = 0;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (coords_[i] != 0) v[pos] += coords_[i];
    pos += j;
    if (pos >= m) pos -= m;
  }
  reduce_mod_min_poly(v, ctx);
  CycloElement out(m);
  out.coords_ = std::move(v);
  return out;
}

CycloElement CycloElement::conjugate() const {
  if (modulus_ <= 2) return *this;
  return automorphism(modulus_ - 1);
}

CycloElement reduce(const IntPolynomial& f, std::uint64_t m) {
  const FieldContext& ctx = context(m);
  std::vector<BigRat> v = folded_zero(ctx);
  const auto& c = f.coeffs();
  std::uint64_t pos = 0;
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k] != 0) v[pos] += BigRat(c[k]);
    ++pos;
    if (pos == m) pos = 0;
  }
  reduce_mod_min_poly(v, ctx);
  return CycloElement(m, std::move(v));
}

CycloElement embed(const CycloElement& a, std::uint64_t big_modulus) {
  if (big_modulus % a.modulus() != 0)
    throw ModulusMismatchError("embed: target order is not a multiple of the source order");
  const std::uint64_t stride = big_modulus / a.modulus();
  const FieldContext& ctx = context(big_modulus);
  std::vector<BigRat> v = folded_zero(ctx);
  for (std::size_t i = 0; i < a.coords().size(); ++i)
    if (a.coords()[i] != 0) v[(i * stride) % big_modulus] += a.coords()[i];
  reduce_mod_min_poly(v, ctx);
  return CycloElement(big_modulus, std::move(v));
}

CycloElement eval_poly_at_root(const IntPolynomial& f, const RootOfUnity& root) {
  const std::uint64_t m = root.order;
  const FieldContext& ctx = context(m);
  std::vector<BigRat> v = folded_zero(ctx);
  const auto& c = f.coeffs();
  std::uint64_t pos = 0;
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k] != 0) v[pos] += BigRat(c[k]);
    pos += root.exponent;
    if (pos >= m) pos -= m;
  }
  reduce_mod_min_poly(v, ctx);
  return CycloElement(m, std::move(v));
}

BigRat norm(const CycloElement& a) {
  const FieldContext& ctx = context(a.modulus());
  CycloElement acc = a;
  for (std::size_t i = 1; i < ctx.residues.size(); ++i) acc = acc * a.automorphism(ctx.residues[i]);
  if (!acc.is_rational())
    throw std::logic_error("norm: Galois product failed to collapse to a rational");
  return acc.rational_value();
}

CycloElement eval_phi_exact(const FactoredInt& n, const RootOfUnity& root) {
  return eval_poly_at_root(*cyclotomic(n), root);
}

CycloElement eval_phi_derivative_exact(const FactoredInt& n, const RootOfUnity& root) {
  return eval_poly_at_root(cyclotomic(n)->derivative(), root);
}

CycloElement logderiv_exact(const FactoredInt& n, const RootOfUnity& root) {
  const PolyPtr phi = cyclotomic(n);
  const CycloElement value = eval_poly_at_root(*phi, root);
  if (value.is_zero())
    throw PoleError("logderiv_exact: Phi_n vanishes at the given root (n equals the order)");
  return eval_poly_at_root(phi->derivative(), root) * value.inverse();
}

Complex to_complex_ext(const CycloElement& a) {
  const FieldContext& ctx = context(a.modulus());
  Real re = 0, im = 0;
  for (std::size_t i = 0; i < a.coords().size(); ++i) {
    if (a.coords()[i] == 0) continue;
    const Real c = to_real(a.coords()[i]);
    re += c * ctx.root_cos[i];
    im += c * ctx.root_sin[i];
  }
  return {re, im};
}

Complex to_complex_ext(const RootOfUnity& r) {
  const FieldContext& ctx = context(r.order);
  return {ctx.root_cos[r.exponent], ctx.root_sin[r.exponent]};
}

std::complex<double> to_complex(const CycloElement& a) { return to_double(to_complex_ext(a)); }

bool is_unit(const CycloElement& a) {
  if (!a.has_integer_coords())
    throw NotAlgebraicIntegerError("is_unit: element has non-integral coordinates");
  const BigRat n = norm(a);
  return n == 1 || n == -1;
}

}  // namespace cyclo
