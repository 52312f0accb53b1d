#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

#include "cyclotomic/cyclofield.hpp"
#include "cyclotomic/numtheory.hpp"

namespace cyclo {

// (Z/mZ)* as a product of cyclic groups, with a discrete-log table for every
// coprime residue.  Built once per modulus and shared read-only.
struct UnitGroup {
  struct Generator {
    std::uint64_t residue;
    std::uint64_t order;
  };

  std::uint64_t modulus;
  std::vector<Generator> generators;
  std::uint64_t phi;            // group size
  std::uint64_t exponent;       // lcm of generator orders (1 when the group is trivial)
  std::vector<std::uint64_t> residues;  // coprime residues, ascending
  std::unordered_map<std::uint64_t, std::vector<std::uint64_t>> dlog;
};

using UnitGroupPtr = std::shared_ptr<const UnitGroup>;

// CRT + primitive-root construction; 2^k (k >= 3) uses generators {-1, 5}.
UnitGroupPtr unit_group(std::uint64_t m);

// Character of (Z/mZ)*, stored as exponents on the group generators:
// chi(g_i) = e^{2 pi i a_i / o_i}.  Values are exact roots of unity of order
// dividing the group exponent.
class DirichletCharacter {
 public:
  DirichletCharacter(UnitGroupPtr group, std::vector<std::uint64_t> exponents);

  std::uint64_t modulus() const { return group_->modulus; }
  const UnitGroup& group() const { return *group_; }
  const std::vector<std::uint64_t>& exponents() const { return exponents_; }

  // exponent t with chi(a) = zeta_L^t, L the group exponent; nullopt when
  // gcd(a, m) > 1 (the character vanishes there)
  std::optional<std::uint64_t> eval_exponent(std::uint64_t a) const;
  // chi(a) as a reduced root of unity, or nullopt for 0
  std::optional<RootOfUnity> eval(std::uint64_t a) const;

  bool is_principal() const;
  bool is_real() const;
  int parity() const;  // chi(-1)

  friend bool operator==(const DirichletCharacter& x, const DirichletCharacter& y) {
    return x.modulus() == y.modulus() && x.exponents_ == y.exponents_;
  }

 private:
  UnitGroupPtr group_;
  std::vector<std::uint64_t> exponents_;
};

// All phi(m) characters, in mixed-radix order over the generator exponents.
std::vector<DirichletCharacter> all_characters(std::uint64_t m);

// The unique real non-principal character with chi(-1) = 1; throws
// std::domain_error when absent or not unique.
DirichletCharacter quadratic_character(std::uint64_t m);

// Character-twisted Jordan function sum_{d|n} mu(n/d) d^k chi(d), computed by
// its multiplicative product form.  Exact: lives in Q(zeta_L) with L the
// group exponent of the character's modulus.
CycloElement jordan_char(unsigned k, const DirichletCharacter& chi, const FactoredInt& n);

}  // namespace cyclo
