#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "core/cim.hpp"

namespace idem {

/// Finite semiring over an idempotent additive part: (carrier, ⊕) is a
/// Cim, (carrier, ·, one) is a commutative monoid, bottom is multiplicatively
/// absorbing, and · distributes over ⊕. Idealic means the multiplicative
/// unit is the top of the additive order.
struct Semiring {
  Cim add;
  std::vector<int> mul;  // n*n row-major
  int one = 0;

  int n() const { return add.n; }
  int times(int a, int b) const { return mul[static_cast<std::size_t>(a) * n() + b]; }
  bool leq(int a, int b) const { return add.leq(a, b); }
  int plus(int a, int b) const { return add.add(a, b); }
  int zero() const { return add.bottom; }
  int top() const { return add.top; }

  bool idealic() const { return one == add.top; }
  bool idempotent_mult() const;

  // a^k for k ≥ 1.
  int pow(int a, int k) const;
  // {a^k : k ≥ 0} including one; finite since powers cycle.
  Mask power_orbit(int a) const;

  std::string label(int a) const { return add.label(a); }
};

Report check_semiring(const Semiring& s);
bool check_idealic(const Semiring& s);
bool check_idempotent_mult(const Semiring& s);

/// Semiring homomorphism: preserves ⊕, ·, bottom, top and the
/// multiplicative unit.
struct SemiringHom {
  Semiring src, dst;
  std::vector<int> map;

  int operator()(int a) const { return map[a]; }
};

Report check_hom(const SemiringHom& h);

// All homomorphisms src → dst (exhaustive with pruning; small carriers).
std::vector<std::vector<int>> all_homs(const Semiring& src, const Semiring& dst);

/// Sub-semiring of complemented elements of an idealic semiring with
/// idempotent multiplication; a Boolean algebra.
struct BooleanCore {
  Semiring core;
  std::vector<int> elems;     // core index → base index
  std::vector<int> negation;  // core index → core index
  SemiringHom inclusion;
};

BooleanCore boolean_core(const Semiring& s);

struct Product {
  Semiring prod;
  SemiringHom proj1, proj2;
  int pair(int a, int b) const { return a * n2 + b; }
  int n2 = 0;
};

Product direct_product(const Semiring& a, const Semiring& b);

std::optional<std::vector<int>> find_semiring_iso(const Semiring& a, const Semiring& b);

namespace fixtures {
// The two-element initial idealic semiring {0, 1}.
Semiring f1();
// Three-element chain 0 < m < 1 with multiplication = min.
Semiring chain3();
// Diamond 0 < a,b < 1 with multiplication = inf.
Semiring diamond4();
// Chain 0 < e < 1 with e·e = 0 (idealic, not idempotent-multiplicative).
Semiring neps();
// One element 0 = 1.
Semiring zero_semiring();
// The four named fixtures above plus the zero semiring.
std::vector<Semiring> corpus();
}  // namespace fixtures

}  // namespace idem
