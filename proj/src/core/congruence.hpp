#pragma once

#include <span>
#include <utility>
#include <vector>

#include "core/semiring.hpp"

namespace idem {

/// Partition of a semiring carrier. Class ids are dense and ordered by
/// their minimum element, which is also the canonical representative.
struct Partition {
  int n = 0;
  int k = 0;
  std::vector<int> cls;  // element → class id
  std::vector<int> rep;  // class id → minimum element

  bool same(int a, int b) const { return cls[a] == cls[b]; }
  bool is_identity() const { return k == n; }
  bool is_total() const { return k == 1; }
  bool refines(const Partition& coarser) const;
  bool operator==(const Partition& o) const { return cls == o.cls; }
};

// Canonicalize an arbitrary element → class-label assignment.
Partition normalize_partition(std::span<const int> raw);

// Least congruence containing the given pairs: union-find seeded with the
// pairs, then a worklist closing (a⊕c, b⊕c) and (a·c, b·c) for every
// related (a,b) and every c. Binary sums suffice on a finite carrier.
Partition congruence_closure(const Semiring& r,
                             std::span<const std::pair<int, int>> pairs);

// Is the partition compatible with ⊕ and ·?
bool is_congruence(const Semiring& r, const Partition& p);

/// Quotient semiring on class representatives together with the projection.
struct QuotientHom {
  Semiring base;
  Partition part;
  Semiring quot;

  int pi(int a) const { return part.cls[a]; }
  SemiringHom as_hom() const { return SemiringHom{base, quot, part.cls}; }
};

QuotientHom make_quotient(const Semiring& r, const Partition& p);

// π⁻¹(b) = sup{x : π(x) ≤ b}.
int inverse_image(const QuotientHom& q, int b);

// ā = π⁻¹π(a); idempotent.
int saturation(const QuotientHom& q, int a);

// All congruences of r (bounded by guards().cong_carrier).
std::vector<Partition> all_congruences(const Semiring& r);

/// The semiring of congruence relations: ⊕ is the congruence generated by
/// the union, · is generated by the pairs (ab ⊕ a'b', ab' ⊕ a'b), the zero
/// is the identity partition and the unit is the total one. The map
/// a ↦ ⟨(a,0)⟩ is carried as a plain map; whether it is a homomorphism is
/// reported per instance, not assumed.
struct CongruenceSemiring {
  Semiring sr;
  std::vector<Partition> carrier;
  std::vector<int> unit_map;  // base element a → index of ⟨(a,0)⟩
  bool unit_map_additive = false;
  bool unit_map_multiplicative = false;
};

CongruenceSemiring congruence_semiring(const Semiring& r);

// rel is an n×n boolean table; axioms: transitivity, sum-compatibility,
// a ≤ b ⟹ a ≺ b, and product-compatibility.
Report check_idealic_semiorder(const Semiring& r, std::span<const std::uint8_t> rel);

// 𝔞 = {(a,b) : a ≺ b and b ≺ a}; post-checks that the quotient order
// matches ≺ on classes.
Partition congruence_from_semiorder(const Semiring& r, std::span<const std::uint8_t> rel);

// Finite instance of the algebraicity criterion for a congruence: whenever
// (a ⊕ sup S, sup S) is related, some finite subfamily of S already
// witnesses it. Trivially true on finite carriers; exposed as a checker.
bool algebraic_congruence_condition(const Semiring& r, const Partition& p);

}  // namespace idem
