#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "core/base.hpp"

namespace idem {

// One violated law together with the witnessing elements.
struct Violation {
  std::string law;
  std::vector<int> witness;
  std::string detail;
};

struct Report {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  std::string summary() const;
};

/// Finite idempotent commutative monoid: a finite join-semilattice with
/// least element `bottom` (the unit of ⊕) and absorbing greatest element
/// `top`. The derived order is a ≤ b ⟺ a⊕b = b, and every subset has a
/// supremum and an infimum.
///
/// Elements are dense indices 0..n-1 with optional display names; all
/// structure is an explicit table, so subsets are bitmasks and equality is
/// exact. A finite carrier stands for the compact part of an ambient
/// algebraic complete monoid: every element of a finite algebra is compact,
/// so arbitrary suprema reduce to finite ones and never need materializing.
struct Cim {
  int n = 0;
  std::vector<int> join;  // n*n row-major: join[a*n+b] = a⊕b
  int bottom = 0;
  int top = 0;
  std::vector<std::string> names;  // size n, or empty for index labels

  int add(int a, int b) const { return join[static_cast<std::size_t>(a) * n + b]; }
  bool leq(int a, int b) const { return add(a, b) == b; }

  // sup(∅) = bottom, inf(∅) = top.
  int sup(Mask s) const;
  int inf(Mask s) const;

  Mask down_set(int a) const;  // {x : x ≤ a}
  Mask up_set(int a) const;    // {x : a ≤ x}

  std::string label(int a) const;
};

// Full law check: table shape, idempotency, commutativity, associativity,
// unit and absorbing laws, and existence of binary infima. Reports the
// first witness per violated law.
Report check_cim(const Cim& a);

// The derived order as an n×n boolean matrix (row a, column b: a ≤ b).
std::vector<std::uint8_t> order_of(const Cim& a);

// Elements x ≠ bottom with x = a⊕b ⟹ x ∈ {a, b}.
std::vector<int> join_irreducibles(const Cim& a);

/// The lattice of ideals of a finite CIM: non-empty subsets F with
/// x,y ∈ F ⟺ x⊕y ∈ F (equivalently: down-closed and join-closed).
/// On a finite carrier every ideal is principal and a ↦ ⟨a⟩ is an
/// isomorphism onto the ideal lattice ordered by inclusion; the witness
/// is returned. Every ideal is finitely generated, hence flagged compact.
struct IdealLattice {
  std::vector<Mask> ideals;            // one mask per ideal
  Cim lattice;                         // ideals under ⟨union⟩-join
  std::vector<int> principal;          // base element a → index of ⟨a⟩
  std::vector<std::uint8_t> compact;   // per ideal; always true here
};

IdealLattice ideal_completion(const Cim& a);

// Brute-force enumeration of all ideals as subsets; used to cross-check
// ideal_completion on small carriers (n ≤ 16).
std::vector<Mask> enumerate_ideals_subsets(const Cim& a);

// Table-level isomorphism search (preserves ⊕, bottom, top).
std::optional<std::vector<int>> find_cim_iso(const Cim& a, const Cim& b);

namespace fixtures {
Cim chain_cim(int k);  // 0 < ... < k-1
Cim diamond_cim();     // 0 < a,b < 1 with a,b incomparable
}  // namespace fixtures

}  // namespace idem
