#pragma once

#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "core/semiring.hpp"

namespace idem {

/// Finite commutative ring with 1 (addition forms an abelian group).
struct Ring {
  int n = 0;
  std::vector<int> add, mul;  // n*n row-major
  int zero = 0, one = 0;
  std::vector<std::string> names;

  int plus(int a, int b) const { return add[static_cast<std::size_t>(a) * n + b]; }
  int times(int a, int b) const { return mul[static_cast<std::size_t>(a) * n + b]; }
  std::string label(int a) const;
};

Report check_ring(const Ring& r);
Ring zmod(int n);

/// Finite commutative monoid (multiplicative notation).
struct Monoid {
  int n = 0;
  std::vector<int> mul;
  int one = 0;
  std::vector<std::string> names;

  int times(int a, int b) const { return mul[static_cast<std::size_t>(a) * n + b]; }
  std::string label(int a) const;
};

Report check_monoid(const Monoid& m);
Monoid trivial_monoid();
Monoid cyclic_group(int n);
// {1, x, y} with x² = y, xy = y, y² = y.
Monoid truncated_monoid();

/// One algebra of any of the three schematizable kinds.
using Algebra = std::variant<Ring, Monoid, Semiring>;

int algebra_size(const Algebra& a);
Report check_algebra(const Algebra& a);
std::string algebra_label(const Algebra& a, int x);
std::string algebra_brief(const Algebra& a);

bool algebra_is_hom(const Algebra& a, const Algebra& b, std::span<const int> f);
std::optional<std::vector<int>> find_algebra_iso(const Algebra& a, const Algebra& b);

// Terminal algebra of the same kind (one-element ring / monoid / semiring).
Algebra terminal_algebra(const Algebra& like);
bool algebra_is_terminal(const Algebra& a);

// Sub-algebra of a finite product of algebras of one kind, carved out of
// the tuples listed in `tuples` (each a vector of component elements).
// Used for matching families; the subset must be closed under the
// operations and contain the constants.
Algebra product_subalgebra(std::span<const Algebra> factors,
                           const std::vector<std::vector<int>>& tuples);

}  // namespace idem
