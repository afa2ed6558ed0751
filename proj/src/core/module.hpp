#pragma once

#include <optional>
#include <span>

#include "core/semiring.hpp"

namespace idem {

/// Finite module over a finite semiring: a Cim carrier with a scalar
/// action table satisfying 1·x = x, 0·x = 0, a·0 = 0, both distribution
/// laws and (ab)x = a(bx).
struct Module {
  Semiring ring;
  Cim carrier;
  std::vector<int> action;  // |R| × |M| row-major: action[a*|M|+x]

  int m() const { return carrier.n; }
  int act(int a, int x) const { return action[static_cast<std::size_t>(a) * m() + x]; }
  int plus(int x, int y) const { return carrier.add(x, y); }
  bool leq(int x, int y) const { return carrier.leq(x, y); }
  int zero() const { return carrier.bottom; }
};

Report check_module(const Module& m);

// Module maps preserve ⊕, 0 and the scalar action. They are not required
// to preserve the top element: the tensor unit x ↦ [y ↦ x⊗y] fails that,
// so the adjunction forces the weaker kind. The top-preserving variant
// stays available for comparison.
enum class MapKind { SupPreserving, TopPreserving };

bool is_module_map(const Module& m, const Module& n, std::span<const int> f,
                   MapKind kind = MapKind::SupPreserving);

std::vector<std::vector<int>> module_maps(const Module& m, const Module& n,
                                          MapKind kind = MapKind::SupPreserving);

/// Hom(M, N) with pointwise ⊕ and scalar action, validated as a module.
struct HomModule {
  Module mod;
  std::vector<std::vector<int>> maps;  // carrier element → underlying map
};

HomModule hom_module(const Module& m, const Module& n,
                     MapKind kind = MapKind::SupPreserving);

/// M ⊗ N as the lattice of tensor filters on the |M|×|N| grid: subsets
/// closed under (rx,y) ∈ F ⟺ (x,ry) ∈ F and, in each coordinate, under
/// finite sums in both directions (so each slice is an ideal); the empty
/// sum forces {0}×N and M×{0} into every filter, making the least filter
/// the zero. The join is the filter generated by the union.
struct Tensor {
  Module mod;                 // carrier = filters over M×N
  std::vector<Mask> filters;  // filter index → mask over the grid x*|N|+y
  std::vector<int> pure;      // grid cell x*|N|+y → filter index of x⊗y
  int pure_of(int x, int y, int ncols) const { return pure[x * ncols + y]; }
};

Tensor tensor(const Module& m, const Module& n);

// Closure of a grid subset under the three filter rules.
Mask tensor_filter_closure(const Module& m, const Module& n, Mask seed);

// All-subsets enumeration of filters; cross-checks the reachable-join
// construction on grids of at most 12 cells.
std::vector<Mask> enumerate_tensor_filters_brute(const Module& m, const Module& n);

/// Explicit bijection Hom(M⊗N, P) ↔ Hom(M, Hom(N, P)) built from the unit
/// x ↦ [y ↦ x⊗y] and counit f⊗y ↦ f(y), verified mutually inverse.
struct AdjunctionWitness {
  bool ok = false;
  std::size_t homs_tensor = 0;
  std::size_t homs_curried = 0;
  std::string failure;
};

AdjunctionWitness tensor_hom_adjunction_check(const Module& m, const Module& n,
                                              const Module& p);

Module free_module(const Semiring& r, int k);

/// Base change along h: R → A. Carrier is A ⊗_R M for A viewed as an
/// R-module through h, with the A-action a·(b⊗x) = (ab)⊗x; the unit is
/// x ↦ 1⊗x.
struct ScalarExtension {
  Tensor tens;      // over R
  Module extended;  // same carrier, module over A
  std::vector<int> unit;  // x ∈ M → element of the extended module
};

ScalarExtension scalar_extension(const SemiringHom& h, const Module& m);

struct Coproduct {
  Module mod;                             // product carrier
  std::vector<std::vector<int>> inject;   // per factor: M_i → carrier
};

Coproduct module_coproduct(const Semiring& r, std::span<const Module> factors);

std::optional<std::vector<int>> find_module_iso(const Module& a, const Module& b);

// A Cim as a module over the two-element semiring.
Module f1_module(const Cim& c);
// A semiring as a module over itself.
Module self_module(const Semiring& r);

}  // namespace idem
