#pragma once

#include <optional>
#include <string>
#include <vector>

#include "core/cim.hpp"

namespace idem {

/// Finite topological space given by its closed-set family. The family
/// must contain ∅ and the full set and be closed under pairwise union and
/// intersection (which on a finite space gives arbitrary ones).
struct Top {
  int n = 0;                       // points
  std::vector<std::string> names;  // size n or empty
  std::vector<Mask> closed;        // sorted, unique

  Mask full() const { return full_mask(n); }
  int closed_index(Mask z) const;  // -1 if not closed
  Mask closure(Mask s) const;      // smallest closed superset
  Mask closure_of_point(int x) const { return closure(bit(x)); }
  std::string point_label(int x) const;
  std::string set_label(Mask z) const;
};

Report check_top(const Top& t);

bool is_irreducible(const Top& t, Mask z);  // nonempty, not a union of two proper closed subsets
std::vector<Mask> irreducible_closed(const Top& t);

// Unique generic point of each irreducible closed set, if any.
std::optional<int> generic_point(const Top& t, Mask z);

bool is_t0(const Top& t);
bool is_sober(const Top& t);

/// Soberification: points are the nonempty irreducible closed subsets,
/// closed sets are V(z) = {c : c ⊆ z}; the unit sends x to the closure
/// of {x} and is a homeomorphism exactly when the space is sober.
struct Soberification {
  Top sob;
  std::vector<Mask> sob_points;  // per sob point, the irreducible closed set
  std::vector<int> unit;         // point of t → point of sob
  bool unit_is_homeo = false;
};

Soberification soberify(const Top& t);

/// Space of proper prime filters on the closed-set lattice: F is a
/// non-empty family of closed sets, closed under supersets and pairwise
/// intersection, not containing ∅, and prime (c∪d ∈ F ⟹ c ∈ F or d ∈ F).
/// Closed sets are V(c) = {F : c ∈ F}, indexed by the closed sets of t.
struct PrimeFilterSpace {
  Top space;
  std::vector<Mask> filters;  // per point: mask over t.closed indices
  std::vector<int> unit;      // point of t → point of space
  bool unit_is_homeo = false;
};

PrimeFilterSpace prime_filter_space(const Top& t);

std::optional<std::vector<int>> find_homeomorphism(const Top& a, const Top& b);

Top discrete_space(int n);
Top sierpinski();  // points {0,1}; {1} closed
Top indiscrete_space(int n);

}  // namespace idem
