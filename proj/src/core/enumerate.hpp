#pragma once

#include "core/semiring.hpp"
#include "core/topology.hpp"

namespace idem {

// All finite T0 spaces on n points up to homeomorphism (equivalently all
// unlabeled posets with their down-set topologies). n ≤ 5.
std::vector<Top> enumerate_posets(int n);

// Unlabeled poset counts for n = 0..5: 1, 1, 2, 5, 16, 63.
std::size_t poset_count(int n);

// Naive cross-check: filter all reflexive antisymmetric transitive
// relations and deduplicate. n ≤ 3.
std::size_t poset_count_naive(int n);

// All lattices on n elements up to isomorphism, as Cims.
std::vector<Cim> enumerate_lattices(int n);

// All semirings with carrier n up to isomorphism (any unit position,
// idealic or not). n ≤ 4.
std::vector<Semiring> enumerate_semirings(int n);

}  // namespace idem
