#pragma once

#include <optional>
#include <span>

#include "core/localization.hpp"
#include "core/topology.hpp"

namespace idem {

// p is prime iff {a : a ≰ p} is a multiplicative monoid (contains the
// unit and is closed under ·). The top element is never prime.
bool is_prime(const Semiring& r, int p);
std::vector<int> primes(const Semiring& r);  // requires idealic

/// Spectrum of an idealic semiring: points are the primes, closed sets are
/// V(a) = {p prime : p ≥ a}. The space is sober (verified).
struct Spectrum {
  std::vector<int> prime_elems;  // point i ↔ prime prime_elems[i]
  Top space;
  std::vector<int> v_of;  // base element → index into space.closed
  Mask v_mask(const Semiring& r, int a) const;
};

Spectrum spec(const Semiring& r);

/// C(X): carrier = closed family of X, ⊕ = ∩, · = ∪, zero = full set,
/// one = ∅. Idealic with idempotent multiplication.
struct ClosedSetSemiring {
  Semiring sr;
  std::vector<Mask> elems;  // semiring element → closed set (same order as X.closed)
  int index_of(Mask z) const;
};

ClosedSetSemiring closed_set_semiring(const Top& t);

// f⁻¹ point map Spec B → Spec A for a hom f: A → B; verifies primality of
// images and continuity.
std::vector<int> spec_map(const SemiringHom& f, const Spectrum& spec_b,
                          const Spectrum& spec_a);

/// a ↦ V(a): R → C(Spec R). An isomorphism exactly when multiplication is
/// idempotent; otherwise the first collapsed pair is reported.
struct DualityWitness {
  bool iso = false;
  std::vector<int> map;  // element of R → element of C(Spec R)
  std::optional<std::pair<int, int>> collapsed;
};

DualityWitness duality_check(const Semiring& r);

/// x ↦ closure{x}: X → Spec C(X). A homeomorphism for sober X.
struct SpaceDualityWitness {
  bool homeo = false;
  std::vector<int> point_map;
};

SpaceDualityWitness duality_check_space(const Top& t);

// Unit/counit composites of the Spec ⊣ C adjunction are identities.
bool spec_c_triangle_semiring(const Semiring& r);
bool spec_c_triangle_space(const Top& t);

// Finite quasi-compactness facts pinning the encoding: every D(a) is
// quasi-compact, the space is quasi-compact, and D(a) ∩ D(b) = D(ab).
bool spec_quasi_compactness_facts(const Semiring& r);

/// Gluing along a cover s = ⊕ s_i: given classes f_i ∈ R_{s_i} that agree
/// pairwise in R_{s_i s_j}, there is a unique class f ∈ R_s restricting to
/// each f_i. Returns the localization R_s and the class.
struct GluePart {
  int s_i;
  int f_class;  // class index in R_{s_i}
};

struct GlueResult {
  Localization rs;
  int f_class;
};

GlueResult glue(const Semiring& r, int s, std::span<const GluePart> parts);

// Class map R_s → R_{s'} for s' ≤ s (the localization congruence grows).
std::vector<int> restriction_map(const Semiring& r, const Localization& rs,
                                 const Localization& rs2);

}  // namespace idem
