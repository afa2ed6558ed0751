#pragma once

#include "core/congruence.hpp"

namespace idem {

// Multiplicative system: contains the unit and is closed under ·.
Report check_mult_system(const Semiring& r, Mask sigma);

// Σ_f = {f^n : n ≥ 0}, the full power orbit.
Mask power_system(const Semiring& r, int f);

// Σ_p = {x : x ≰ p} for a prime p (all elements are compact here).
Mask prime_complement_system(const Semiring& r, int p);

/// Localization along Σ: the quotient by the congruence generated by
/// (1, s) for s ∈ Σ, which forces every member of Σ to become the unit.
struct Localization {
  Mask sigma = 0;
  QuotientHom q;
};

Localization localize(const Semiring& r, Mask sigma);
Localization localize_at_element(const Semiring& r, int f);
Localization localize_at_prime(const Semiring& r, int p);  // validates p

// Divisibility criterion for the localization congruence on an idealic
// semiring: (f,g) related iff every x ≤ f has some s ∈ Σ with s·x ≤ g and
// symmetrically. Independent of congruence_closure.
bool loc_relation_oracle(const Semiring& r, Mask sigma, int f, int g);

// sup{x : s·x ≤ a for some s ∈ Σ}; cross-checked against the quotient
// saturation by the caller's tests.
int sigma_saturation(const Semiring& r, Mask sigma, int a);

// √a = sup{x : x^n ≤ a for some n ≥ 1}.
int radical(const Semiring& r, int a);

/// The four equivalent comparisons of a and b:
///   power_dom   every x ≤ a has a power below b
///   radical_leq √a ≤ √b
///   v_contains  V(a) ⊇ V(b) in the spectrum
///   cong_geq    ⟨(1,a)⟩ ⊇ ⟨(1,b)⟩ as congruences
/// `consistent` asserts all four agree (all elements are compact).
struct VEquiv {
  bool power_dom = false;
  bool radical_leq = false;
  bool v_contains = false;
  bool cong_geq = false;
  bool consistent = false;
};

VEquiv v_equiv_check(const Semiring& r, int a, int b);

// Local: unique maximal element among the non-units (carrier minus top).
bool is_local(const Semiring& r);

// Every maximal element of R ∖ {1} is prime (exhaustive check).
bool maximal_elements_prime(const Semiring& r);

}  // namespace idem
