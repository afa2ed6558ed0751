#pragma once

#include <memory>
#include <string_view>

#include "core/algebra.hpp"
#include "core/spectrum.hpp"

namespace idem {

/// A schematizable algebra kind: how to turn one kind of finite algebra
/// (ring / monoid / idealic semiring) into an idealic semiring of
/// "supports" (alpha), how elements map into it (a2), and how to localize
/// the algebra along a multiplicative subset. These three instances drive
/// the spectrum-with-structure-sheaf construction.
class SchemeType {
 public:
  enum class Kind { Ring, Monoid, Semiring };

  virtual ~SchemeType() = default;
  virtual Kind kind() const = 0;
  virtual std::string_view name() const = 0;
  virtual void require_accepts(const Algebra& a) const = 0;

  /// a1: the support semiring (idealic; for the semiring kind also with
  /// idempotent multiplication). labels[u] is the subset of the algebra
  /// carrier realizing element u (an ideal, or a collapse class).
  struct Alpha {
    Semiring a1;
    std::vector<Mask> labels;
    std::vector<int> a2;  // algebra element → a1 element
  };
  virtual Alpha alpha(const Algebra& a) const = 0;

  /// Localization along the multiplicative subset s (mask over the
  /// carrier; must contain the unit and be ·-closed). On finite carriers
  /// the localization map is surjective, so the result is presented as a
  /// quotient with its class map.
  struct Localized {
    Algebra alg;
    std::vector<int> map;
  };
  virtual Localized localize(const Algebra& a, Mask s) const = 0;

  // close a subset under products and adjoin the unit
  Mask mult_closure(const Algebra& a, Mask seed) const;
  virtual int unit_of(const Algebra& a) const = 0;
  virtual int times_of(const Algebra& a, int x, int y) const = 0;

  /// Induced map on support semirings for an algebra hom f: A → B
  /// (image ideal generated by f, or the induced map on collapse classes).
  virtual std::vector<int> alpha1_hom(const Algebra& a, const Alpha& aa,
                                      const Algebra& b, const Alpha& ab,
                                      std::span<const int> f) const = 0;

  static const SchemeType& ring_type();
  static const SchemeType& monoid_type();
  static const SchemeType& semiring_type();
  static const SchemeType& by_name(std::string_view n);
};

/// a1(A_S) ≅ a1(A)_{a2(S)}: the extension map a1(A) → a1(A_S) is
/// surjective with exactly the localization congruence as kernel; the
/// induced bijection is the witness.
struct GammaWitness {
  bool ok = false;
  std::vector<int> iso;  // class of a1(A)_{a2(S)} → element of a1(A_S)
  std::string failure;
};

GammaWitness gamma_check(const SchemeType& t, const Algebra& a, Mask s);

/// Presheaf of algebras of one kind on a finite idealic lattice
/// (the closed-set semiring of a space): one section algebra per lattice
/// element and a restriction hom for every comparable pair.
struct Presheaf {
  const SchemeType* type = nullptr;
  Semiring lat;
  std::vector<Algebra> sections;
  std::vector<std::vector<std::vector<int>>> res;  // res[z][w], nonempty iff w ≤ z

  const std::vector<int>& restriction(int z, int w) const { return res[z][w]; }
};

Report check_presheaf(const Presheaf& p);

// Antichain covers of z: subsets of the down-set of z with join z,
// pairwise incomparable. The empty family covers the lattice bottom.
std::vector<std::vector<int>> antichain_covers(const Semiring& lat, int z);

struct SheafCheck {
  bool ok = true;
  int z = -1;
  std::vector<int> cover;
  std::string reason;
};

// Equalizer condition for every antichain cover, the empty one included
// (sections at the bottom element must be terminal).
SheafCheck sheaf_check(const Presheaf& p);

struct Sheafified {
  Presheaf sheaf;
  std::vector<std::vector<int>> unit;  // per z: P(z) → sheaf(z)
};

// Matching-family construction applied twice.
Sheafified sheafify(const Presheaf& p);

Presheaf constant_presheaf(const SchemeType& t, const Semiring& lat, const Algebra& value);

/// Affine-style scheme: sober space, closed-set semiring, a sheaf of
/// sections over it, the localized-lattice sheaf tau (z ↦ C(X)_z), and
/// the comparison beta from supports of sections into tau.
struct AScheme {
  const SchemeType* type = nullptr;
  Top space;
  ClosedSetSemiring cx;
  Presheaf O;
  std::vector<Localization> tau;               // per z: C(X) localized at z
  std::vector<SchemeType::Alpha> section_alpha;  // alpha of each O(z)
  std::vector<std::vector<int>> beta;          // per z: a1 element → tau class
  // per z: element of the base algebra → its class in O(z) (localization
  // class map composed with the sheafification unit)
  std::vector<std::vector<int>> base_class;

  int top_index() const { return cx.sr.top(); }
  int unit_class(int z, int base_elem) const { return base_class[z][base_elem]; }
};

AScheme spec_scheme(const SchemeType& t, const Algebra& r);
// C(X)_z as the structure sheaf over X itself, with identity comparison.
AScheme tau_scheme(const Top& x);

Report verify_scheme(const AScheme& x);

Algebra global_sections(const AScheme& x);

struct SchemeMorphism {
  std::vector<int> points;               // source point → target point
  std::vector<int> preimage;             // per target closed set index: source index
  std::vector<std::vector<int>> sharp;   // per target z: O_Y(z) → O_X(preimage[z])
};

Report check_scheme_morphism(const AScheme& x, const AScheme& y, const SchemeMorphism& m);

SchemeMorphism compose(const AScheme& x, const AScheme& y, const AScheme& w,
                       const SchemeMorphism& f, const SchemeMorphism& g);

bool is_identity_morphism(const AScheme& x, const SchemeMorphism& m);

// Functorial action: a hom f: B → A induces Spec^(A) → Spec^(B).
SchemeMorphism scheme_of_hom(const SchemeType& t, const Algebra& a, const Algebra& b,
                             std::span<const int> f, const AScheme& sa,
                             const AScheme& sb);

// (ii) of the patching condition at s for one cover; brute force over
// compatible tuples of localized sections.
bool patching_check(const SchemeType& t, const Algebra& r, int s,
                    std::span<const int> cover);

// (i) a2(R) generates a1(R); (ii) for s = 1 over all covers of size ≤ 3.
struct PatchingReport {
  bool generates = false;
  bool weak = false;
  std::string failure;
};

PatchingReport weak_patching_check(const SchemeType& t, const Algebra& r);

struct SchemeAdjunctionReport {
  PatchingReport patching;
  bool eps_iso = false;
  bool eta_iso = false;
  bool eta_valid = false;
  bool triangle_sections = false;
  bool triangle_space = false;
  bool ok = false;
  std::string failure;
};

SchemeAdjunctionReport adjunction_check(const SchemeType& t, const Algebra& r);
SchemeAdjunctionReport adjunction_check_scheme(const AScheme& x);

// Hom-set comparison backing the right-adjointness of tau_scheme:
// morphisms X → tau_scheme(Y) against continuous maps |X| → Y.
bool tau_scheme_right_adjoint_check(const AScheme& x, const Top& y);

// The unit R → Gamma(Spec R) as a table (also the epsilon of the
// adjunction): the top-section localization map composed with the
// sheafification unit.
std::vector<int> scheme_unit_map(const SchemeType& t, const Algebra& r, const AScheme& s);

}  // namespace idem
