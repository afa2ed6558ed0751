#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "core/semiring.hpp"

using namespace idem;

TEST_CASE("fixture corpus passes validation") {
  for (const Semiring& s : fixtures::corpus()) CHECK(check_semiring(s).ok());
}

TEST_CASE("chain3 with min multiplication is idealic and idempotent") {
  Semiring s = fixtures::chain3();
  CHECK(check_semiring(s).ok());
  CHECK(check_idealic(s));
  CHECK(check_idempotent_mult(s));
}

TEST_CASE("neps is idealic but not idempotent-multiplicative") {
  Semiring s = fixtures::neps();
  CHECK(check_semiring(s).ok());
  CHECK(check_idealic(s));
  CHECK_FALSE(check_idempotent_mult(s));
  CHECK(s.times(1, 1) == 0);  // e·e = 0
}

TEST_CASE("zero semiring passes and is idealic") {
  Semiring s = fixtures::zero_semiring();
  CHECK(check_semiring(s).ok());
  CHECK(check_idealic(s));
  CHECK(s.one == s.zero());
}

TEST_CASE("distributivity violation is witnessed") {
  Semiring s = fixtures::chain3();
  s.mul[1 * 3 + 1] = 2;  // m·m = 1 breaks x·x ≤ x structure? keep law check honest
  Report r = check_semiring(s);
  // the modified table may fail associativity or distributivity; either way not ok
  CHECK_FALSE(r.ok());
}

TEST_CASE("power orbits cycle and contain the unit") {
  Semiring s = fixtures::neps();
  Mask orbit = s.power_orbit(1);  // e → e² = 0
  CHECK(orbit == (bit(0) | bit(1) | bit(2)));
  CHECK(s.power_orbit(2) == bit(2));
}

TEST_CASE("boolean core of the diamond is everything") {
  BooleanCore bc = boolean_core(fixtures::diamond4());
  CHECK(bc.core.n() == 4);
  // a + ¬a = 1 and a · ¬a = 0, and negation is an involution
  for (int i = 0; i < bc.core.n(); ++i) {
    int nn = bc.negation[i];
    CHECK(bc.core.plus(i, nn) == bc.core.top());
    CHECK(bc.core.times(i, nn) == bc.core.zero());
    CHECK(bc.negation[nn] == i);
  }
}

TEST_CASE("boolean core of chain3 is the two-element semiring") {
  BooleanCore bc = boolean_core(fixtures::chain3());
  CHECK(bc.core.n() == 2);
  REQUIRE(find_semiring_iso(bc.core, fixtures::f1()).has_value());
}

TEST_CASE("boolean core of f1 is f1") {
  BooleanCore bc = boolean_core(fixtures::f1());
  CHECK(bc.core.n() == 2);
}

TEST_CASE("boolean core rejects non-idempotent multiplication") {
  CHECK_THROWS_AS(boolean_core(fixtures::neps()), DomainError);
}

TEST_CASE("f1 × f1 is the diamond with inf multiplication") {
  Product p = direct_product(fixtures::f1(), fixtures::f1());
  REQUIRE(find_semiring_iso(p.prod, fixtures::diamond4()).has_value());
}

TEST_CASE("product with the zero semiring is isomorphic to the factor") {
  for (const Semiring& s : {fixtures::chain3(), fixtures::diamond4()}) {
    Product p = direct_product(s, fixtures::zero_semiring());
    REQUIRE(find_semiring_iso(p.prod, s).has_value());
  }
}

TEST_CASE("f1 × chain3 is a 6-element idealic semiring") {
  Product p = direct_product(fixtures::f1(), fixtures::chain3());
  CHECK(p.prod.n() == 6);
  CHECK(p.prod.idealic());
  CHECK(check_semiring(p.prod).ok());
}

TEST_CASE("hom validation accepts the inclusion f1 → chain3") {
  SemiringHom h{fixtures::f1(), fixtures::chain3(), {0, 2}};
  CHECK(check_hom(h).ok());
}

TEST_CASE("hom validation requires the unit to map to the unit") {
  SemiringHom h{fixtures::f1(), fixtures::chain3(), {0, 1}};
  CHECK_FALSE(check_hom(h).ok());
}

TEST_CASE("all_homs finds exactly the semiring homomorphisms") {
  auto homs = all_homs(fixtures::chain3(), fixtures::chain3());
  for (const auto& m : homs) CHECK(check_hom({fixtures::chain3(), fixtures::chain3(), m}).ok());
  // 0 and 1 are pinned; m may land on any multiplicative idempotent
  CHECK(homs.size() == 3);
}
