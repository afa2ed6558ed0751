#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "core/cim.hpp"

using namespace idem;

TEST_CASE("two-element lattice passes validation") {
  Cim c = fixtures::chain_cim(2);
  CHECK(check_cim(c).ok());
  CHECK(c.leq(0, 1));
  CHECK_FALSE(c.leq(1, 0));
}

TEST_CASE("three-chain passes and orders 0 < m < 1") {
  Cim c = fixtures::chain_cim(3);
  CHECK(check_cim(c).ok());
  auto ord = order_of(c);
  CHECK(ord[0 * 3 + 1]);
  CHECK(ord[1 * 3 + 2]);
  CHECK_FALSE(ord[2 * 3 + 1]);
}

TEST_CASE("broken idempotency is reported with a witness") {
  Cim c = fixtures::chain_cim(2);
  c.join[0] = 1;  // 0⊕0 = 1
  Report r = check_cim(c);
  REQUIRE_FALSE(r.ok());
  CHECK(r.violations[0].law == "idempotency");
  CHECK(r.violations[0].witness == std::vector<int>{0});
}

TEST_CASE("malformed table dimensions give a format error") {
  Cim c;
  c.n = 2;
  c.join = {0, 1, 1};
  Report r = check_cim(c);
  REQUIRE_FALSE(r.ok());
  CHECK(r.violations[0].law == "format");
}

TEST_CASE("diamond: a and b are incomparable") {
  Cim c = fixtures::diamond_cim();
  CHECK(check_cim(c).ok());
  CHECK_FALSE(c.leq(1, 2));
  CHECK_FALSE(c.leq(2, 1));
}

TEST_CASE("sup and inf of subsets") {
  Cim b4 = fixtures::diamond_cim();
  CHECK(b4.sup(0) == b4.bottom);        // sup ∅ = 0
  CHECK(b4.inf(0) == b4.top);           // inf ∅ = 1
  CHECK(b4.sup(bit(1) | bit(2)) == 3);  // a ⊔ b = 1
  CHECK(b4.inf(bit(1) | bit(2)) == 0);  // a ⊓ b = 0
  Cim c3 = fixtures::chain_cim(3);
  CHECK(c3.inf(bit(1) | bit(2)) == 1);  // inf{m,1} = m
}

TEST_CASE("join irreducibles") {
  CHECK(join_irreducibles(fixtures::chain_cim(3)) == std::vector<int>{1, 2});
  CHECK(join_irreducibles(fixtures::diamond_cim()) == std::vector<int>{1, 2});
  CHECK(join_irreducibles(fixtures::chain_cim(2)) == std::vector<int>{1});
}

TEST_CASE("ideal completion: all ideals are principal and a ↦ <a> is an iso") {
  for (int k = 1; k <= 4; ++k) {
    Cim c = fixtures::chain_cim(k);
    IdealLattice il = ideal_completion(c);
    CHECK(static_cast<int>(il.ideals.size()) == k);
    auto iso = find_cim_iso(c, il.lattice);
    REQUIRE(iso.has_value());
  }
  IdealLattice il = ideal_completion(fixtures::diamond_cim());
  CHECK(il.ideals.size() == 4);
  for (auto cp : il.compact) CHECK(cp == 1);
}

TEST_CASE("ideal completion matches the brute-force subset enumeration") {
  for (Cim c : {fixtures::chain_cim(3), fixtures::diamond_cim(), fixtures::chain_cim(7)}) {
    IdealLattice il = ideal_completion(c);
    auto brute = enumerate_ideals_subsets(c);
    std::sort(il.ideals.begin(), il.ideals.end());
    std::sort(brute.begin(), brute.end());
    CHECK(il.ideals == brute);
  }
}

TEST_CASE("every element of a finite CIM is compact") {
  // coverings are subsets S with a ≤ sup S; S itself is the finite subcover
  for (Cim c : {fixtures::chain_cim(4), fixtures::diamond_cim()}) {
    for (int a = 0; a < c.n; ++a)
      for (Mask s = 0; s <= full_mask(c.n); ++s) {
        if (!c.leq(a, c.sup(s))) continue;
        bool has_finite_subcover = false;
        for (Mask t = s;; t = (t - 1) & s) {
          if (c.leq(a, c.sup(t))) {
            has_finite_subcover = true;
            break;
          }
          if (t == 0) break;
        }
        CHECK(has_finite_subcover);
      }
  }
}

TEST_CASE("lattice property: pairwise sup/inf satisfy absorption") {
  for (Cim c : {fixtures::chain_cim(4), fixtures::diamond_cim()}) {
    for (int x = 0; x < c.n; ++x)
      for (int y = 0; y < c.n; ++y) {
        int m = c.inf(bit(x) | bit(y));
        CHECK(c.add(x, m) == x);                       // x ⊔ (x ⊓ y) = x
        CHECK(c.inf(bit(x) | bit(c.add(x, y))) == x);  // x ⊓ (x ⊔ y) = x
      }
  }
}
