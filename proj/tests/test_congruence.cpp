#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "core/congruence.hpp"
#include "core/localization.hpp"

using namespace idem;

namespace {
std::vector<std::pair<int, int>> P(std::initializer_list<std::pair<int, int>> l) {
  return l;
}
}  // namespace

TEST_CASE("closure of (1,m) on chain3 merges the top pair only") {
  Semiring r = fixtures::chain3();
  auto p = congruence_closure(r, P({{2, 1}}));
  CHECK(p.k == 2);
  CHECK(p.same(1, 2));
  CHECK_FALSE(p.same(0, 1));
}

TEST_CASE("empty generating set gives the identity congruence") {
  for (const Semiring& r : fixtures::corpus()) {
    auto p = congruence_closure(r, {});
    CHECK(p.is_identity());
  }
}

TEST_CASE("merging 0 with 1 on f1 gives the total congruence") {
  auto p = congruence_closure(fixtures::f1(), P({{0, 1}}));
  CHECK(p.is_total());
}

TEST_CASE("quotient of chain3 by (1,m) is the two-element semiring") {
  Semiring r = fixtures::chain3();
  auto q = make_quotient(r, congruence_closure(r, P({{2, 1}})));
  REQUIRE(find_semiring_iso(q.quot, fixtures::f1()).has_value());
}

TEST_CASE("quotient by the identity is the semiring itself") {
  for (const Semiring& r : fixtures::corpus()) {
    auto q = make_quotient(r, congruence_closure(r, {}));
    REQUIRE(find_semiring_iso(q.quot, r).has_value());
  }
}

TEST_CASE("quotient by the total congruence is the zero semiring") {
  Semiring r = fixtures::diamond4();
  auto q = make_quotient(r, congruence_closure(r, P({{0, 3}})));
  CHECK(q.quot.n() == 1);
}

TEST_CASE("inverse image takes sups of fibers") {
  Semiring r = fixtures::chain3();
  auto q = make_quotient(r, congruence_closure(r, P({{2, 1}})));
  CHECK(inverse_image(q, q.pi(2)) == 2);  // sup{0,m,1} = 1
  CHECK(inverse_image(q, q.pi(0)) == 0);  // sup{0} = 0
  auto idq = make_quotient(r, congruence_closure(r, {}));
  for (int b = 0; b < r.n(); ++b) CHECK(inverse_image(idq, idq.pi(b)) == b);
}

TEST_CASE("saturation is idempotent and matches the examples") {
  Semiring r = fixtures::chain3();
  auto q = make_quotient(r, congruence_closure(r, P({{2, 1}})));
  CHECK(saturation(q, 1) == 2);  // class {m,1}, sup = 1
  CHECK(saturation(q, 0) == 0);
  CHECK(saturation(q, saturation(q, 1)) == saturation(q, 1));
  auto idq = make_quotient(r, congruence_closure(r, {}));
  for (int a = 0; a < r.n(); ++a) CHECK(saturation(idq, a) == a);
}

TEST_CASE("saturation identities hold for every congruence on the corpus") {
  for (const Semiring& r : fixtures::corpus()) {
    if (r.n() > guards().cong_carrier) continue;
    for (const Partition& p : all_congruences(r)) {
      auto q = make_quotient(r, p);
      for (int a = 0; a < r.n(); ++a)
        for (int b = 0; b < r.n(); ++b) {
          int sa = saturation(q, a), sb = saturation(q, b);
          CHECK(saturation(q, r.plus(sa, sb)) == saturation(q, r.plus(a, b)));
          CHECK(saturation(q, r.times(sa, sb)) == saturation(q, r.times(a, b)));
        }
    }
  }
}

TEST_CASE("closure is a closure operator on generating sets") {
  Semiring r = fixtures::diamond4();
  auto p1 = congruence_closure(r, P({{1, 3}}));
  // extensive
  CHECK(p1.same(1, 3));
  // monotone
  auto p2 = congruence_closure(r, P({{1, 3}, {1, 2}}));
  CHECK(p1.refines(p2));
  // idempotent: regenerate from all related pairs
  std::vector<std::pair<int, int>> gen;
  for (int a = 0; a < r.n(); ++a)
    for (int b = a + 1; b < r.n(); ++b)
      if (p1.same(a, b)) gen.emplace_back(a, b);
  CHECK(congruence_closure(r, gen) == p1);
}

TEST_CASE("universal property: homs equal on generators factor through the quotient") {
  std::vector<Semiring> corpus = fixtures::corpus();
  for (const Semiring& r : corpus) {
    if (r.n() > 4) continue;
    std::vector<std::pair<int, int>> gens = {{r.one, r.n() > 1 ? 1 : 0}};
    auto q = make_quotient(r, congruence_closure(r, gens));
    for (const Semiring& b : corpus) {
      if (b.n() > 5) continue;
      for (const auto& f : all_homs(r, b)) {
        bool respects = true;
        for (auto [x, y] : gens)
          if (f[x] != f[y]) respects = false;
        if (!respects) continue;
        // the induced map on classes must be a well-defined hom
        std::vector<int> g(q.quot.n());
        for (int c = 0; c < q.quot.n(); ++c) g[c] = f[q.part.rep[c]];
        bool well_defined = true;
        for (int x = 0; x < r.n(); ++x)
          if (g[q.pi(x)] != f[x]) well_defined = false;
        CHECK(well_defined);
        CHECK(check_hom({q.quot, b, g}).ok());
      }
    }
  }
}

TEST_CASE("congruence semiring of f1 is f1") {
  CongruenceSemiring cs = congruence_semiring(fixtures::f1());
  CHECK(cs.carrier.size() == 2);
  REQUIRE(find_semiring_iso(cs.sr, fixtures::f1()).has_value());
  // the product of the total congruence with itself relates (1,0)
  CHECK(cs.sr.times(cs.sr.top(), cs.sr.top()) == cs.sr.top());
}

TEST_CASE("congruence semiring of the zero semiring has one element") {
  CongruenceSemiring cs = congruence_semiring(fixtures::zero_semiring());
  CHECK(cs.carrier.size() == 1);
}

TEST_CASE("congruence semiring of chain3 matches brute-force enumeration") {
  Semiring r = fixtures::chain3();
  CongruenceSemiring cs = congruence_semiring(r);
  // congruences of the 3-chain with min-multiplication: partitions
  // compatible with both operations
  auto all = all_congruences(r);
  CHECK(cs.carrier.size() == all.size());
  CHECK(check_semiring(cs.sr).ok());
  CHECK(cs.sr.idealic());
  // the order on congruences is inclusion
  for (std::size_t i = 0; i < cs.carrier.size(); ++i)
    for (std::size_t j = 0; j < cs.carrier.size(); ++j) {
      bool incl = cs.carrier[i].refines(cs.carrier[j]);
      CHECK(cs.sr.leq(static_cast<int>(i), static_cast<int>(j)) == incl);
    }
}

TEST_CASE("semiorder equal to the order yields the identity congruence") {
  Semiring r = fixtures::chain3();
  std::vector<std::uint8_t> rel(9, 0);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) rel[a * 3 + b] = r.leq(a, b);
  CHECK(congruence_from_semiorder(r, rel).is_identity());
}

TEST_CASE("total semiorder yields the total congruence") {
  Semiring r = fixtures::chain3();
  std::vector<std::uint8_t> rel(9, 1);
  CHECK(congruence_from_semiorder(r, rel).is_total());
}

TEST_CASE("semiorder with m ≺ 1 and 1 ≺ m merges the top classes") {
  Semiring r = fixtures::chain3();
  std::vector<std::uint8_t> rel(9, 0);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) rel[a * 3 + b] = r.leq(a, b);
  rel[2 * 3 + 1] = 1;  // 1 ≺ m
  Partition p = congruence_from_semiorder(r, rel);
  CHECK(p.k == 2);
  CHECK(p.same(1, 2));
}

TEST_CASE("semiorder axiom violations are reported") {
  Semiring r = fixtures::chain3();
  std::vector<std::uint8_t> rel(9, 0);  // misses reflexivity/order pairs
  Report rep = check_idealic_semiorder(r, rel);
  CHECK_FALSE(rep.ok());
  CHECK(rep.violations[0].law == "order-compatibility");
}

TEST_CASE("algebraicity condition holds on all finite congruences") {
  for (const Semiring& r : fixtures::corpus()) {
    if (r.n() > guards().cong_carrier) continue;
    for (const Partition& p : all_congruences(r))
      CHECK(algebraic_congruence_condition(r, p));
  }
}
