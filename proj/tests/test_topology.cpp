#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "core/spectrum.hpp"
#include "core/topology.hpp"

using namespace idem;

TEST_CASE("topology validation") {
  CHECK(check_top(sierpinski()).ok());
  CHECK(check_top(discrete_space(3)).ok());
  CHECK(check_top(indiscrete_space(2)).ok());
  Top bad;
  bad.n = 2;
  bad.closed = {0, bit(0), bit(1)};  // missing the full set, not union-closed
  CHECK_FALSE(check_top(bad).ok());
}

TEST_CASE("spectra of the fixtures") {
  Spectrum s3 = spec(fixtures::chain3());
  CHECK(s3.prime_elems == std::vector<int>{0, 1});
  REQUIRE(find_homeomorphism(s3.space, sierpinski()).has_value());
  CHECK(s3.v_mask(fixtures::chain3(), 1) == bit(1));  // V(m) = {m}

  Spectrum sf = spec(fixtures::f1());
  CHECK(sf.prime_elems == std::vector<int>{0});

  Spectrum sz = spec(fixtures::zero_semiring());
  CHECK(sz.prime_elems.empty());
  CHECK(sz.space.n == 0);

  Spectrum sb = spec(fixtures::diamond4());
  CHECK(sb.prime_elems == std::vector<int>{1, 2});
  REQUIRE(find_homeomorphism(sb.space, discrete_space(2)).has_value());
}

TEST_CASE("spec rejects non-idealic semirings") {
  Semiring s;
  s.add = fixtures::chain_cim(3);
  s.mul = {0, 0, 0, 0, 1, 2, 0, 2, 2};
  s.one = 1;
  REQUIRE(check_semiring(s).ok());
  CHECK_THROWS_AS(spec(s), DomainError);
}

TEST_CASE("closed-set semirings of the tiny spaces") {
  ClosedSetSemiring c = closed_set_semiring(sierpinski());
  CHECK(c.sr.idealic());
  CHECK(c.sr.idempotent_mult());
  REQUIRE(find_semiring_iso(c.sr, fixtures::chain3()).has_value());

  ClosedSetSemiring d = closed_set_semiring(discrete_space(2));
  REQUIRE(find_semiring_iso(d.sr, fixtures::diamond4()).has_value());

  ClosedSetSemiring p = closed_set_semiring(discrete_space(1));
  REQUIRE(find_semiring_iso(p.sr, fixtures::f1()).has_value());
}

TEST_CASE("spec_map on the inclusion f1 → chain3") {
  SemiringHom inc{fixtures::f1(), fixtures::chain3(), {0, 2}};
  Spectrum sa = spec(fixtures::f1());
  Spectrum sb = spec(fixtures::chain3());
  auto m = spec_map(inc, sb, sa);  // Spec C3 → Spec F1
  CHECK(m == std::vector<int>{0, 0});
}

TEST_CASE("spec_map of the identity is the identity") {
  Semiring r = fixtures::diamond4();
  std::vector<int> id(r.n());
  for (int i = 0; i < r.n(); ++i) id[i] = i;
  Spectrum s = spec(r);
  auto m = spec_map({r, r, id}, s, s);
  for (int i = 0; i < s.space.n; ++i) CHECK(m[i] == i);
}

TEST_CASE("spec_map of the quotient chain3 → f1") {
  SemiringHom q{fixtures::chain3(), fixtures::f1(), {0, 1, 1}};
  REQUIRE(check_hom(q).ok());
  Spectrum sa = spec(fixtures::chain3());
  Spectrum sb = spec(fixtures::f1());
  auto m = spec_map(q, sb, sa);
  // the unique point of Spec F1 lands on the prime 0 of chain3
  CHECK(sa.prime_elems[m[0]] == 0);
}

TEST_CASE("duality: idempotent-multiplicative corpus semirings are C(Spec R)") {
  for (const Semiring& r : fixtures::corpus()) {
    if (!r.idealic() || !r.idempotent_mult()) continue;
    DualityWitness w = duality_check(r);
    CHECK(w.iso);
  }
}

TEST_CASE("duality fails on neps with the collapsed pair V(0) = V(e)") {
  DualityWitness w = duality_check(fixtures::neps());
  CHECK_FALSE(w.iso);
  REQUIRE(w.collapsed.has_value());
  CHECK(w.collapsed->first == 0);
  CHECK(w.collapsed->second == 1);
}

TEST_CASE("space duality: sober spaces are homeomorphic to Spec C(X)") {
  for (const Top& t : {sierpinski(), discrete_space(1), discrete_space(2), discrete_space(3)}) {
    SpaceDualityWitness w = duality_check_space(t);
    CHECK(w.homeo);
  }
}

TEST_CASE("triangle identities for Spec ⊣ C") {
  for (const Semiring& r : fixtures::corpus()) {
    if (!r.idealic()) continue;
    CHECK(spec_c_triangle_semiring(r));
  }
  for (const Top& t : {sierpinski(), discrete_space(2), discrete_space(3)})
    CHECK(spec_c_triangle_space(t));
}

TEST_CASE("quasi-compactness facts hold") {
  for (const Semiring& r : fixtures::corpus())
    if (r.idealic()) CHECK(spec_quasi_compactness_facts(r));
}

TEST_CASE("sobriety and soberification") {
  CHECK(is_sober(sierpinski()));
  CHECK(is_sober(discrete_space(3)));
  CHECK_FALSE(is_sober(indiscrete_space(2)));

  Soberification s = soberify(indiscrete_space(2));
  CHECK(s.sob.n == 1);
  CHECK_FALSE(s.unit_is_homeo);

  for (const Top& t : {sierpinski(), discrete_space(2)}) {
    CHECK(is_t0(t));
    Soberification st = soberify(t);
    CHECK(st.unit_is_homeo);
  }

  Top empty;
  empty.n = 0;
  empty.closed = {0};
  REQUIRE(check_top(empty).ok());
  Soberification se = soberify(empty);
  CHECK(se.sob.n == 0);
}

TEST_CASE("prime filter space of a discrete space is the space itself") {
  for (int n = 1; n <= 3; ++n) {
    PrimeFilterSpace pf = prime_filter_space(discrete_space(n));
    CHECK(pf.space.n == n);
    CHECK(pf.unit_is_homeo);
  }
}

TEST_CASE("prime filter space of the Sierpinski space is itself") {
  PrimeFilterSpace pf = prime_filter_space(sierpinski());
  CHECK(pf.space.n == 2);
  CHECK(pf.unit_is_homeo);
}

TEST_CASE("prime filter space of a one-point space") {
  PrimeFilterSpace pf = prime_filter_space(discrete_space(1));
  CHECK(pf.space.n == 1);
}

TEST_CASE("glue on the diamond cover") {
  Semiring b4 = fixtures::diamond4();
  // s = 1 covered by s1 = a, s2 = b; f1 = class(1) in R_a, f2 = class(0) in R_b
  Localization ra = localize_at_element(b4, 1);
  Localization rb = localize_at_element(b4, 2);
  GluePart parts[2] = {{1, ra.q.pi(3)}, {2, rb.q.pi(0)}};
  GlueResult g = glue(b4, 3, parts);
  // the glue is the class of a in R_1 = B4 itself
  CHECK(g.rs.q.part.is_identity());
  CHECK(g.rs.q.part.rep[g.f_class] == 1);
}

TEST_CASE("glue of all-zero sections is zero") {
  Semiring b4 = fixtures::diamond4();
  Localization ra = localize_at_element(b4, 1);
  Localization rb = localize_at_element(b4, 2);
  GluePart parts[2] = {{1, ra.q.pi(0)}, {2, rb.q.pi(0)}};
  GlueResult g = glue(b4, 3, parts);
  CHECK(g.f_class == g.rs.q.quot.zero());
}

TEST_CASE("single-part cover glues to the part itself") {
  Semiring c3 = fixtures::chain3();
  Localization rm = localize_at_element(c3, 1);
  GluePart parts[1] = {{1, rm.q.pi(2)}};
  GlueResult g = glue(c3, 1, parts);
  CHECK(g.f_class == rm.q.pi(2));
}

TEST_CASE("glue rejects a bad cover and incompatible sections") {
  Semiring b4 = fixtures::diamond4();
  Localization ra = localize_at_element(b4, 1);
  GluePart bad_cover[1] = {{1, ra.q.pi(0)}};
  CHECK_THROWS_AS(glue(b4, 3, bad_cover), DomainError);  // a ≠ 1
}

TEST_CASE("exhaustive gluing: every compatible tuple glues uniquely") {
  for (const Semiring& r : fixtures::corpus()) {
    if (!r.idealic()) continue;
    for (int s1 = 0; s1 < r.n(); ++s1)
      for (int s2 = 0; s2 < r.n(); ++s2) {
        int s = r.plus(s1, s2);
        Localization l1 = localize_at_element(r, s1);
        Localization l2 = localize_at_element(r, s2);
        Localization ls = localize_at_element(r, s);
        Localization l12 = localize_at_element(r, r.times(s1, s2));
        auto r1 = restriction_map(r, ls, l1);
        auto r2 = restriction_map(r, ls, l2);
        for (int f1 = 0; f1 < l1.q.quot.n(); ++f1)
          for (int f2 = 0; f2 < l2.q.quot.n(); ++f2) {
            bool compatible = l12.q.pi(l1.q.part.rep[f1]) == l12.q.pi(l2.q.part.rep[f2]);
            int count_glues = 0;
            for (int f = 0; f < ls.q.quot.n(); ++f)
              if (r1[f] == f1 && r2[f] == f2) ++count_glues;
            if (compatible) {
              CHECK(count_glues == 1);
              GluePart parts[2] = {{s1, f1}, {s2, f2}};
              GlueResult g = glue(r, s, parts);
              CHECK(r1[g.f_class] == f1);
              CHECK(r2[g.f_class] == f2);
            } else {
              CHECK(count_glues == 0);
            }
          }
      }
  }
}
