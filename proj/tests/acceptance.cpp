// Acceptance suite: one line per criterion, exit 0 iff all pass.

#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "core/enumerate.hpp"
#include "core/module.hpp"
#include "core/scheme.hpp"

using namespace idem;

namespace {

std::vector<Semiring> idealic_corpus(int enum_bound) {
  std::vector<Semiring> pool = fixtures::corpus();
  for (int n = 1; n <= enum_bound; ++n)
    for (const Semiring& s : enumerate_semirings(n)) pool.push_back(s);
  std::vector<Semiring> out;
  for (const Semiring& s : pool)
    if (s.idealic()) out.push_back(s);
  return out;
}

std::vector<Mask> all_mult_systems(const Semiring& r) {
  std::vector<Mask> out;
  for (Mask s = 1; s <= full_mask(r.n()); ++s)
    if (check_mult_system(r, s).ok()) out.push_back(s);
  return out;
}

// 1. Spec(C(X)) ≅ X and C(Spec C(X)) ≅ C(X) for all T0 spaces on ≤ 4 points.
bool criterion_duality(std::string& note) {
  const std::size_t expected[] = {0, 1, 2, 5, 16};
  for (int n = 2; n <= 3; ++n)
    if (poset_count_naive(n) != expected[n]) {
      note = "naive count mismatch at n=" + std::to_string(n);
      return false;
    }
  int witnesses = 0;
  for (int n = 1; n <= 4; ++n) {
    auto spaces = enumerate_posets(n);
    if (spaces.size() != expected[n]) {
      note = "space count mismatch at n=" + std::to_string(n);
      return false;
    }
    for (const Top& x : spaces) {
      SpaceDualityWitness w = duality_check_space(x);
      if (!w.homeo) {
        note = "Spec C(X) not homeomorphic to X on " + std::to_string(n) + " points";
        return false;
      }
      ClosedSetSemiring c = closed_set_semiring(x);
      DualityWitness dw = duality_check(c.sr);
      if (!dw.iso) {
        note = "C(Spec C(X)) differs from C(X)";
        return false;
      }
      if (!spec_c_triangle_space(x) || !spec_c_triangle_semiring(c.sr)) {
        note = "triangle identity failed";
        return false;
      }
      ++witnesses;
    }
  }
  note = "2,5,16 spaces at n=2,3,4; " + std::to_string(witnesses) + " exact witnesses";
  return true;
}

// 2. Localization congruence ≡ divisibility oracle on every idealic corpus
//    semiring and every multiplicative system.
bool criterion_loc_oracle(std::string& note) {
  int instances = 0;
  for (const Semiring& r : idealic_corpus(3)) {
    for (Mask sigma : all_mult_systems(r)) {
      Localization l = localize(r, sigma);
      for (int f = 0; f < r.n(); ++f)
        for (int g = 0; g < r.n(); ++g)
          if (l.q.part.same(f, g) != loc_relation_oracle(r, sigma, f, g)) {
            note = "mismatch: |R|=" + std::to_string(r.n()) +
                   " sigma=" + std::to_string(sigma) + " (" + r.label(f) + "," +
                   r.label(g) + ")";
            return false;
          }
      ++instances;
    }
  }
  note = std::to_string(instances) + " (semiring, system) pairs, exact equivalence";
  return true;
}

// 3. (i) ⟺ (ii) ⟺ (iii) ⟺ (iv) for all element pairs.
bool criterion_v_equiv(std::string& note) {
  int pairs = 0;
  for (const Semiring& r : idealic_corpus(3)) {
    for (int a = 0; a < r.n(); ++a)
      for (int b = 0; b < r.n(); ++b) {
        VEquiv v = v_equiv_check(r, a, b);
        if (!v.consistent) {
          note = "clauses disagree on |R|=" + std::to_string(r.n()) + " (" +
                 r.label(a) + "," + r.label(b) + ")";
          return false;
        }
        ++pairs;
      }
  }
  note = std::to_string(pairs) + " pairs, all four clauses agree";
  return true;
}

// 4. Every cover s = ⊕ s_i with ≤ 3 parts glues uniquely and glue() finds it.
bool criterion_glue(std::string& note) {
  int covers = 0;
  for (const Semiring& r : idealic_corpus(3)) {
    std::vector<std::vector<int>> part_sets;
    for (int a = 0; a < r.n(); ++a) part_sets.push_back({a});
    for (int a = 0; a < r.n(); ++a)
      for (int b = a + 1; b < r.n(); ++b) part_sets.push_back({a, b});
    for (int a = 0; a < r.n(); ++a)
      for (int b = a + 1; b < r.n(); ++b)
        for (int c = b + 1; c < r.n(); ++c) part_sets.push_back({a, b, c});
    for (const auto& cover : part_sets) {
      int s = r.zero();
      for (int si : cover) s = r.plus(s, si);
      std::vector<Localization> li;
      for (int si : cover) li.push_back(localize_at_element(r, si));
      Localization ls = localize_at_element(r, s);
      std::vector<std::vector<int>> res;
      for (const Localization& l : li) res.push_back(restriction_map(r, ls, l));
      // brute force over all tuples
      std::vector<int> idx(cover.size(), 0);
      bool done = false;
      while (!done) {
        bool compatible = true;
        for (std::size_t i = 0; i < cover.size() && compatible; ++i)
          for (std::size_t j = i + 1; j < cover.size() && compatible; ++j) {
            Localization lij = localize_at_element(r, r.times(cover[i], cover[j]));
            if (lij.q.pi(li[i].q.part.rep[idx[i]]) !=
                lij.q.pi(li[j].q.part.rep[idx[j]]))
              compatible = false;
          }
        int glues = 0;
        for (int cnd = 0; cnd < ls.q.quot.n(); ++cnd) {
          bool all = true;
          for (std::size_t i = 0; i < cover.size() && all; ++i)
            if (res[i][cnd] != idx[i]) all = false;
          if (all) ++glues;
        }
        if (compatible && glues != 1) {
          note = "existence/uniqueness failed on a compatible tuple";
          return false;
        }
        if (!compatible && glues != 0) {
          note = "an incompatible tuple glued";
          return false;
        }
        if (compatible) {
          std::vector<GluePart> parts;
          for (std::size_t i = 0; i < cover.size(); ++i)
            parts.push_back({cover[i], idx[i]});
          try {
            GlueResult g = glue(r, s, parts);
            for (std::size_t i = 0; i < cover.size(); ++i)
              if (res[i][g.f_class] != idx[i]) {
                note = "glue() returned a class that does not restrict correctly";
                return false;
              }
          } catch (const Error& e) {
            note = std::string("glue() rejected a compatible tuple: ") + e.what();
            return false;
          }
        }
        // advance the tuple
        std::size_t pos = 0;
        while (pos < cover.size()) {
          if (++idx[pos] < li[pos].q.quot.n()) break;
          idx[pos] = 0;
          ++pos;
        }
        done = pos == cover.size();
        if (cover.empty()) done = true;
      }
      ++covers;
    }
  }
  note = std::to_string(covers) + " covers, exact existence and uniqueness";
  return true;
}

// 5. Spec ⊣ Γ adjunction on the three kinds, with classical ring stalks.
bool criterion_adjunction(std::string& note) {
  for (const Semiring& r :
       {fixtures::f1(), fixtures::chain3(), fixtures::diamond4(), fixtures::neps()}) {
    SchemeAdjunctionReport a = adjunction_check(SchemeType::semiring_type(), Algebra{r});
    if (!a.ok) {
      note = "semiring kind |R|=" + std::to_string(r.n()) + ": " + a.failure;
      return false;
    }
  }
  for (const Monoid& m : {trivial_monoid(), cyclic_group(2), truncated_monoid()}) {
    SchemeAdjunctionReport a = adjunction_check(SchemeType::monoid_type(), Algebra{m});
    if (!a.ok) {
      note = "monoid kind |M|=" + std::to_string(m.n) + ": " + a.failure;
      return false;
    }
  }
  for (int n : {4, 6, 12}) {
    SchemeAdjunctionReport a = adjunction_check(SchemeType::ring_type(), Algebra{zmod(n)});
    if (!a.ok) {
      note = "ring kind Z/" + std::to_string(n) + ": " + a.failure;
      return false;
    }
  }
  AScheme z12 = spec_scheme(SchemeType::ring_type(), Algebra{zmod(12)});
  bool has4 = false, has3 = false;
  for (int z = 0; z < z12.cx.sr.n(); ++z) {
    if (count(z12.cx.elems[z]) != 1) continue;
    if (find_algebra_iso(z12.O.sections[z], Algebra{zmod(4)})) has4 = true;
    if (find_algebra_iso(z12.O.sections[z], Algebra{zmod(3)})) has3 = true;
  }
  if (!has4 || !has3) {
    note = "Z/12 stalks differ from the classical Z/4 and Z/3";
    return false;
  }
  note = "10 instances, both triangles, unit/counit isomorphisms, classical stalks";
  return true;
}

// 6. Z ↦ R_Z is a sheaf without sheafification; the constant presheaf fails
//    at the empty cover.
bool criterion_sheaf(std::string& note) {
  for (const Semiring& r : idealic_corpus(3)) {
    AScheme x = spec_scheme(SchemeType::semiring_type(), Algebra{r});
    if (!sheaf_check(x.O).ok) {
      note = "structure presheaf failed on |R|=" + std::to_string(r.n());
      return false;
    }
    for (int z = 0; z < x.cx.sr.n(); ++z) {
      std::vector<int> seen(algebra_size(x.O.sections[z]), 0);
      for (int v : x.base_class[z]) seen[v] = 1;
      if (std::count(seen.begin(), seen.end(), 1) != algebra_size(x.O.sections[z])) {
        note = "sheafification was needed on |R|=" + std::to_string(r.n());
        return false;
      }
    }
  }
  ClosedSetSemiring cx = closed_set_semiring(discrete_space(2));
  Presheaf p = constant_presheaf(SchemeType::semiring_type(), cx.sr,
                                 Algebra{fixtures::f1()});
  SheafCheck sc = sheaf_check(p);
  if (sc.ok || !sc.cover.empty() || sc.z != cx.sr.zero()) {
    note = "negative fixture did not fail at the empty cover";
    return false;
  }
  note = "all structure presheaves already sheaves; negative fixture fails at the empty cover";
  return true;
}

// 7. Hom(M⊗N, P) ↔ Hom(M, Hom(N, P)) for all triples with carriers ≤ 3.
bool criterion_tensor(std::string& note) {
  std::vector<Module> mods;
  for (int n = 1; n <= 3; ++n)
    for (const Cim& c : enumerate_lattices(n)) mods.push_back(f1_module(c));
  int triples = 0;
  for (const Module& m : mods)
    for (const Module& n : mods)
      for (const Module& p : mods) {
        AdjunctionWitness w = tensor_hom_adjunction_check(m, n, p);
        if (!w.ok) {
          note = "bijection failed: " + w.failure;
          return false;
        }
        ++triples;
      }
  Module c2 = f1_module(fixtures::chain_cim(2));
  if (!find_module_iso(tensor(c2, c2).mod, c2)) {
    note = "C2 ⊗ C2 is not C2";
    return false;
  }
  Module unit = free_module(fixtures::f1(), 1);
  for (const Module& m : mods)
    if (!find_module_iso(tensor(unit, m).mod, m)) {
      note = "free(1) ⊗ M is not M";
      return false;
    }
  note = std::to_string(triples) + " triples, explicit mutually inverse bijections";
  return true;
}

// 8. alg(X) ≅ X for discrete X with ≤ 4 points; boolean core of C(X) is C(X).
bool criterion_stone(std::string& note) {
  for (int n = 1; n <= 4; ++n) {
    PrimeFilterSpace pf = prime_filter_space(discrete_space(n));
    if (!pf.unit_is_homeo || pf.space.n != n) {
      note = "prime-filter space differs from the discrete space on " +
             std::to_string(n) + " points";
      return false;
    }
    ClosedSetSemiring c = closed_set_semiring(discrete_space(n));
    BooleanCore bc = boolean_core(c.sr);
    if (bc.core.n() != c.sr.n()) {
      note = "closed-set semiring of the discrete space is not all complemented";
      return false;
    }
  }
  note = "discrete spaces on 1..4 points, exact homeomorphisms and Boolean cores";
  return true;
}

// 9. Saturation identities on all corpus congruences; the congruence
//    semiring of the two-element semiring is itself.
bool criterion_congruence(std::string& note) {
  int congruences = 0;
  for (const Semiring& r : idealic_corpus(3)) {
    if (r.n() > guards().cong_carrier) continue;
    for (const Partition& p : all_congruences(r)) {
      QuotientHom q = make_quotient(r, p);
      for (int a = 0; a < r.n(); ++a)
        for (int b = 0; b < r.n(); ++b) {
          int sa = saturation(q, a), sb = saturation(q, b);
          if (saturation(q, r.plus(sa, sb)) != saturation(q, r.plus(a, b)) ||
              saturation(q, r.times(sa, sb)) != saturation(q, r.times(a, b))) {
            note = "saturation law failed";
            return false;
          }
        }
      ++congruences;
    }
  }
  CongruenceSemiring cs = congruence_semiring(fixtures::f1());
  if (!find_semiring_iso(cs.sr, fixtures::f1())) {
    note = "congruence semiring of the two-element semiring is not itself";
    return false;
  }
  note = std::to_string(congruences) + " congruences, both saturation identities";
  return true;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<bool(std::string&)> run;
  };
  const Criterion criteria[] = {
      {"duality-equivalence", criterion_duality},
      {"localization-oracle", criterion_loc_oracle},
      {"radical-spectrum-equivalences", criterion_v_equiv},
      {"gluing", criterion_glue},
      {"spectrum-sections-adjunction", criterion_adjunction},
      {"sheaf-property", criterion_sheaf},
      {"tensor-hom-adjunction", criterion_tensor},
      {"discrete-stone-check", criterion_stone},
      {"congruence-laws", criterion_congruence},
  };
  int failed = 0;
  int index = 1;
  for (const Criterion& c : criteria) {
    std::string note;
    bool ok = false;
    try {
      ok = c.run(note);
    } catch (const std::exception& e) {
      note = e.what();
    }
    std::printf("[%d] %-32s %s  (%s)\n", index++, c.name, ok ? "PASS" : "FAIL",
                note.c_str());
    if (!ok) ++failed;
  }
  if (failed) std::printf("%d criterion(s) failed\n", failed);
  else std::printf("all %d criteria passed\n", index - 1);
  return failed == 0 ? 0 : 1;
}
