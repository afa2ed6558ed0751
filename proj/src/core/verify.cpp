#include "core/verify.hpp"

#include <functional>

#include "core/enumerate.hpp"
#include "core/module.hpp"
#include "core/scheme.hpp"

namespace idem {

void VerificationReport::add(const std::string& name, bool pass,
                             const std::string& witness, double ms) {
  items.push_back({name, pass ? "pass" : "fail", pass ? "" : witness, ms});
  if (pass) ++passed;
  else ++failed;
}

void VerificationReport::skip(const std::string& name, const std::string& why) {
  items.push_back({name, "skip", why, 0});
  ++skipped;
}

namespace {

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                     start)
        .count();
  }
};

std::vector<std::pair<std::string, Semiring>> semiring_pool(const Document* doc,
                                                            int bound) {
  std::vector<std::pair<std::string, Semiring>> pool;
  pool.emplace_back("F1", fixtures::f1());
  pool.emplace_back("C3", fixtures::chain3());
  pool.emplace_back("B4", fixtures::diamond4());
  pool.emplace_back("Ne", fixtures::neps());
  pool.emplace_back("zero", fixtures::zero_semiring());
  for (int n = 1; n <= std::min(bound, 3); ++n) {
    auto all = enumerate_semirings(n);
    for (std::size_t i = 0; i < all.size(); ++i)
      pool.emplace_back("enum" + std::to_string(n) + "_" + std::to_string(i), all[i]);
  }
  if (doc)
    for (const Block& b : doc->blocks)
      if (b.kind == "semiring") pool.emplace_back(b.name, *b.semiring);
  return pool;
}

std::vector<Mask> all_mult_systems(const Semiring& r) {
  std::vector<Mask> out;
  for (Mask s = 1; s <= full_mask(r.n()); ++s)
    if (check_mult_system(r, s).ok()) out.push_back(s);
  return out;
}

void suite_duality(VerificationReport& rep, const Document* doc, int bound) {
  int n_max = bound > 0 ? std::min(bound, 5) : 4;
  // counts cross-checked against the naive enumeration where feasible
  for (int n = 1; n <= std::min(n_max, 3); ++n) {
    Timer t;
    bool ok = poset_count(n) == poset_count_naive(n);
    rep.add("poset-count-naive-n" + std::to_string(n), ok, "counts differ", t.ms());
  }
  const std::size_t expect[] = {1, 1, 2, 5, 16, 63};
  for (int n = 1; n <= n_max; ++n) {
    Timer t;
    std::size_t c = poset_count(n);
    rep.add("poset-count-n" + std::to_string(n), c == expect[n],
            "count " + std::to_string(c), t.ms());
  }
  for (int n = 1; n <= n_max; ++n) {
    auto spaces = enumerate_posets(n);
    for (std::size_t i = 0; i < spaces.size(); ++i) {
      Timer t;
      const Top& x = spaces[i];
      SpaceDualityWitness w = duality_check_space(x);
      bool tri = spec_c_triangle_space(x);
      ClosedSetSemiring c = closed_set_semiring(x);
      DualityWitness dw = duality_check(c.sr);
      bool ok = w.homeo && tri && dw.iso;
      rep.add("duality-n" + std::to_string(n) + "-" + std::to_string(i), ok,
              !w.homeo ? "Spec C(X) not homeomorphic to X"
                       : (!tri ? "triangle identity failed" : "C(Spec C(X)) not C(X)"),
              t.ms());
    }
  }
  for (const auto& [name, r] : semiring_pool(doc, 3)) {
    if (!r.idealic()) continue;
    Timer t;
    bool tri = spec_c_triangle_semiring(r);
    bool iso = !r.idempotent_mult() || duality_check(r).iso;
    rep.add("duality-semiring-" + name, tri && iso,
            tri ? "unit not an isomorphism" : "triangle identity failed", t.ms());
  }
}

void suite_localization(VerificationReport& rep, const Document* doc, int bound) {
  for (const auto& [name, r] : semiring_pool(doc, bound > 0 ? bound : 3)) {
    if (!r.idealic()) {
      rep.skip("oracle-" + name, "not idealic: outside the lemma's hypotheses");
      continue;
    }
    Timer t;
    bool ok = true;
    std::string witness;
    for (Mask sigma : all_mult_systems(r)) {
      Localization l = localize(r, sigma);
      for (int f = 0; f < r.n() && ok; ++f)
        for (int g = 0; g < r.n() && ok; ++g)
          if (l.q.part.same(f, g) != loc_relation_oracle(r, sigma, f, g)) {
            ok = false;
            witness = "sigma=" + std::to_string(sigma) + " f=" + r.label(f) +
                      " g=" + r.label(g);
          }
      for (int a = 0; a < r.n() && ok; ++a)
        if (sigma_saturation(r, sigma, a) != saturation(l.q, a)) {
          ok = false;
          witness = "saturation mismatch at " + r.label(a);
        }
    }
    for (int p : primes(r))
      if (ok) {
        Localization lp = localize_at_prime(r, p);
        if (lp.q.quot.n() > 1 && !is_local(lp.q.quot)) {
          ok = false;
          witness = "localization at " + r.label(p) + " is not local";
        }
      }
    if (ok && !maximal_elements_prime(r)) {
      ok = false;
      witness = "a maximal element is not prime";
    }
    rep.add("oracle-" + name, ok, witness, t.ms());
  }
}

void suite_radical(VerificationReport& rep, const Document* doc, int bound) {
  for (const auto& [name, r] : semiring_pool(doc, bound > 0 ? bound : 3)) {
    if (!r.idealic()) {
      rep.skip("v-equiv-" + name, "not idealic: outside the lemma's hypotheses");
      continue;
    }
    Timer t;
    bool ok = true;
    std::string witness;
    for (int a = 0; a < r.n() && ok; ++a)
      for (int b = 0; b < r.n() && ok; ++b) {
        VEquiv v = v_equiv_check(r, a, b);
        if (!v.consistent) {
          ok = false;
          witness = "a=" + r.label(a) + " b=" + r.label(b);
        }
      }
    for (int a = 0; a < r.n() && ok; ++a) {
      if (!r.leq(a, radical(r, a)) || radical(r, radical(r, a)) != radical(r, a)) {
        ok = false;
        witness = "radical closure laws at " + r.label(a);
      }
    }
    rep.add("v-equiv-" + name, ok, witness, t.ms());
  }
}

void suite_sheaf(VerificationReport& rep, const Document* doc, int bound) {
  for (const auto& [name, r] : semiring_pool(doc, bound > 0 ? bound : 3)) {
    if (!r.idealic()) continue;
    Timer t;
    AScheme x = spec_scheme(SchemeType::semiring_type(), Algebra{r});
    // rebuild the raw presheaf z ↦ R_z and check it without sheafification
    SheafCheck sc = sheaf_check(x.O);
    bool same = true;
    for (int z = 0; z < x.cx.sr.n(); ++z) {
      // the stored sheaf must be the presheaf itself (unit bijective)
      std::vector<int> seen(algebra_size(x.O.sections[z]), 0);
      for (int v : x.base_class[z]) seen[v] = 1;
      // surjectivity of base classes implies no sheafification happened
      if (std::count(seen.begin(), seen.end(), 1) !=
          algebra_size(x.O.sections[z]))
        same = false;
    }
    rep.add("sheaf-" + name, sc.ok && same,
            sc.ok ? "presheaf was sheafified" : sc.reason, t.ms());
  }
  {
    Timer t;
    ClosedSetSemiring cx = closed_set_semiring(discrete_space(2));
    Presheaf p = constant_presheaf(SchemeType::semiring_type(), cx.sr,
                                   Algebra{fixtures::f1()});
    SheafCheck sc = sheaf_check(p);
    bool expected_failure = !sc.ok && sc.cover.empty() && sc.z == cx.sr.zero();
    rep.add("sheaf-negative-constant", expected_failure,
            "constant presheaf unexpectedly passed or failed elsewhere", t.ms());
  }
}

void suite_patching(VerificationReport& rep, const Document* doc, int bound) {
  for (const auto& [name, r] : semiring_pool(doc, bound > 0 ? bound : 3)) {
    if (!r.idealic()) continue;
    Timer t;
    bool ok = true;
    std::string witness;
    // every cover s = s1 ⊕ s2 ⊕ s3 with up to three parts
    std::vector<std::vector<int>> covers;
    for (int a = 0; a < r.n(); ++a) covers.push_back({a});
    for (int a = 0; a < r.n(); ++a)
      for (int b = a + 1; b < r.n(); ++b) covers.push_back({a, b});
    if (r.n() <= 4)
      for (int a = 0; a < r.n(); ++a)
        for (int b = a + 1; b < r.n(); ++b)
          for (int c = b + 1; c < r.n(); ++c) covers.push_back({a, b, c});
    for (const auto& cover : covers) {
      int s = r.zero();
      for (int si : cover) s = r.plus(s, si);
      // brute-force comparison runs inside glue(); compatible tuples are
      // enumerated here
      std::vector<Localization> li;
      for (int si : cover) li.push_back(localize_at_element(r, si));
      std::function<void(std::size_t, std::vector<int>&)> tuples =
          [&](std::size_t i, std::vector<int>& acc) {
            if (!ok) return;
            if (i == cover.size()) {
              std::vector<GluePart> parts;
              for (std::size_t k = 0; k < cover.size(); ++k)
                parts.push_back({cover[k], acc[k]});
              bool compatible = true;
              for (std::size_t a2 = 0; a2 < cover.size() && compatible; ++a2)
                for (std::size_t b2 = a2 + 1; b2 < cover.size() && compatible; ++b2) {
                  Localization lab =
                      localize_at_element(r, r.times(cover[a2], cover[b2]));
                  if (lab.q.pi(li[a2].q.part.rep[acc[a2]]) !=
                      lab.q.pi(li[b2].q.part.rep[acc[b2]]))
                    compatible = false;
                }
              if (!compatible) return;
              try {
                glue(r, s, parts);
              } catch (const Error& e) {
                ok = false;
                witness = e.what();
              }
              return;
            }
            for (int c = 0; c < li[i].q.quot.n(); ++c) {
              acc[i] = c;
              tuples(i + 1, acc);
            }
          };
      std::vector<int> acc(cover.size(), 0);
      tuples(0, acc);
      if (!ok) break;
    }
    rep.add("glue-" + name, ok, witness, t.ms());
  }
}

void suite_adjunction(VerificationReport& rep, const Document* doc, int bound) {
  (void)bound;
  for (const Semiring& r :
       {fixtures::f1(), fixtures::chain3(), fixtures::diamond4(), fixtures::neps()}) {
    Timer t;
    SchemeAdjunctionReport a = adjunction_check(SchemeType::semiring_type(), Algebra{r});
    rep.add("adjunction-semiring-" + std::to_string(r.n()), a.ok, a.failure, t.ms());
  }
  {
    int i = 0;
    for (const Monoid& m : {trivial_monoid(), cyclic_group(2), truncated_monoid()}) {
      Timer t;
      SchemeAdjunctionReport a = adjunction_check(SchemeType::monoid_type(), Algebra{m});
      rep.add("adjunction-monoid-" + std::to_string(i++), a.ok, a.failure, t.ms());
    }
  }
  for (int n : {4, 6, 12}) {
    Timer t;
    SchemeAdjunctionReport a = adjunction_check(SchemeType::ring_type(), Algebra{zmod(n)});
    rep.add("adjunction-ring-z" + std::to_string(n), a.ok, a.failure, t.ms());
  }
  {
    Timer t;
    AScheme z12 = spec_scheme(SchemeType::ring_type(), Algebra{zmod(12)});
    bool ok = z12.space.n == 2;
    bool has4 = false, has3 = false;
    for (int z = 0; z < z12.cx.sr.n(); ++z) {
      if (count(z12.cx.elems[z]) != 1) continue;
      if (find_algebra_iso(z12.O.sections[z], Algebra{zmod(4)})) has4 = true;
      if (find_algebra_iso(z12.O.sections[z], Algebra{zmod(3)})) has3 = true;
    }
    rep.add("ring-stalks-z12", ok && has4 && has3, "stalks differ from Z/4 and Z/3",
            t.ms());
  }
  {
    Timer t;
    AScheme x = tau_scheme(sierpinski());
    SchemeAdjunctionReport a = adjunction_check_scheme(x);
    rep.add("adjunction-tau-sierpinski", a.ok, a.failure, t.ms());
  }
  if (doc)
    for (const Block& b : doc->blocks) {
      Timer t;
      if (b.kind == "semiring" && b.semiring->idealic()) {
        SchemeAdjunctionReport a =
            adjunction_check(SchemeType::semiring_type(), Algebra{*b.semiring});
        rep.add("adjunction-doc-" + b.name, a.ok, a.failure, t.ms());
      } else if (b.kind == "monoid") {
        SchemeAdjunctionReport a =
            adjunction_check(SchemeType::monoid_type(), Algebra{*b.monoid});
        rep.add("adjunction-doc-" + b.name, a.ok, a.failure, t.ms());
      } else if (b.kind == "ring") {
        SchemeAdjunctionReport a =
            adjunction_check(SchemeType::ring_type(), Algebra{*b.ring});
        rep.add("adjunction-doc-" + b.name, a.ok, a.failure, t.ms());
      }
    }
}

void suite_tensor(VerificationReport& rep, const Document* doc, int bound) {
  (void)doc;
  int cap = bound > 0 ? bound : 3;
  std::vector<Module> mods;
  for (const Cim& c : enumerate_lattices(1)) mods.push_back(f1_module(c));
  for (const Cim& c : enumerate_lattices(2)) mods.push_back(f1_module(c));
  if (cap >= 3)
    for (const Cim& c : enumerate_lattices(3)) mods.push_back(f1_module(c));
  for (std::size_t i = 0; i < mods.size(); ++i)
    for (std::size_t j = 0; j < mods.size(); ++j)
      for (std::size_t k = 0; k < mods.size(); ++k) {
        Timer t;
        AdjunctionWitness w = tensor_hom_adjunction_check(mods[i], mods[j], mods[k]);
        rep.add("tensor-hom-" + std::to_string(i) + std::to_string(j) + std::to_string(k),
                w.ok, w.failure, t.ms());
      }
  {
    Timer t;
    Module c2 = f1_module(fixtures::chain_cim(2));
    Tensor tt = tensor(c2, c2);
    rep.add("tensor-c2-c2", find_module_iso(tt.mod, c2).has_value(),
            "C2 ⊗ C2 is not C2", t.ms());
  }
  {
    Timer t;
    Module unit = free_module(fixtures::f1(), 1);
    bool ok = true;
    for (const Module& m : mods)
      if (!find_module_iso(tensor(unit, m).mod, m)) ok = false;
    rep.add("tensor-unit-law", ok, "free(1) ⊗ M is not M", t.ms());
  }
}

void suite_congruence(VerificationReport& rep, const Document* doc, int bound) {
  for (const auto& [name, r] : semiring_pool(doc, bound > 0 ? bound : 3)) {
    if (r.n() > guards().cong_carrier) {
      rep.skip("saturation-" + name, "carrier above the congruence bound");
      continue;
    }
    Timer t;
    bool ok = true;
    std::string witness;
    for (const Partition& p : all_congruences(r)) {
      QuotientHom q = make_quotient(r, p);
      for (int a = 0; a < r.n() && ok; ++a)
        for (int b = 0; b < r.n() && ok; ++b) {
          int sa = saturation(q, a), sb = saturation(q, b);
          if (saturation(q, r.plus(sa, sb)) != saturation(q, r.plus(a, b)) ||
              saturation(q, r.times(sa, sb)) != saturation(q, r.times(a, b))) {
            ok = false;
            witness = "saturation laws at (" + r.label(a) + "," + r.label(b) + ")";
          }
        }
      if (!ok) break;
    }
    rep.add("saturation-" + name, ok, witness, t.ms());
  }
  {
    Timer t;
    CongruenceSemiring cs = congruence_semiring(fixtures::f1());
    rep.add("congruence-semiring-f1",
            find_semiring_iso(cs.sr, fixtures::f1()).has_value(),
            "congruence semiring of F1 is not F1", t.ms());
  }
}

void suite_stone(VerificationReport& rep, const Document* doc, int bound) {
  (void)doc;
  int cap = bound > 0 ? std::min(bound, 4) : 4;
  for (int n = 1; n <= cap; ++n) {
    Timer t;
    PrimeFilterSpace pf = prime_filter_space(discrete_space(n));
    rep.add("prime-filters-discrete-" + std::to_string(n), pf.unit_is_homeo,
            "prime filter space differs from the discrete space", t.ms());
  }
  for (int n = 1; n <= cap; ++n) {
    Timer t;
    ClosedSetSemiring c = closed_set_semiring(discrete_space(n));
    BooleanCore bc = boolean_core(c.sr);
    rep.add("boolean-core-discrete-" + std::to_string(n), bc.core.n() == c.sr.n(),
            "closed-set semiring of a discrete space is not Boolean", t.ms());
  }
  {
    Timer t;
    PrimeFilterSpace pf = prime_filter_space(sierpinski());
    rep.add("prime-filters-sierpinski", pf.unit_is_homeo, "not homeomorphic", t.ms());
  }
}

}  // namespace

std::vector<std::string> suite_names() {
  return {"duality",  "localization-oracle", "radical",    "sheaf",
          "patching", "adjunction",          "tensor",     "congruence",
          "stone"};
}

VerificationReport run_suite(const std::string& suite, const Document* doc, int bound) {
  VerificationReport rep;
  rep.suite = suite;
  if (suite == "duality") suite_duality(rep, doc, bound);
  else if (suite == "localization-oracle") suite_localization(rep, doc, bound);
  else if (suite == "radical") suite_radical(rep, doc, bound);
  else if (suite == "sheaf") suite_sheaf(rep, doc, bound);
  else if (suite == "patching") suite_patching(rep, doc, bound);
  else if (suite == "adjunction") suite_adjunction(rep, doc, bound);
  else if (suite == "tensor") suite_tensor(rep, doc, bound);
  else if (suite == "congruence") suite_congruence(rep, doc, bound);
  else if (suite == "stone") suite_stone(rep, doc, bound);
  else throw DomainError("unknown suite '" + suite + "'");
  return rep;
}

}  // namespace idem
