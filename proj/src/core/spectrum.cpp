#include "core/spectrum.hpp"

#include <algorithm>

namespace idem {

bool is_prime(const Semiring& r, int p) {
  // {a : a ≰ p} must contain the unit and be closed under multiplication.
  if (r.leq(r.one, p)) return false;
  for (int a = 0; a < r.n(); ++a)
    for (int b = 0; b < r.n(); ++b)
      if (!r.leq(a, p) && !r.leq(b, p) && r.leq(r.times(a, b), p)) return false;
  return true;
}

std::vector<int> primes(const Semiring& r) {
  if (!r.idealic()) throw DomainError("spectrum requires an idealic semiring");
  std::vector<int> out;
  for (int p = 0; p < r.n(); ++p)
    if (is_prime(r, p)) out.push_back(p);
  return out;
}

Mask Spectrum::v_mask(const Semiring&, int a) const {
  return space.closed[v_of[a]];
}

Spectrum spec(const Semiring& r) {
  Spectrum sp;
  sp.prime_elems = primes(r);
  const int np = static_cast<int>(sp.prime_elems.size());

  auto vmask = [&](int a) {
    Mask m = 0;
    for (int i = 0; i < np; ++i)
      if (r.leq(a, sp.prime_elems[i])) m |= bit(i);
    return m;
  };

  std::vector<Mask> family;
  for (int a = 0; a < r.n(); ++a) family.push_back(vmask(a));
  std::sort(family.begin(), family.end());
  family.erase(std::unique(family.begin(), family.end()), family.end());

  sp.space.n = np;
  sp.space.closed = family;
  for (int i = 0; i < np; ++i)
    sp.space.names.push_back(r.label(sp.prime_elems[i]));
  Report rep = check_top(sp.space);
  if (!rep.ok())
    throw ValidationError("V(a) family is not a topology: " + rep.summary());

  sp.v_of.resize(r.n());
  for (int a = 0; a < r.n(); ++a) sp.v_of[a] = sp.space.closed_index(vmask(a));

  // Structural facts about V and sobriety, pinned at construction time.
  for (int a = 0; a < r.n(); ++a)
    for (int b = 0; b < r.n(); ++b) {
      if (vmask(r.plus(a, b)) != (vmask(a) & vmask(b)))
        throw ValidationError("V(a⊕b) differs from V(a) ∩ V(b)");
      if (vmask(r.times(a, b)) != (vmask(a) | vmask(b)))
        throw ValidationError("V(a·b) differs from V(a) ∪ V(b)");
    }
  if (vmask(r.zero()) != full_mask(np) || vmask(r.one) != 0)
    throw ValidationError("V(0) or V(1) has the wrong value");
  if (!is_sober(sp.space)) throw ValidationError("spectrum is not sober");
  return sp;
}

int ClosedSetSemiring::index_of(Mask z) const {
  auto it = std::find(elems.begin(), elems.end(), z);
  if (it == elems.end()) throw DomainError("not a closed set of the space");
  return static_cast<int>(it - elems.begin());
}

ClosedSetSemiring closed_set_semiring(const Top& t) {
  Report rep = check_top(t);
  if (!rep.ok()) throw DomainError("invalid space: " + rep.summary());
  ClosedSetSemiring c;
  c.elems = t.closed;
  const int m = static_cast<int>(c.elems.size());
  require_carrier(m, "closed_set_semiring");
  c.sr.add.n = m;
  c.sr.add.join.assign(static_cast<std::size_t>(m) * m, 0);
  c.sr.mul.assign(static_cast<std::size_t>(m) * m, 0);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      c.sr.add.join[static_cast<std::size_t>(i) * m + j] =
          c.index_of(c.elems[i] & c.elems[j]);
      c.sr.mul[static_cast<std::size_t>(i) * m + j] =
          c.index_of(c.elems[i] | c.elems[j]);
    }
  c.sr.add.bottom = c.index_of(t.full());
  c.sr.add.top = c.index_of(0);
  c.sr.one = c.sr.add.top;
  for (int i = 0; i < m; ++i) c.sr.add.names.push_back(t.set_label(c.elems[i]));
  Report sr = check_semiring(c.sr);
  if (!sr.ok())
    throw ValidationError("closed-set semiring law failure: " + sr.summary());
  return c;
}

std::vector<int> spec_map(const SemiringHom& f, const Spectrum& spec_b,
                          const Spectrum& spec_a) {
  const Semiring& a = f.src;
  const Semiring& b = f.dst;
  std::vector<int> out;
  for (int q_elem : spec_b.prime_elems) {
    // f⁻¹(q) = sup{x : f(x) ≤ q}
    Mask m = 0;
    for (int x = 0; x < a.n(); ++x)
      if (b.leq(f(x), q_elem)) m |= bit(x);
    int img = a.add.sup(m);
    if (!is_prime(a, img))
      throw ValidationError("inverse image of a prime is not prime");
    auto it = std::find(spec_a.prime_elems.begin(), spec_a.prime_elems.end(), img);
    out.push_back(static_cast<int>(it - spec_a.prime_elems.begin()));
  }
  // continuity: the preimage of each V(x) is V(f(x))
  for (int x = 0; x < a.n(); ++x) {
    Mask pre = 0;
    for (int i = 0; i < spec_b.space.n; ++i)
      if (has(spec_a.v_mask(a, x), out[i])) pre |= bit(i);
    if (pre != spec_b.v_mask(b, f(x)))
      throw ValidationError("spec_map is not continuous");
  }
  return out;
}

DualityWitness duality_check(const Semiring& r) {
  if (!r.idealic()) throw DomainError("duality_check requires an idealic semiring");
  DualityWitness w;
  Spectrum sp = spec(r);
  ClosedSetSemiring c = closed_set_semiring(sp.space);
  w.map.resize(r.n());
  for (int a = 0; a < r.n(); ++a) w.map[a] = c.index_of(sp.v_mask(r, a));
  for (int a = 0; a < r.n(); ++a)
    for (int b = a + 1; b < r.n(); ++b)
      if (w.map[a] == w.map[b]) {
        w.collapsed = {a, b};
        w.iso = false;
        return w;
      }
  if (r.n() != c.sr.n()) {
    w.iso = false;  // injective but not surjective cannot happen: V generates
    return w;
  }
  SemiringHom h{r, c.sr, w.map};
  w.iso = check_hom(h).ok();
  return w;
}

SpaceDualityWitness duality_check_space(const Top& t) {
  SpaceDualityWitness w;
  ClosedSetSemiring c = closed_set_semiring(t);
  Spectrum sp = spec(c.sr);
  w.point_map.assign(t.n, -1);
  for (int x = 0; x < t.n; ++x) {
    int cx = c.index_of(t.closure_of_point(x));
    auto it = std::find(sp.prime_elems.begin(), sp.prime_elems.end(), cx);
    if (it == sp.prime_elems.end()) return w;  // closure not prime: not sober
    w.point_map[x] = static_cast<int>(it - sp.prime_elems.begin());
  }
  if (sp.space.n != t.n) return w;
  std::vector<int> seen(t.n, 0);
  for (int y : w.point_map) {
    if (seen[y]) return w;
    seen[y] = 1;
  }
  if (t.closed.size() != sp.space.closed.size()) return w;
  for (Mask z : t.closed) {
    Mask img = 0;
    for (int x = 0; x < t.n; ++x)
      if (has(z, x)) img |= bit(w.point_map[x]);
    if (sp.space.closed_index(img) < 0) return w;
  }
  w.homeo = true;
  return w;
}

bool spec_c_triangle_semiring(const Semiring& r) {
  // Both composites of the Spec ⊣ C adjunction at R, with unit
  // ε: a ↦ V(a) and counit η: x ↦ closure{x}.
  Spectrum sp = spec(r);  // X = Spec R
  ClosedSetSemiring c = closed_set_semiring(sp.space);
  Spectrum sp2 = spec(c.sr);  // Spec C(X)

  // η: X → Spec C(X), p ↦ closure{p}
  std::vector<int> eta(sp.space.n);
  for (int i = 0; i < sp.space.n; ++i) {
    int cl = c.index_of(sp.space.closure_of_point(i));
    auto it = std::find(sp2.prime_elems.begin(), sp2.prime_elems.end(), cl);
    if (it == sp2.prime_elems.end()) return false;
    eta[i] = static_cast<int>(it - sp2.prime_elems.begin());
  }

  // Spec(ε_R) ∘ η = id on X: Spec(ε_R) sends a prime q of C(X) to
  // ε⁻¹(q) = sup{a : V(a) ≤ q}.
  for (int i = 0; i < sp.space.n; ++i) {
    int q = sp2.prime_elems[eta[i]];
    Mask m = 0;
    for (int a = 0; a < r.n(); ++a)
      if (c.sr.leq(c.index_of(sp.v_mask(r, a)), q)) m |= bit(a);
    int img = r.add.sup(m);
    auto it = std::find(sp.prime_elems.begin(), sp.prime_elems.end(), img);
    if (it == sp.prime_elems.end()) return false;
    if (static_cast<int>(it - sp.prime_elems.begin()) != i) return false;
  }

  // C(η) ∘ ε = id on C(X): push Z ∈ C(X) to V(Z), pull back along η.
  for (int z = 0; z < c.sr.n(); ++z) {
    Mask v = sp2.v_mask(c.sr, z);
    Mask pulled = 0;
    for (int i = 0; i < sp.space.n; ++i)
      if (has(v, eta[i])) pulled |= bit(i);
    if (pulled != c.elems[z]) return false;
  }
  return true;
}

bool spec_c_triangle_space(const Top& t) {
  if (!is_sober(t)) return false;
  ClosedSetSemiring c = closed_set_semiring(t);
  Spectrum sp = spec(c.sr);
  // η: X → Spec C(X), x ↦ closure{x}
  std::vector<int> eta(t.n);
  for (int x = 0; x < t.n; ++x) {
    int cl = c.index_of(t.closure_of_point(x));
    auto it = std::find(sp.prime_elems.begin(), sp.prime_elems.end(), cl);
    if (it == sp.prime_elems.end()) return false;
    eta[x] = static_cast<int>(it - sp.prime_elems.begin());
  }
  // C(η) ∘ ε = id on C(X)
  for (int z = 0; z < c.sr.n(); ++z) {
    Mask v = sp.v_mask(c.sr, z);
    Mask pulled = 0;
    for (int x = 0; x < t.n; ++x)
      if (has(v, eta[x])) pulled |= bit(x);
    if (pulled != c.elems[z]) return false;
  }
  // counit after η is the identity: the prime η(x) is an irreducible
  // closed set of X whose unique generic point must be x.
  for (int x = 0; x < t.n; ++x) {
    Mask z = c.elems[sp.prime_elems[eta[x]]];
    auto g = generic_point(t, z);
    if (!g || *g != x) return false;
  }
  return true;
}

bool spec_quasi_compactness_facts(const Semiring& r) {
  Spectrum sp = spec(r);
  // Finite spaces are quasi-compact and every open is a finite union of
  // basic opens, so the three facts reduce to table identities.
  for (int a = 0; a < r.n(); ++a)
    for (int b = 0; b < r.n(); ++b) {
      Mask da = ~sp.v_mask(r, a) & full_mask(sp.space.n);
      Mask db = ~sp.v_mask(r, b) & full_mask(sp.space.n);
      Mask dab = ~sp.v_mask(r, r.times(a, b)) & full_mask(sp.space.n);
      if ((da & db) != dab) return false;
    }
  Mask d1 = ~sp.v_mask(r, r.one) & full_mask(sp.space.n);
  return d1 == full_mask(sp.space.n);
}

std::vector<int> restriction_map(const Semiring& r, const Localization& rs,
                                 const Localization& rs2) {
  if (!rs.q.part.refines(rs2.q.part))
    throw DomainError("no restriction map: localization congruences are incomparable");
  std::vector<int> out(rs.q.quot.n());
  for (int c = 0; c < rs.q.quot.n(); ++c) out[c] = rs2.q.pi(rs.q.part.rep[c]);
  return out;
}

GlueResult glue(const Semiring& r, int s, std::span<const GluePart> parts) {
  if (!r.idealic()) throw DomainError("glue requires an idealic semiring");
  Mask cover = 0;
  int sum = r.zero();
  for (const auto& p : parts) {
    cover |= bit(p.s_i);
    sum = r.plus(sum, p.s_i);
  }
  if (sum != s) throw DomainError("cover mismatch: ⊕ s_i differs from s");

  std::vector<Localization> li;
  for (const auto& p : parts) li.push_back(localize_at_element(r, p.s_i));
  for (std::size_t i = 0; i < parts.size(); ++i)
    if (parts[i].f_class < 0 || parts[i].f_class >= li[i].q.quot.n())
      throw DomainError("section class out of range");

  // compatibility in R_{s_i s_j}
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (std::size_t j = i + 1; j < parts.size(); ++j) {
      Localization lij = localize_at_element(r, r.times(parts[i].s_i, parts[j].s_i));
      int fi = lij.q.pi(li[i].q.part.rep[parts[i].f_class]);
      int fj = lij.q.pi(li[j].q.part.rep[parts[j].f_class]);
      if (fi != fj)
        throw DomainError("sections incompatible on parts " + std::to_string(i) +
                          "," + std::to_string(j));
    }

  Localization rs = localize_at_element(r, s);
  // Lift each section maximally, then damp it by a high power of its cover
  // element so the lift restricts below the other sections; summing the
  // damped lifts lands in the glued class.
  int lift_sum = r.zero();
  const int big = 2 * r.n() + 2;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    int sat = inverse_image(li[i].q, parts[i].f_class);
    lift_sum = r.plus(lift_sum, r.times(r.pow(parts[i].s_i, big), sat));
  }
  int f = rs.q.pi(lift_sum);

  // the result restricts back to each part, and uniquely so
  for (std::size_t i = 0; i < parts.size(); ++i) {
    auto res = restriction_map(r, rs, li[i]);
    if (res[f] != parts[i].f_class)
      throw ValidationError("glued section does not restrict to part " +
                            std::to_string(i));
  }
  for (int g = 0; g < rs.q.quot.n(); ++g) {
    if (g == f) continue;
    bool all = true;
    for (std::size_t i = 0; i < parts.size() && all; ++i) {
      auto res = restriction_map(r, rs, li[i]);
      if (res[g] != parts[i].f_class) all = false;
    }
    if (all) throw ValidationError("glued section is not unique");
  }
  return GlueResult{rs, f};
}

}  // namespace idem
