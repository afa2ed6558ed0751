#include "core/localization.hpp"

#include "core/spectrum.hpp"

namespace idem {

Report check_mult_system(const Semiring& r, Mask sigma) {
  Report rep;
  if (sigma == 0 || (sigma & ~full_mask(r.n())) != 0) {
    rep.violations.push_back({"format", {}, "system must be a subset of the carrier"});
    return rep;
  }
  if (!has(sigma, r.one)) {
    rep.violations.push_back({"mult-system-unit", {r.one}, "must contain the unit"});
    return rep;
  }
  for (int a = 0; a < r.n(); ++a)
    for (int b = 0; b < r.n(); ++b)
      if (has(sigma, a) && has(sigma, b) && !has(sigma, r.times(a, b))) {
        rep.violations.push_back({"mult-system-closure", {a, b}, ""});
        return rep;
      }
  return rep;
}

Mask power_system(const Semiring& r, int f) { return r.power_orbit(f); }

Mask prime_complement_system(const Semiring& r, int p) {
  if (!is_prime(r, p)) throw DomainError("element is not prime");
  Mask m = 0;
  for (int x = 0; x < r.n(); ++x)
    if (!r.leq(x, p)) m |= bit(x);
  return m;
}

Localization localize(const Semiring& r, Mask sigma) {
  Report rep = check_mult_system(r, sigma);
  if (!rep.ok()) throw DomainError("invalid multiplicative system: " + rep.summary());
  std::vector<std::pair<int, int>> pairs;
  for (int s = 0; s < r.n(); ++s)
    if (has(sigma, s)) pairs.emplace_back(r.one, s);
  Partition p = congruence_closure(r, pairs);
  Localization loc;
  loc.sigma = sigma;
  loc.q = make_quotient(r, p);
  for (int s = 0; s < r.n(); ++s)
    if (has(sigma, s) && loc.q.pi(s) != loc.q.quot.one)
      throw ValidationError("localization failed to invert a member of the system");
  return loc;
}

Localization localize_at_element(const Semiring& r, int f) {
  return localize(r, power_system(r, f));
}

Localization localize_at_prime(const Semiring& r, int p) {
  return localize(r, prime_complement_system(r, p));
}

bool loc_relation_oracle(const Semiring& r, Mask sigma, int f, int g) {
  auto dominated = [&](int from, int to) {
    // every x ≤ from admits s ∈ Σ with s·x ≤ to
    for (int x = 0; x < r.n(); ++x) {
      if (!r.leq(x, from)) continue;
      bool found = false;
      for (int s = 0; s < r.n() && !found; ++s)
        if (has(sigma, s) && r.leq(r.times(s, x), to)) found = true;
      if (!found) return false;
    }
    return true;
  };
  return dominated(f, g) && dominated(g, f);
}

int sigma_saturation(const Semiring& r, Mask sigma, int a) {
  Mask m = 0;
  for (int x = 0; x < r.n(); ++x)
    for (int s = 0; s < r.n(); ++s)
      if (has(sigma, s) && r.leq(r.times(s, x), a)) {
        m |= bit(x);
        break;
      }
  return r.add.sup(m);
}

int radical(const Semiring& r, int a) {
  Mask m = 0;
  for (int x = 0; x < r.n(); ++x) {
    int cur = x;
    Mask seen = 0;
    while (!has(seen, cur)) {
      seen |= bit(cur);
      if (r.leq(cur, a)) {
        m |= bit(x);
        break;
      }
      cur = r.times(cur, x);
    }
  }
  return r.add.sup(m);
}

VEquiv v_equiv_check(const Semiring& r, int a, int b) {
  VEquiv v;

  // (i) every x ≤ a has a power below b
  v.power_dom = true;
  for (int x = 0; x < r.n() && v.power_dom; ++x) {
    if (!r.leq(x, a)) continue;
    bool ok = false;
    int cur = x;
    Mask seen = 0;
    while (!has(seen, cur)) {
      seen |= bit(cur);
      if (r.leq(cur, b)) {
        ok = true;
        break;
      }
      cur = r.times(cur, x);
    }
    if (!ok) v.power_dom = false;
  }

  v.radical_leq = r.leq(radical(r, a), radical(r, b));

  Spectrum sp = spec(r);
  Mask va = sp.v_mask(r, a), vb = sp.v_mask(r, b);
  v.v_contains = (vb & ~va) == 0;

  std::pair<int, int> ga{r.one, a}, gb{r.one, b};
  Partition pa = congruence_closure(r, std::span(&ga, 1));
  Partition pb = congruence_closure(r, std::span(&gb, 1));
  v.cong_geq = pb.refines(pa);

  v.consistent = (v.power_dom == v.radical_leq) &&
                 (v.radical_leq == v.v_contains) && (v.v_contains == v.cong_geq);
  return v;
}

bool is_local(const Semiring& r) {
  // unique maximal element of the carrier minus the top
  std::vector<int> maximal;
  for (int x = 0; x < r.n(); ++x) {
    if (x == r.top()) continue;
    bool is_max = true;
    for (int y = 0; y < r.n() && is_max; ++y)
      if (y != r.top() && y != x && r.leq(x, y)) is_max = false;
    if (is_max) maximal.push_back(x);
  }
  return maximal.size() == 1;
}

bool maximal_elements_prime(const Semiring& r) {
  for (int x = 0; x < r.n(); ++x) {
    if (x == r.top()) continue;
    bool is_max = true;
    for (int y = 0; y < r.n() && is_max; ++y)
      if (y != r.top() && y != x && r.leq(x, y)) is_max = false;
    if (is_max && !is_prime(r, x)) return false;
  }
  return true;
}

}  // namespace idem
