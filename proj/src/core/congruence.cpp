#include "core/congruence.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace idem {

bool Partition::refines(const Partition& coarser) const {
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (same(a, b) && !coarser.same(a, b)) return false;
  return true;
}

Partition normalize_partition(std::span<const int> raw) {
  Partition p;
  p.n = static_cast<int>(raw.size());
  p.cls.assign(p.n, -1);
  std::vector<int> relabel;  // raw label → dense id, discovered in element order
  std::vector<int> seen_label;
  for (int x = 0; x < p.n; ++x) {
    int lab = raw[x];
    int id = -1;
    for (std::size_t i = 0; i < seen_label.size(); ++i)
      if (seen_label[i] == lab) id = static_cast<int>(i);
    if (id < 0) {
      id = static_cast<int>(seen_label.size());
      seen_label.push_back(lab);
      p.rep.push_back(x);
    }
    p.cls[x] = id;
  }
  p.k = static_cast<int>(p.rep.size());
  return p;
}

namespace {

struct UnionFind {
  std::vector<int> up;
  explicit UnionFind(int n) : up(n) { std::iota(up.begin(), up.end(), 0); }
  int find(int x) {
    while (up[x] != x) x = up[x] = up[up[x]];
    return x;
  }
  // returns true if a merge happened
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a > b) std::swap(a, b);  // keep the smaller index as root
    up[b] = a;
    return true;
  }
};

}  // namespace

Partition congruence_closure(const Semiring& r,
                             std::span<const std::pair<int, int>> pairs) {
  const int n = r.n();
  UnionFind uf(n);
  std::vector<std::pair<int, int>> work;
  for (auto [a, b] : pairs) {
    if (a < 0 || a >= n || b < 0 || b >= n)
      throw DomainError("congruence pair out of range");
    if (uf.unite(a, b)) work.emplace_back(a, b);
  }
  while (!work.empty()) {
    auto [a, b] = work.back();
    work.pop_back();
    for (int c = 0; c < n; ++c) {
      int s1 = r.plus(a, c), s2 = r.plus(b, c);
      if (uf.unite(s1, s2)) work.emplace_back(s1, s2);
      int p1 = r.times(a, c), p2 = r.times(b, c);
      if (uf.unite(p1, p2)) work.emplace_back(p1, p2);
    }
  }
  std::vector<int> raw(n);
  for (int x = 0; x < n; ++x) raw[x] = uf.find(x);
  return normalize_partition(raw);
}

bool is_congruence(const Semiring& r, const Partition& p) {
  for (int a = 0; a < r.n(); ++a)
    for (int b = 0; b < r.n(); ++b) {
      if (!p.same(a, b)) continue;
      for (int c = 0; c < r.n(); ++c) {
        if (!p.same(r.plus(a, c), r.plus(b, c))) return false;
        if (!p.same(r.times(a, c), r.times(b, c))) return false;
      }
    }
  return true;
}

QuotientHom make_quotient(const Semiring& r, const Partition& p) {
  if (!is_congruence(r, p))
    throw DomainError("partition is not a congruence");
  QuotientHom q;
  q.base = r;
  q.part = p;
  const int k = p.k;
  q.quot.add.n = k;
  q.quot.add.join.assign(static_cast<std::size_t>(k) * k, 0);
  q.quot.mul.assign(static_cast<std::size_t>(k) * k, 0);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      q.quot.add.join[static_cast<std::size_t>(i) * k + j] =
          p.cls[r.plus(p.rep[i], p.rep[j])];
      q.quot.mul[static_cast<std::size_t>(i) * k + j] =
          p.cls[r.times(p.rep[i], p.rep[j])];
    }
  q.quot.add.bottom = p.cls[r.zero()];
  q.quot.add.top = p.cls[r.top()];
  q.quot.one = p.cls[r.one];
  for (int i = 0; i < k; ++i) q.quot.add.names.push_back("[" + r.label(p.rep[i]) + "]");

  // Re-verify well-definedness on all representatives, not just the chosen ones.
  for (int a = 0; a < r.n(); ++a)
    for (int b = 0; b < r.n(); ++b) {
      if (q.quot.plus(p.cls[a], p.cls[b]) != p.cls[r.plus(a, b)])
        throw ValidationError("quotient ⊕ is not well defined");
      if (q.quot.times(p.cls[a], p.cls[b]) != p.cls[r.times(a, b)])
        throw ValidationError("quotient · is not well defined");
    }
  Report rep = check_semiring(q.quot);
  if (!rep.ok()) throw ValidationError("quotient is not a semiring: " + rep.summary());
  Report hom = check_hom(q.as_hom());
  if (!hom.ok()) throw ValidationError("projection is not a homomorphism");
  return q;
}

int inverse_image(const QuotientHom& q, int b) {
  Mask m = 0;
  for (int x = 0; x < q.base.n(); ++x)
    if (q.quot.leq(q.pi(x), b)) m |= bit(x);
  return q.base.add.sup(m);
}

int saturation(const QuotientHom& q, int a) { return inverse_image(q, q.pi(a)); }

namespace {

// Enumerate all partitions of {0..n-1} in restricted-growth form.
void partitions_rec(int x, int n, int maxlab, std::vector<int>& lab,
                    const std::function<void(const std::vector<int>&)>& emit) {
  if (x == n) {
    emit(lab);
    return;
  }
  for (int l = 0; l <= maxlab + 1 && l < n; ++l) {
    lab[x] = l;
    partitions_rec(x + 1, n, std::max(maxlab, l), lab, emit);
  }
  lab[x] = -1;
}

}  // namespace

std::vector<Partition> all_congruences(const Semiring& r) {
  require_guard(r.n() <= guards().cong_carrier, "all_congruences",
                guards().cong_carrier);
  std::vector<Partition> out;
  std::vector<int> lab(r.n(), -1);
  partitions_rec(0, r.n(), -1, lab, [&](const std::vector<int>& l) {
    Partition p = normalize_partition(l);
    if (is_congruence(r, p)) out.push_back(p);
  });
  return out;
}

CongruenceSemiring congruence_semiring(const Semiring& r) {
  CongruenceSemiring cs;
  cs.carrier = all_congruences(r);
  const int m = static_cast<int>(cs.carrier.size());
  require_carrier(m, "congruence_semiring");
  auto index_of = [&](const Partition& p) {
    for (int i = 0; i < m; ++i)
      if (cs.carrier[i] == p) return i;
    throw ValidationError("congruence join/product escaped the enumeration");
  };

  auto join = [&](const Partition& a, const Partition& b) {
    std::vector<std::pair<int, int>> gen;
    for (int x = 0; x < r.n(); ++x)
      for (int y = x + 1; y < r.n(); ++y)
        if (a.same(x, y) || b.same(x, y)) gen.emplace_back(x, y);
    return congruence_closure(r, gen);
  };
  auto product = [&](const Partition& a, const Partition& b) {
    std::vector<std::pair<int, int>> gen;
    for (int x = 0; x < r.n(); ++x)
      for (int x2 = 0; x2 < r.n(); ++x2) {
        if (!a.same(x, x2)) continue;
        for (int y = 0; y < r.n(); ++y)
          for (int y2 = 0; y2 < r.n(); ++y2) {
            if (!b.same(y, y2)) continue;
            int lhs = r.plus(r.times(x, y), r.times(x2, y2));
            int rhs = r.plus(r.times(x, y2), r.times(x2, y));
            gen.emplace_back(lhs, rhs);
          }
      }
    return congruence_closure(r, gen);
  };

  Semiring& s = cs.sr;
  s.add.n = m;
  s.add.join.assign(static_cast<std::size_t>(m) * m, 0);
  s.mul.assign(static_cast<std::size_t>(m) * m, 0);
  int identity = -1, total = -1;
  for (int i = 0; i < m; ++i) {
    if (cs.carrier[i].is_identity()) identity = i;
    if (cs.carrier[i].is_total()) total = i;
  }
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      s.add.join[static_cast<std::size_t>(i) * m + j] =
          index_of(join(cs.carrier[i], cs.carrier[j]));
      s.mul[static_cast<std::size_t>(i) * m + j] =
          index_of(product(cs.carrier[i], cs.carrier[j]));
    }
  s.add.bottom = identity;
  s.add.top = total;
  s.one = total;
  for (int i = 0; i < m; ++i)
    s.add.names.push_back("c" + std::to_string(i));
  Report rep = check_semiring(s);
  if (!rep.ok())
    throw ValidationError("congruence semiring law failure: " + rep.summary());

  cs.unit_map.resize(r.n());
  for (int a = 0; a < r.n(); ++a) {
    std::pair<int, int> g{a, r.zero()};
    cs.unit_map[a] = index_of(congruence_closure(r, std::span(&g, 1)));
  }
  cs.unit_map_additive = true;
  cs.unit_map_multiplicative = true;
  for (int a = 0; a < r.n(); ++a)
    for (int b = 0; b < r.n(); ++b) {
      if (cs.unit_map[r.plus(a, b)] != s.plus(cs.unit_map[a], cs.unit_map[b]))
        cs.unit_map_additive = false;
      if (cs.unit_map[r.times(a, b)] != s.times(cs.unit_map[a], cs.unit_map[b]))
        cs.unit_map_multiplicative = false;
    }
  return cs;
}

Report check_idealic_semiorder(const Semiring& r, std::span<const std::uint8_t> rel) {
  Report out;
  const int n = r.n();
  if (static_cast<int>(rel.size()) != n * n) {
    out.violations.push_back({"format", {}, "relation table is not n*n"});
    return out;
  }
  auto R = [&](int a, int b) { return rel[static_cast<std::size_t>(a) * n + b] != 0; };
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (r.leq(a, b) && !R(a, b)) {
        out.violations.push_back({"order-compatibility", {a, b}, "a ≤ b requires a ≺ b"});
        return out;
      }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (R(a, b) && R(b, c) && !R(a, c)) {
          out.violations.push_back({"transitivity", {a, b, c}, ""});
          return out;
        }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (!R(a, b)) continue;
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
          if (!R(c, d)) continue;
          if (!R(r.plus(a, c), r.plus(b, d))) {
            out.violations.push_back({"sum-compatibility", {a, b, c, d}, ""});
            return out;
          }
          if (!R(r.times(a, c), r.times(b, d))) {
            out.violations.push_back({"product-compatibility", {a, b, c, d}, ""});
            return out;
          }
        }
    }
  return out;
}

Partition congruence_from_semiorder(const Semiring& r,
                                    std::span<const std::uint8_t> rel) {
  Report rep = check_idealic_semiorder(r, rel);
  if (!rep.ok())
    throw DomainError("not an idealic semiorder: " + rep.summary());
  const int n = r.n();
  auto R = [&](int a, int b) { return rel[static_cast<std::size_t>(a) * n + b] != 0; };
  UnionFind uf(n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (R(a, b) && R(b, a)) uf.unite(a, b);
  std::vector<int> raw(n);
  for (int x = 0; x < n; ++x) raw[x] = uf.find(x);
  Partition p = normalize_partition(raw);
  if (!is_congruence(r, p))
    throw ValidationError("semiorder kernel is not a congruence");
  // Quotient order must agree with ≺ on classes.
  QuotientHom q = make_quotient(r, p);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (q.quot.leq(q.pi(a), q.pi(b)) != R(a, b))
        throw ValidationError("quotient order disagrees with the semiorder");
  return p;
}

bool algebraic_congruence_condition(const Semiring& r, const Partition& p) {
  require_guard(r.n() <= 16, "algebraic_congruence_condition", 16);
  for (int a = 0; a < r.n(); ++a)
    for (Mask s = 0; s <= full_mask(r.n()); ++s) {
      int sum = r.add.sup(s);
      if (!p.same(r.plus(a, sum), sum)) continue;
      // search a finite witness subfamily; S itself qualifies because the
      // carrier is finite, so the first probe already succeeds
      bool found = false;
      for (Mask t = s;; t = (t - 1) & s) {
        int tsum = r.add.sup(t);
        if (p.same(r.plus(a, tsum), tsum)) {
          found = true;
          break;
        }
        if (t == 0) break;
      }
      if (!found) return false;
    }
  return true;
}

}  // namespace idem
