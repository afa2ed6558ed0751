#include "core/semiring.hpp"

#include <algorithm>
#include <functional>

namespace idem {

bool Semiring::idempotent_mult() const {
  for (int x = 0; x < n(); ++x)
    if (times(x, x) != x) return false;
  return true;
}

int Semiring::pow(int a, int k) const {
  int acc = a;
  for (int i = 1; i < k; ++i) acc = times(acc, a);
  return acc;
}

Mask Semiring::power_orbit(int a) const {
  Mask m = bit(one);
  int cur = a;
  while (!has(m, cur)) {
    m |= bit(cur);
    cur = times(cur, a);
  }
  return m;
}

Report check_semiring(const Semiring& s) {
  Report r = check_cim(s.add);
  if (!r.ok()) return r;
  const int n = s.n();
  if (static_cast<int>(s.mul.size()) != n * n) {
    r.violations.push_back({"format", {}, "mul table is not n*n"});
    return r;
  }
  for (int i = 0; i < n * n; ++i)
    if (s.mul[i] < 0 || s.mul[i] >= n) {
      r.violations.push_back({"format", {i / n, i % n}, "mul entry out of range"});
      return r;
    }
  if (s.one < 0 || s.one >= n) {
    r.violations.push_back({"format", {}, "one out of range"});
    return r;
  }
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      if (s.times(x, y) != s.times(y, x)) {
        r.violations.push_back({"mul-commutativity", {x, y}, ""});
        return r;
      }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (s.times(s.times(x, y), z) != s.times(x, s.times(y, z))) {
          r.violations.push_back({"mul-associativity", {x, y, z}, ""});
          return r;
        }
  for (int x = 0; x < n; ++x)
    if (s.times(x, s.one) != x) {
      r.violations.push_back({"mul-unit", {x}, ""});
      return r;
    }
  for (int x = 0; x < n; ++x)
    if (s.times(x, s.zero()) != s.zero()) {
      r.violations.push_back({"zero-absorption", {x}, "x·0 must equal 0"});
      return r;
    }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (s.times(s.plus(a, b), c) != s.plus(s.times(a, c), s.times(b, c))) {
          r.violations.push_back({"distributivity", {a, b, c}, ""});
          return r;
        }
  return r;
}

bool check_idealic(const Semiring& s) { return s.idealic(); }
bool check_idempotent_mult(const Semiring& s) { return s.idempotent_mult(); }

Report check_hom(const SemiringHom& h) {
  Report r;
  const int n = h.src.n();
  if (static_cast<int>(h.map.size()) != n) {
    r.violations.push_back({"format", {}, "hom table has wrong size"});
    return r;
  }
  for (int x : h.map)
    if (x < 0 || x >= h.dst.n()) {
      r.violations.push_back({"format", {}, "hom value out of range"});
      return r;
    }
  if (h.map[h.src.zero()] != h.dst.zero())
    r.violations.push_back({"hom-zero", {h.src.zero()}, ""});
  if (h.map[h.src.top()] != h.dst.top())
    r.violations.push_back({"hom-top", {h.src.top()}, ""});
  if (h.map[h.src.one] != h.dst.one)
    r.violations.push_back({"hom-one", {h.src.one}, ""});
  for (int x = 0; x < n && r.ok(); ++x)
    for (int y = 0; y < n && r.ok(); ++y) {
      if (h.map[h.src.plus(x, y)] != h.dst.plus(h.map[x], h.map[y]))
        r.violations.push_back({"hom-add", {x, y}, ""});
      else if (h.map[h.src.times(x, y)] != h.dst.times(h.map[x], h.map[y]))
        r.violations.push_back({"hom-mul", {x, y}, ""});
    }
  return r;
}

std::vector<std::vector<int>> all_homs(const Semiring& src, const Semiring& dst) {
  const int n = src.n();
  std::vector<int> map(n, -1);
  std::vector<std::vector<int>> out;

  auto consistent = [&](int upto) {
    for (int x = 0; x <= upto; ++x)
      for (int y = 0; y <= upto; ++y) {
        int s = src.plus(x, y), p = src.times(x, y);
        if (s <= upto && map[s] != dst.plus(map[x], map[y])) return false;
        if (p <= upto && map[p] != dst.times(map[x], map[y])) return false;
      }
    return true;
  };
  std::function<void(int)> go = [&](int x) {
    if (x == n) {
      SemiringHom h{src, dst, map};
      if (check_hom(h).ok()) out.push_back(map);
      return;
    }
    for (int y = 0; y < dst.n(); ++y) {
      if (x == src.zero() && y != dst.zero()) continue;
      if (x == src.top() && y != dst.top()) continue;
      if (x == src.one && y != dst.one) continue;
      map[x] = y;
      if (consistent(x)) go(x + 1);
      map[x] = -1;
    }
  };
  go(0);
  return out;
}

static Semiring sub_semiring(const Semiring& s, const std::vector<int>& elems) {
  Semiring out;
  const int m = static_cast<int>(elems.size());
  std::vector<int> pos(s.n(), -1);
  for (int i = 0; i < m; ++i) pos[elems[i]] = i;
  out.add.n = m;
  out.add.join.assign(static_cast<std::size_t>(m) * m, 0);
  out.mul.assign(static_cast<std::size_t>(m) * m, 0);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      int su = s.plus(elems[i], elems[j]);
      int pr = s.times(elems[i], elems[j]);
      if (pos[su] < 0 || pos[pr] < 0)
        throw ValidationError("subset is not closed under the operations");
      out.add.join[static_cast<std::size_t>(i) * m + j] = pos[su];
      out.mul[static_cast<std::size_t>(i) * m + j] = pos[pr];
    }
  out.add.bottom = pos[s.zero()];
  out.add.top = pos[s.top()];
  out.one = pos[s.one];
  for (int e : elems) out.add.names.push_back(s.label(e));
  return out;
}

BooleanCore boolean_core(const Semiring& s) {
  if (!s.idealic() || !s.idempotent_mult())
    throw DomainError("boolean_core requires an idealic semiring with idempotent multiplication");
  std::vector<int> elems, partner;
  for (int x = 0; x < s.n(); ++x) {
    int neg = -1;
    for (int y = 0; y < s.n(); ++y)
      if (s.plus(x, y) == s.top() && s.times(x, y) == s.zero()) {
        if (neg >= 0)
          throw ValidationError("negation is not unique; carrier is not distributive");
        neg = y;
      }
    if (neg >= 0) {
      elems.push_back(x);
      partner.push_back(neg);
    }
  }
  BooleanCore bc;
  bc.elems = elems;
  bc.core = sub_semiring(s, elems);
  bc.negation.resize(elems.size());
  for (std::size_t i = 0; i < elems.size(); ++i) {
    auto it = std::find(elems.begin(), elems.end(), partner[i]);
    if (it == elems.end())
      throw ValidationError("negation partner is not complemented itself");
    bc.negation[i] = static_cast<int>(it - elems.begin());
  }
  bc.inclusion = SemiringHom{bc.core, s, elems};
  Report r = check_hom(bc.inclusion);
  if (!r.ok()) throw ValidationError("boolean core inclusion is not a homomorphism");
  return bc;
}

Product direct_product(const Semiring& a, const Semiring& b) {
  const int n1 = a.n(), n2 = b.n(), n = n1 * n2;
  require_carrier(n, "direct_product");
  Product p;
  p.n2 = n2;
  Semiring& s = p.prod;
  s.add.n = n;
  s.add.join.assign(static_cast<std::size_t>(n) * n, 0);
  s.mul.assign(static_cast<std::size_t>(n) * n, 0);
  auto id = [&](int x, int y) { return x * n2 + y; };
  for (int x1 = 0; x1 < n1; ++x1)
    for (int y1 = 0; y1 < n2; ++y1)
      for (int x2 = 0; x2 < n1; ++x2)
        for (int y2 = 0; y2 < n2; ++y2) {
          int i = id(x1, y1), j = id(x2, y2);
          s.add.join[static_cast<std::size_t>(i) * n + j] =
              id(a.plus(x1, x2), b.plus(y1, y2));
          s.mul[static_cast<std::size_t>(i) * n + j] =
              id(a.times(x1, x2), b.times(y1, y2));
        }
  s.add.bottom = id(a.zero(), b.zero());
  s.add.top = id(a.top(), b.top());
  s.one = id(a.one, b.one);
  for (int x = 0; x < n1; ++x)
    for (int y = 0; y < n2; ++y)
      s.add.names.push_back("(" + a.label(x) + "," + b.label(y) + ")");

  std::vector<int> m1(n), m2(n);
  for (int x = 0; x < n1; ++x)
    for (int y = 0; y < n2; ++y) {
      m1[id(x, y)] = x;
      m2[id(x, y)] = y;
    }
  p.proj1 = SemiringHom{s, a, m1};
  p.proj2 = SemiringHom{s, b, m2};
  if (!check_hom(p.proj1).ok() || !check_hom(p.proj2).ok())
    throw ValidationError("product projections are not homomorphisms");
  return p;
}

std::optional<std::vector<int>> find_semiring_iso(const Semiring& a, const Semiring& b) {
  if (a.n() != b.n()) return std::nullopt;
  const int n = a.n();
  std::vector<int> map(n, -1), used(n, 0);

  auto compatible = [&](int x, int y) {
    if ((x == a.zero()) != (y == b.zero())) return false;
    if ((x == a.top()) != (y == b.top())) return false;
    if ((x == a.one) != (y == b.one)) return false;
    if (count(a.add.down_set(x)) != count(b.add.down_set(y))) return false;
    for (int u = 0; u < n; ++u) {
      if (map[u] < 0) continue;
      int j = a.plus(x, u), p = a.times(x, u);
      if (map[j] >= 0 && map[j] != b.plus(y, map[u])) return false;
      if (map[p] >= 0 && map[p] != b.times(y, map[u])) return false;
    }
    return true;
  };
  std::function<bool(int)> go = [&](int x) -> bool {
    if (x == n) {
      for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
          if (map[a.plus(u, v)] != b.plus(map[u], map[v])) return false;
          if (map[a.times(u, v)] != b.times(map[u], map[v])) return false;
        }
      return true;
    }
    for (int y = 0; y < n; ++y) {
      if (used[y] || !compatible(x, y)) continue;
      map[x] = y;
      used[y] = 1;
      if (go(x + 1)) return true;
      map[x] = -1;
      used[y] = 0;
    }
    return false;
  };
  if (!go(0)) return std::nullopt;
  return map;
}

namespace fixtures {

Semiring f1() {
  Semiring s;
  s.add = chain_cim(2);
  s.add.names = {"0", "1"};
  s.mul = {0, 0, 0, 1};
  s.one = 1;
  return s;
}

Semiring chain3() {
  Semiring s;
  s.add = chain_cim(3);
  s.add.names = {"0", "m", "1"};
  s.mul.assign(9, 0);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      s.mul[static_cast<std::size_t>(i) * 3 + j] = std::min(i, j);
  s.one = 2;
  return s;
}

Semiring diamond4() {
  Semiring s;
  s.add = diamond_cim();
  s.mul.assign(16, 0);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      Mask lower = s.add.down_set(i) & s.add.down_set(j);
      s.mul[static_cast<std::size_t>(i) * 4 + j] = s.add.sup(lower);
    }
  s.one = 3;
  return s;
}

Semiring neps() {
  Semiring s;
  s.add = chain_cim(3);
  s.add.names = {"0", "e", "1"};
  // e·e = 0, 1 is the unit
  s.mul = {0, 0, 0,
           0, 0, 1,
           0, 1, 2};
  s.one = 2;
  return s;
}

Semiring zero_semiring() {
  Semiring s;
  s.add = chain_cim(1);
  s.add.names = {"01"};
  s.mul = {0};
  s.one = 0;
  return s;
}

std::vector<Semiring> corpus() {
  return {f1(), chain3(), diamond4(), neps(), zero_semiring()};
}

}  // namespace fixtures

}  // namespace idem
