#include "core/cim.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace idem {

std::string Report::summary() const {
  if (ok()) return "pass";
  std::ostringstream os;
  for (const auto& v : violations) {
    os << v.law;
    if (!v.witness.empty()) {
      os << " at (";
      for (std::size_t i = 0; i < v.witness.size(); ++i)
        os << (i ? "," : "") << v.witness[i];
      os << ")";
    }
    if (!v.detail.empty()) os << ": " << v.detail;
    os << "\n";
  }
  return os.str();
}

int Cim::sup(Mask s) const {
  int acc = bottom;
  for (int i = 0; i < n; ++i)
    if (has(s, i)) acc = add(acc, i);
  return acc;
}

int Cim::inf(Mask s) const {
  // inf S = sup { x : x ≤ s for all s ∈ S }
  Mask lower = full_mask(n);
  for (int i = 0; i < n; ++i)
    if (has(s, i)) lower &= down_set(i);
  return sup(lower);
}

Mask Cim::down_set(int a) const {
  Mask m = 0;
  for (int x = 0; x < n; ++x)
    if (leq(x, a)) m |= bit(x);
  return m;
}

Mask Cim::up_set(int a) const {
  Mask m = 0;
  for (int x = 0; x < n; ++x)
    if (leq(a, x)) m |= bit(x);
  return m;
}

std::string Cim::label(int a) const {
  if (a >= 0 && a < static_cast<int>(names.size()) && !names[a].empty())
    return names[a];
  return "e" + std::to_string(a);
}

Report check_cim(const Cim& a) {
  Report r;
  const int n = a.n;
  if (n <= 0) {
    r.violations.push_back({"format", {}, "carrier must be non-empty"});
    return r;
  }
  if (n > guards().max_carrier) {
    r.violations.push_back({"format", {}, "carrier exceeds bound " +
                                              std::to_string(guards().max_carrier)});
    return r;
  }
  if (static_cast<int>(a.join.size()) != n * n) {
    r.violations.push_back({"format", {}, "join table is not n*n"});
    return r;
  }
  for (int i = 0; i < n * n; ++i)
    if (a.join[i] < 0 || a.join[i] >= n) {
      r.violations.push_back({"format", {i / n, i % n}, "table entry out of range"});
      return r;
    }
  if (a.bottom < 0 || a.bottom >= n || a.top < 0 || a.top >= n) {
    r.violations.push_back({"format", {}, "bottom/top out of range"});
    return r;
  }

  for (int x = 0; x < n; ++x)
    if (a.add(x, x) != x) {
      r.violations.push_back({"idempotency", {x}, ""});
      return r;
    }
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      if (a.add(x, y) != a.add(y, x)) {
        r.violations.push_back({"commutativity", {x, y}, ""});
        return r;
      }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (a.add(a.add(x, y), z) != a.add(x, a.add(y, z))) {
          r.violations.push_back({"associativity", {x, y, z}, ""});
          return r;
        }
  for (int x = 0; x < n; ++x)
    if (a.add(x, a.bottom) != x) {
      r.violations.push_back({"unit", {x}, "x ⊕ bottom must equal x"});
      return r;
    }
  for (int x = 0; x < n; ++x)
    if (a.add(x, a.top) != a.top) {
      r.violations.push_back({"absorbing", {x}, "x ⊕ top must equal top"});
      return r;
    }
  // Binary infima. With the laws above this always succeeds on a finite
  // carrier; kept as an explicit postcondition of validation.
  for (int x = 0; x < n; ++x)
    for (int y = x; y < n; ++y) {
      Mask lower = a.down_set(x) & a.down_set(y);
      int g = a.sup(lower);
      if (!a.leq(g, x) || !a.leq(g, y)) {
        r.violations.push_back({"infimum", {x, y}, "pair has no greatest lower bound"});
        return r;
      }
    }
  return r;
}

std::vector<std::uint8_t> order_of(const Cim& a) {
  std::vector<std::uint8_t> m(static_cast<std::size_t>(a.n) * a.n, 0);
  for (int x = 0; x < a.n; ++x)
    for (int y = 0; y < a.n; ++y)
      m[static_cast<std::size_t>(x) * a.n + y] = a.leq(x, y) ? 1 : 0;
  return m;
}

std::vector<int> join_irreducibles(const Cim& a) {
  std::vector<int> out;
  for (int x = 0; x < a.n; ++x) {
    if (x == a.bottom) continue;
    bool irr = true;
    for (int u = 0; u < a.n && irr; ++u)
      for (int v = 0; v < a.n && irr; ++v)
        if (a.add(u, v) == x && u != x && v != x) irr = false;
    if (irr) out.push_back(x);
  }
  return out;
}

static bool is_ideal(const Cim& a, Mask f) {
  if (f == 0) return false;
  // x,y ∈ F ⟺ x⊕y ∈ F for every pair
  for (int x = 0; x < a.n; ++x)
    for (int y = 0; y < a.n; ++y)
      if ((has(f, x) && has(f, y)) != has(f, a.add(x, y))) return false;
  return true;
}

std::vector<Mask> enumerate_ideals_subsets(const Cim& a) {
  require_guard(a.n <= 16, "ideal enumeration", 16);
  std::vector<Mask> out;
  for (Mask f = 1; f <= full_mask(a.n); ++f)
    if (is_ideal(a, f)) out.push_back(f);
  return out;
}

IdealLattice ideal_completion(const Cim& a) {
  IdealLattice il;
  il.principal.resize(a.n);
  for (int x = 0; x < a.n; ++x) {
    Mask d = a.down_set(x);
    auto it = std::find(il.ideals.begin(), il.ideals.end(), d);
    if (it == il.ideals.end()) {
      il.principal[x] = static_cast<int>(il.ideals.size());
      il.ideals.push_back(d);
    } else {
      il.principal[x] = static_cast<int>(it - il.ideals.begin());
    }
  }
  // On small carriers verify principality exhaustively rather than by the
  // structure theorem alone.
  if (a.n <= 16) {
    auto all = enumerate_ideals_subsets(a);
    for (Mask f : all)
      if (std::find(il.ideals.begin(), il.ideals.end(), f) == il.ideals.end())
        throw ValidationError("ideal_completion: non-principal ideal found");
  }

  const int m = static_cast<int>(il.ideals.size());
  il.lattice.n = m;
  il.lattice.join.assign(static_cast<std::size_t>(m) * m, 0);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      // ideal generated by the union = ⟨ sup of the two generators ⟩
      int gi = a.sup(il.ideals[i]);
      int gj = a.sup(il.ideals[j]);
      Mask gen = a.down_set(a.add(gi, gj));
      auto it = std::find(il.ideals.begin(), il.ideals.end(), gen);
      if (it == il.ideals.end())
        throw ValidationError("ideal_completion: join of ideals escaped the family");
      il.lattice.join[static_cast<std::size_t>(i) * m + j] =
          static_cast<int>(it - il.ideals.begin());
    }
  il.lattice.bottom = il.principal[a.bottom];
  il.lattice.top = il.principal[a.top];
  for (int i = 0; i < m; ++i) {
    std::ostringstream os;
    os << "<" << a.label(a.sup(il.ideals[i])) << ">";
    il.lattice.names.push_back(os.str());
  }
  il.compact.assign(m, 1);  // finitely generated: the carrier is finite

  // Witness that a ↦ ⟨a⟩ is an isomorphism.
  std::vector<std::uint8_t> hit(m, 0);
  for (int x = 0; x < a.n; ++x) {
    if (hit[il.principal[x]])
      throw ValidationError("ideal_completion: a ↦ <a> is not injective");
    hit[il.principal[x]] = 1;
    for (int y = 0; y < a.n; ++y)
      if (il.lattice.add(il.principal[x], il.principal[y]) !=
          il.principal[a.add(x, y)])
        throw ValidationError("ideal_completion: a ↦ <a> does not preserve ⊕");
  }
  if (static_cast<int>(il.ideals.size()) != a.n)
    throw ValidationError("ideal_completion: ideal count differs from carrier");
  return il;
}

// Generic backtracking isomorphism search over the join tables.
std::optional<std::vector<int>> find_cim_iso(const Cim& a, const Cim& b) {
  if (a.n != b.n) return std::nullopt;
  const int n = a.n;
  std::vector<int> map(n, -1), used(n, 0);

  auto compatible = [&](int x, int y) {
    if ((x == a.bottom) != (y == b.bottom)) return false;
    if ((x == a.top) != (y == b.top)) return false;
    if (count(a.down_set(x)) != count(b.down_set(y))) return false;
    if (count(a.up_set(x)) != count(b.up_set(y))) return false;
    for (int u = 0; u < n; ++u) {
      if (map[u] < 0) continue;
      int j = a.add(x, u);
      if (map[j] >= 0 && map[j] != b.add(y, map[u])) return false;
    }
    return true;
  };
  std::function<bool(int)> go = [&](int x) -> bool {
    if (x == n) {
      for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
          if (map[a.add(u, v)] != b.add(map[u], map[v])) return false;
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

Cim chain_cim(int k) {
  Cim c;
  c.n = k;
  c.join.assign(static_cast<std::size_t>(k) * k, 0);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      c.join[static_cast<std::size_t>(i) * k + j] = std::max(i, j);
  c.bottom = 0;
  c.top = k - 1;
  return c;
}

Cim diamond_cim() {
  // 0 < a=1, b=2 < top=3
  Cim c;
  c.n = 4;
  c.bottom = 0;
  c.top = 3;
  c.names = {"0", "a", "b", "1"};
  auto idx = [](int x, int y) { return static_cast<std::size_t>(x) * 4 + y; };
  c.join.assign(16, 0);
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y) {
      int v;
      if (x == y) v = x;
      else if (x == 0) v = y;
      else if (y == 0) v = x;
      else v = 3;
      c.join[idx(x, y)] = v;
    }
  return c;
}

}  // namespace fixtures

}  // namespace idem
