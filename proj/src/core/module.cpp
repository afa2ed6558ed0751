#include "core/module.hpp"

#include <algorithm>
#include <functional>

namespace idem {

Report check_module(const Module& m) {
  Report r = check_cim(m.carrier);
  if (!r.ok()) return r;
  const int nr = m.ring.n(), nm = m.m();
  if (static_cast<int>(m.action.size()) != nr * nm) {
    r.violations.push_back({"format", {}, "action table is not |R|×|M|"});
    return r;
  }
  for (int v : m.action)
    if (v < 0 || v >= nm) {
      r.violations.push_back({"format", {}, "action entry out of range"});
      return r;
    }
  for (int x = 0; x < nm; ++x)
    if (m.act(m.ring.one, x) != x) {
      r.violations.push_back({"action-unit", {x}, "1·x must equal x"});
      return r;
    }
  for (int x = 0; x < nm; ++x)
    if (m.act(m.ring.zero(), x) != m.zero()) {
      r.violations.push_back({"action-zero-scalar", {x}, "0·x must equal 0"});
      return r;
    }
  for (int a = 0; a < nr; ++a)
    if (m.act(a, m.zero()) != m.zero()) {
      r.violations.push_back({"action-zero-element", {a}, "a·0 must equal 0"});
      return r;
    }
  for (int a = 0; a < nr; ++a)
    for (int x = 0; x < nm; ++x)
      for (int y = 0; y < nm; ++y)
        if (m.act(a, m.plus(x, y)) != m.plus(m.act(a, x), m.act(a, y))) {
          r.violations.push_back({"action-distributivity-left", {a, x, y}, ""});
          return r;
        }
  for (int a = 0; a < nr; ++a)
    for (int b = 0; b < nr; ++b)
      for (int x = 0; x < nm; ++x) {
        if (m.act(m.ring.plus(a, b), x) != m.plus(m.act(a, x), m.act(b, x))) {
          r.violations.push_back({"action-distributivity-right", {a, b, x}, ""});
          return r;
        }
        if (m.act(m.ring.times(a, b), x) != m.act(a, m.act(b, x))) {
          r.violations.push_back({"action-associativity", {a, b, x}, ""});
          return r;
        }
      }
  return r;
}

bool is_module_map(const Module& m, const Module& n, std::span<const int> f,
                   MapKind kind) {
  if (static_cast<int>(f.size()) != m.m()) return false;
  if (f[m.zero()] != n.zero()) return false;
  for (int x = 0; x < m.m(); ++x)
    for (int y = 0; y < m.m(); ++y)
      if (f[m.plus(x, y)] != n.plus(f[x], f[y])) return false;
  for (int a = 0; a < m.ring.n(); ++a)
    for (int x = 0; x < m.m(); ++x)
      if (f[m.act(a, x)] != n.act(a, f[x])) return false;
  if (kind == MapKind::TopPreserving && f[m.carrier.top] != n.carrier.top)
    return false;
  return true;
}

std::vector<std::vector<int>> module_maps(const Module& m, const Module& n,
                                          MapKind kind) {
  const int nm = m.m();
  std::vector<int> f(nm, -1);
  std::vector<std::vector<int>> out;
  auto consistent = [&](int upto) {
    for (int x = 0; x <= upto; ++x)
      for (int y = 0; y <= upto; ++y) {
        int s = m.plus(x, y);
        if (s <= upto && f[s] != n.plus(f[x], f[y])) return false;
      }
    for (int a = 0; a < m.ring.n(); ++a)
      for (int x = 0; x <= upto; ++x) {
        int ax = m.act(a, x);
        if (ax <= upto && f[ax] != n.act(a, f[x])) return false;
      }
    return true;
  };
  std::function<void(int)> go = [&](int x) {
    if (x == nm) {
      if (is_module_map(m, n, f, kind)) out.push_back(f);
      return;
    }
    for (int y = 0; y < n.m(); ++y) {
      if (x == m.zero() && y != n.zero()) continue;
      f[x] = y;
      if (consistent(x)) go(x + 1);
      f[x] = -1;
    }
  };
  go(0);
  return out;
}

HomModule hom_module(const Module& m, const Module& n, MapKind kind) {
  HomModule h;
  h.maps = module_maps(m, n, kind);
  const int k = static_cast<int>(h.maps.size());
  require_carrier(k, "hom_module");
  auto index_of = [&](const std::vector<int>& f) {
    auto it = std::find(h.maps.begin(), h.maps.end(), f);
    if (it == h.maps.end())
      throw ValidationError("hom module operation left the map set");
    return static_cast<int>(it - h.maps.begin());
  };
  h.mod.ring = m.ring;
  h.mod.carrier.n = k;
  h.mod.carrier.join.assign(static_cast<std::size_t>(k) * k, 0);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      std::vector<int> sum(m.m());
      for (int x = 0; x < m.m(); ++x) sum[x] = n.plus(h.maps[i][x], h.maps[j][x]);
      h.mod.carrier.join[static_cast<std::size_t>(i) * k + j] = index_of(sum);
    }
  std::vector<int> zero_map(m.m(), n.zero());
  h.mod.carrier.bottom = index_of(zero_map);
  {
    std::vector<int> top(m.m(), n.zero());
    for (const auto& f : h.maps)
      for (int x = 0; x < m.m(); ++x) top[x] = n.plus(top[x], f[x]);
    h.mod.carrier.top = index_of(top);
  }
  h.mod.action.assign(static_cast<std::size_t>(m.ring.n()) * k, 0);
  for (int a = 0; a < m.ring.n(); ++a)
    for (int i = 0; i < k; ++i) {
      std::vector<int> af(m.m());
      for (int x = 0; x < m.m(); ++x) af[x] = n.act(a, h.maps[i][x]);
      h.mod.action[static_cast<std::size_t>(a) * k + i] = index_of(af);
    }
  Report r = check_module(h.mod);
  if (!r.ok()) throw ValidationError("hom module law failure: " + r.summary());
  return h;
}

Mask tensor_filter_closure(const Module& m, const Module& n, Mask seed) {
  const int nm = m.m(), nn = n.m();
  auto cell = [&](int x, int y) { return x * nn + y; };
  Mask f = seed;
  // every filter contains {0}×N and M×{0} (empty-sum instances)
  for (int y = 0; y < nn; ++y) f |= bit(cell(m.zero(), y));
  for (int x = 0; x < nm; ++x) f |= bit(cell(x, n.zero()));
  bool changed = true;
  while (changed) {
    changed = false;
    // slices must be ideals: down-closed and sum-closed in each coordinate
    for (int y = 0; y < nn; ++y) {
      Mask xs = 0;
      for (int x = 0; x < nm; ++x)
        if (has(f, cell(x, y))) xs |= bit(x);
      for (int x1 = 0; x1 < nm; ++x1) {
        if (!has(xs, x1)) continue;
        for (int x2 = 0; x2 < nm; ++x2) {
          if (has(xs, x2) && !has(f, cell(m.plus(x1, x2), y))) {
            f |= bit(cell(m.plus(x1, x2), y));
            changed = true;
          }
          if (m.leq(x2, x1) && !has(f, cell(x2, y))) {
            f |= bit(cell(x2, y));
            changed = true;
          }
        }
      }
    }
    for (int x = 0; x < nm; ++x) {
      Mask ys = 0;
      for (int y = 0; y < nn; ++y)
        if (has(f, cell(x, y))) ys |= bit(y);
      for (int y1 = 0; y1 < nn; ++y1) {
        if (!has(ys, y1)) continue;
        for (int y2 = 0; y2 < nn; ++y2) {
          if (has(ys, y2) && !has(f, cell(x, n.plus(y1, y2)))) {
            f |= bit(cell(x, n.plus(y1, y2)));
            changed = true;
          }
          if (n.leq(y2, y1) && !has(f, cell(x, y2))) {
            f |= bit(cell(x, y2));
            changed = true;
          }
        }
      }
    }
    // (rx, y) ∈ F ⟺ (x, ry) ∈ F
    for (int r = 0; r < m.ring.n(); ++r)
      for (int x = 0; x < nm; ++x)
        for (int y = 0; y < nn; ++y) {
          bool left = has(f, cell(m.act(r, x), y));
          bool right = has(f, cell(x, n.act(r, y)));
          if (left && !right) {
            f |= bit(cell(x, n.act(r, y)));
            changed = true;
          } else if (right && !left) {
            f |= bit(cell(m.act(r, x), y));
            changed = true;
          }
        }
  }
  return f;
}

static bool tensor_filter_closed(const Module& m, const Module& n, Mask f) {
  return tensor_filter_closure(m, n, f) == f;
}

std::vector<Mask> enumerate_tensor_filters_brute(const Module& m, const Module& n) {
  const int cells = m.m() * n.m();
  require_guard(cells <= 12, "tensor filter brute force", 12);
  std::vector<Mask> out;
  for (Mask f = 0; f <= full_mask(cells); ++f)
    if (f != 0 && tensor_filter_closed(m, n, f)) out.push_back(f);
  return out;
}

Tensor tensor(const Module& m, const Module& n) {
  if (m.ring.add.join != n.ring.add.join || m.ring.mul != n.ring.mul ||
      m.ring.one != n.ring.one)
    throw DomainError("tensor factors live over different rings");
  const int cells = m.m() * n.m();
  require_guard(cells <= guards().tensor_pairs, "tensor", guards().tensor_pairs);

  Tensor t;
  const int nn = n.m();
  // principal filters and the bottom
  Mask bottom = tensor_filter_closure(m, n, 0);
  std::vector<Mask> filters{bottom};
  t.pure.assign(cells, -1);
  for (int x = 0; x < m.m(); ++x)
    for (int y = 0; y < nn; ++y) {
      Mask p = tensor_filter_closure(m, n, bit(x * nn + y));
      auto it = std::find(filters.begin(), filters.end(), p);
      if (it == filters.end()) {
        filters.push_back(p);
        t.pure[x * nn + y] = static_cast<int>(filters.size() - 1);
      } else {
        t.pure[x * nn + y] = static_cast<int>(it - filters.begin());
      }
    }
  // close under pairwise joins; every filter is a join of principal ones
  for (std::size_t i = 0; i < filters.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) {
      Mask join = tensor_filter_closure(m, n, filters[i] | filters[j]);
      if (std::find(filters.begin(), filters.end(), join) == filters.end())
        filters.push_back(join);
    }
  std::sort(filters.begin(), filters.end(),
            [](Mask a, Mask b) { return count(a) < count(b) || (count(a) == count(b) && a < b); });
  t.filters = filters;
  const int k = static_cast<int>(filters.size());
  require_carrier(k, "tensor");
  auto index_of = [&](Mask f) {
    auto it = std::find(t.filters.begin(), t.filters.end(), f);
    if (it == t.filters.end())
      throw ValidationError("tensor operation produced an unknown filter");
    return static_cast<int>(it - t.filters.begin());
  };
  for (int c = 0; c < cells; ++c) t.pure[c] = index_of(tensor_filter_closure(m, n, bit(c)));

  t.mod.ring = m.ring;
  t.mod.carrier.n = k;
  t.mod.carrier.join.assign(static_cast<std::size_t>(k) * k, 0);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      t.mod.carrier.join[static_cast<std::size_t>(i) * k + j] =
          index_of(tensor_filter_closure(m, n, t.filters[i] | t.filters[j]));
  t.mod.carrier.bottom = index_of(bottom);
  t.mod.carrier.top = index_of(full_mask(cells));
  t.mod.action.assign(static_cast<std::size_t>(m.ring.n()) * k, 0);
  for (int r = 0; r < m.ring.n(); ++r)
    for (int i = 0; i < k; ++i) {
      Mask scaled = 0;
      for (int x = 0; x < m.m(); ++x)
        for (int y = 0; y < nn; ++y)
          if (has(t.filters[i], x * nn + y)) scaled |= bit(m.act(r, x) * nn + y);
      t.mod.action[static_cast<std::size_t>(r) * k + i] =
          index_of(tensor_filter_closure(m, n, scaled));
    }
  Report rep = check_module(t.mod);
  if (!rep.ok()) throw ValidationError("tensor module law failure: " + rep.summary());

  // cross-check against brute force on small grids
  if (cells <= 12) {
    auto brute = enumerate_tensor_filters_brute(m, n);
    std::vector<Mask> mine = t.filters;
    std::sort(mine.begin(), mine.end());
    std::sort(brute.begin(), brute.end());
    if (mine != brute)
      throw ValidationError("tensor filters disagree with the subset enumeration");
  }
  return t;
}

AdjunctionWitness tensor_hom_adjunction_check(const Module& m, const Module& n,
                                              const Module& p) {
  AdjunctionWitness w;
  Tensor t = tensor(m, n);
  auto homs_tensor = module_maps(t.mod, p);
  HomModule hom_np = hom_module(n, p);
  auto homs_curried = module_maps(m, hom_np.mod);
  w.homs_tensor = homs_tensor.size();
  w.homs_curried = homs_curried.size();

  const int nn = n.m();
  // transpose: f ↦ [x ↦ [y ↦ f(x⊗y)]]
  auto transpose = [&](const std::vector<int>& f) -> std::optional<std::vector<int>> {
    std::vector<int> g(m.m());
    for (int x = 0; x < m.m(); ++x) {
      std::vector<int> fx(nn);
      for (int y = 0; y < nn; ++y) fx[y] = f[t.pure[x * nn + y]];
      auto it = std::find(hom_np.maps.begin(), hom_np.maps.end(), fx);
      if (it == hom_np.maps.end()) return std::nullopt;
      g[x] = static_cast<int>(it - hom_np.maps.begin());
    }
    return g;
  };
  // untranspose: g ↦ [F ↦ ⊕_{(x,y)∈F} g(x)(y)]
  auto untranspose = [&](const std::vector<int>& g) {
    std::vector<int> f(t.mod.m());
    for (int i = 0; i < t.mod.m(); ++i) {
      int acc = p.zero();
      for (int x = 0; x < m.m(); ++x)
        for (int y = 0; y < nn; ++y)
          if (has(t.filters[i], x * nn + y))
            acc = p.plus(acc, hom_np.maps[g[x]][y]);
      f[i] = acc;
    }
    return f;
  };

  for (const auto& f : homs_tensor) {
    auto g = transpose(f);
    if (!g) {
      w.failure = "transpose left the map set";
      return w;
    }
    if (!is_module_map(m, hom_np.mod, *g)) {
      w.failure = "transpose is not a module map";
      return w;
    }
    if (untranspose(*g) != f) {
      w.failure = "round trip tensor → curried → tensor is not the identity";
      return w;
    }
  }
  for (const auto& g : homs_curried) {
    auto f = untranspose(g);
    if (!is_module_map(t.mod, p, f)) {
      w.failure = "untranspose is not a module map";
      return w;
    }
    auto g2 = transpose(f);
    if (!g2 || *g2 != g) {
      w.failure = "round trip curried → tensor → curried is not the identity";
      return w;
    }
  }
  w.ok = w.homs_tensor == w.homs_curried;
  if (!w.ok) w.failure = "hom sets have different sizes";
  return w;
}

Module free_module(const Semiring& r, int k) {
  double size = 1;
  for (int i = 0; i < k; ++i) size *= r.n();
  require_guard(size <= guards().free_module, "free_module", guards().free_module);
  const int total = static_cast<int>(size);
  require_carrier(total, "free_module");
  Module f;
  f.ring = r;
  f.carrier.n = total;
  auto digits = [&](int idx) {
    std::vector<int> d(k);
    for (int i = k - 1; i >= 0; --i) {
      d[i] = idx % r.n();
      idx /= r.n();
    }
    return d;
  };
  auto index = [&](const std::vector<int>& d) {
    int idx = 0;
    for (int i = 0; i < k; ++i) idx = idx * r.n() + d[i];
    return idx;
  };
  f.carrier.join.assign(static_cast<std::size_t>(total) * total, 0);
  for (int i = 0; i < total; ++i)
    for (int j = 0; j < total; ++j) {
      auto a = digits(i), b = digits(j);
      std::vector<int> c(k);
      for (int t = 0; t < k; ++t) c[t] = r.plus(a[t], b[t]);
      f.carrier.join[static_cast<std::size_t>(i) * total + j] = index(c);
    }
  {
    std::vector<int> bot(k, r.zero()), top(k, r.top());
    f.carrier.bottom = index(bot);
    f.carrier.top = index(top);
  }
  f.action.assign(static_cast<std::size_t>(r.n()) * total, 0);
  for (int a = 0; a < r.n(); ++a)
    for (int i = 0; i < total; ++i) {
      auto d = digits(i);
      for (int t = 0; t < k; ++t) d[t] = r.times(a, d[t]);
      f.action[static_cast<std::size_t>(a) * total + i] = index(d);
    }
  Report rep = check_module(f);
  if (!rep.ok()) throw ValidationError("free module law failure: " + rep.summary());
  return f;
}

ScalarExtension scalar_extension(const SemiringHom& h, const Module& m) {
  Report hr = check_hom(h);
  if (!hr.ok()) throw DomainError("scalar extension needs a valid homomorphism");
  // A as an R-module through h
  Module a_as_r;
  a_as_r.ring = h.src;
  a_as_r.carrier = h.dst.add;
  a_as_r.action.assign(static_cast<std::size_t>(h.src.n()) * h.dst.n(), 0);
  for (int r = 0; r < h.src.n(); ++r)
    for (int x = 0; x < h.dst.n(); ++x)
      a_as_r.action[static_cast<std::size_t>(r) * h.dst.n() + x] =
          h.dst.times(h(r), x);
  Report ar = check_module(a_as_r);
  if (!ar.ok()) throw ValidationError("restriction of scalars failed: " + ar.summary());

  ScalarExtension se;
  se.tens = tensor(a_as_r, m);
  const int k = se.tens.mod.m();
  const int nn = m.m();
  se.extended.ring = h.dst;
  se.extended.carrier = se.tens.mod.carrier;
  se.extended.action.assign(static_cast<std::size_t>(h.dst.n()) * k, 0);
  auto index_of = [&](Mask f) {
    auto it = std::find(se.tens.filters.begin(), se.tens.filters.end(), f);
    if (it == se.tens.filters.end())
      throw ValidationError("scalar extension produced an unknown filter");
    return static_cast<int>(it - se.tens.filters.begin());
  };
  for (int a = 0; a < h.dst.n(); ++a)
    for (int i = 0; i < k; ++i) {
      Mask scaled = 0;
      for (int b = 0; b < h.dst.n(); ++b)
        for (int y = 0; y < nn; ++y)
          if (has(se.tens.filters[i], b * nn + y))
            scaled |= bit(h.dst.times(a, b) * nn + y);
      se.extended.action[static_cast<std::size_t>(a) * k + i] =
          index_of(tensor_filter_closure(a_as_r, m, scaled));
    }
  Report er = check_module(se.extended);
  if (!er.ok()) throw ValidationError("scalar extension law failure: " + er.summary());
  se.unit.resize(nn);
  for (int x = 0; x < nn; ++x) se.unit[x] = se.tens.pure[h.dst.one * nn + x];
  return se;
}

Coproduct module_coproduct(const Semiring& r, std::span<const Module> factors) {
  Coproduct c;
  if (factors.empty()) {
    c.mod = free_module(r, 0);
    return c;
  }
  double size = 1;
  for (const Module& f : factors) size *= f.m();
  require_guard(size <= guards().free_module, "module_coproduct", guards().free_module);
  const int total = static_cast<int>(size);
  require_carrier(total, "module_coproduct");
  const int k = static_cast<int>(factors.size());
  auto digits = [&](int idx) {
    std::vector<int> d(k);
    for (int i = k - 1; i >= 0; --i) {
      d[i] = idx % factors[i].m();
      idx /= factors[i].m();
    }
    return d;
  };
  auto index = [&](const std::vector<int>& d) {
    int idx = 0;
    for (int i = 0; i < k; ++i) idx = idx * factors[i].m() + d[i];
    return idx;
  };
  c.mod.ring = r;
  c.mod.carrier.n = total;
  c.mod.carrier.join.assign(static_cast<std::size_t>(total) * total, 0);
  for (int i = 0; i < total; ++i)
    for (int j = 0; j < total; ++j) {
      auto a = digits(i), b = digits(j);
      std::vector<int> s(k);
      for (int t = 0; t < k; ++t) s[t] = factors[t].plus(a[t], b[t]);
      c.mod.carrier.join[static_cast<std::size_t>(i) * total + j] = index(s);
    }
  {
    std::vector<int> bot(k), top(k);
    for (int t = 0; t < k; ++t) {
      bot[t] = factors[t].zero();
      top[t] = factors[t].carrier.top;
    }
    c.mod.carrier.bottom = index(bot);
    c.mod.carrier.top = index(top);
  }
  c.mod.action.assign(static_cast<std::size_t>(r.n()) * total, 0);
  for (int a = 0; a < r.n(); ++a)
    for (int i = 0; i < total; ++i) {
      auto d = digits(i);
      for (int t = 0; t < k; ++t) d[t] = factors[t].act(a, d[t]);
      c.mod.action[static_cast<std::size_t>(a) * total + i] = index(d);
    }
  Report rep = check_module(c.mod);
  if (!rep.ok()) throw ValidationError("coproduct law failure: " + rep.summary());
  for (int t = 0; t < k; ++t) {
    std::vector<int> inj(factors[t].m());
    for (int x = 0; x < factors[t].m(); ++x) {
      std::vector<int> d(k);
      for (int u = 0; u < k; ++u) d[u] = factors[u].zero();
      d[t] = x;
      inj[x] = index(d);
    }
    if (!is_module_map(factors[t], c.mod, inj))
      throw ValidationError("coproduct injection is not a module map");
    c.inject.push_back(std::move(inj));
  }
  return c;
}

std::optional<std::vector<int>> find_module_iso(const Module& a, const Module& b) {
  if (a.m() != b.m() || a.ring.n() != b.ring.n()) return std::nullopt;
  const int n = a.m();
  std::vector<int> map(n, -1), used(n, 0);
  auto compatible = [&](int x, int y) {
    if ((x == a.zero()) != (y == b.zero())) return false;
    if ((x == a.carrier.top) != (y == b.carrier.top)) return false;
    if (count(a.carrier.down_set(x)) != count(b.carrier.down_set(y))) return false;
    for (int u = 0; u < n; ++u) {
      if (map[u] < 0) continue;
      int j = a.plus(x, u);
      if (map[j] >= 0 && map[j] != b.plus(y, map[u])) return false;
    }
    for (int r = 0; r < a.ring.n(); ++r) {
      int ax = a.act(r, x);
      if (map[ax] >= 0 && map[ax] != b.act(r, y)) return false;
    }
    return true;
  };
  std::function<bool(int)> go = [&](int x) -> bool {
    if (x == n) {
      for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
          if (map[a.plus(u, v)] != b.plus(map[u], map[v])) return false;
      for (int r = 0; r < a.ring.n(); ++r)
        for (int u = 0; u < n; ++u)
          if (map[a.act(r, u)] != b.act(r, map[u])) return false;
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

Module f1_module(const Cim& c) {
  Module m;
  m.ring = fixtures::f1();
  m.carrier = c;
  m.action.assign(static_cast<std::size_t>(2) * c.n, 0);
  for (int x = 0; x < c.n; ++x) {
    m.action[x] = c.bottom;      // 0·x = 0
    m.action[c.n + x] = x;       // 1·x = x
  }
  Report r = check_module(m);
  if (!r.ok()) throw ValidationError("carrier is not a module over the two-element semiring");
  return m;
}

Module self_module(const Semiring& r) {
  Module m;
  m.ring = r;
  m.carrier = r.add;
  m.action = r.mul;
  Report rep = check_module(m);
  if (!rep.ok()) throw ValidationError("semiring is not a module over itself: " + rep.summary());
  return m;
}

}  // namespace idem
