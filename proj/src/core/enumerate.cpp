#include "core/enumerate.hpp"

#include <algorithm>
#include <numeric>

namespace idem {

namespace {

// upper-triangular strict orders compatible with the index order, i.e.
// i < j whenever element i is strictly below element j
std::vector<std::vector<std::uint8_t>> labeled_posets(int n) {
  std::vector<std::vector<std::uint8_t>> out;
  std::vector<std::pair<int, int>> slots;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) slots.emplace_back(i, j);
  const int k = static_cast<int>(slots.size());
  for (Mask sel = 0; sel <= full_mask(k); ++sel) {
    std::vector<std::uint8_t> lt(static_cast<std::size_t>(n) * n, 0);
    for (int s = 0; s < k; ++s)
      if (has(sel, s)) lt[static_cast<std::size_t>(slots[s].first) * n + slots[s].second] = 1;
    bool transitive = true;
    for (int a = 0; a < n && transitive; ++a)
      for (int b = 0; b < n && transitive; ++b)
        for (int c = 0; c < n && transitive; ++c)
          if (lt[static_cast<std::size_t>(a) * n + b] &&
              lt[static_cast<std::size_t>(b) * n + c] &&
              !lt[static_cast<std::size_t>(a) * n + c])
            transitive = false;
    if (transitive) out.push_back(std::move(lt));
    if (k == 0) break;
  }
  if (n == 0) out.push_back({});
  return out;
}

std::vector<std::uint8_t> relabel(const std::vector<std::uint8_t>& lt, int n,
                                  const std::vector<int>& perm) {
  std::vector<std::uint8_t> out(lt.size(), 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      out[static_cast<std::size_t>(perm[a]) * n + perm[b]] =
          lt[static_cast<std::size_t>(a) * n + b];
  return out;
}

std::vector<std::uint8_t> canonical_form(const std::vector<std::uint8_t>& lt, int n) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::uint8_t> best = relabel(lt, n, perm);
  while (std::next_permutation(perm.begin(), perm.end())) {
    auto cand = relabel(lt, n, perm);
    if (cand < best) best = cand;
  }
  return best;
}

std::vector<std::vector<std::uint8_t>> unlabeled_posets(int n) {
  require_guard(n <= 5, "enumerate_posets", 5);
  std::vector<std::vector<std::uint8_t>> canon;
  for (const auto& lt : labeled_posets(n)) {
    auto c = canonical_form(lt, n);
    if (std::find(canon.begin(), canon.end(), c) == canon.end())
      canon.push_back(std::move(c));
  }
  std::sort(canon.begin(), canon.end());
  return canon;
}

Top poset_to_space(const std::vector<std::uint8_t>& lt, int n) {
  // closed sets are the down-sets of the specialization order
  auto leq = [&](int a, int b) {
    return a == b || lt[static_cast<std::size_t>(a) * n + b];
  };
  std::vector<Mask> family;
  for (Mask s = 0; s <= full_mask(n); ++s) {
    bool down = true;
    for (int a = 0; a < n && down; ++a)
      for (int b = 0; b < n && down; ++b)
        if (has(s, b) && leq(a, b) && !has(s, a)) down = false;
    if (down) family.push_back(s);
    if (n == 0) break;
  }
  Top t;
  t.n = n;
  t.closed = family;
  Report r = check_top(t);
  if (!r.ok()) throw ValidationError("down-set family is not a topology");
  return t;
}

}  // namespace

std::vector<Top> enumerate_posets(int n) {
  std::vector<Top> out;
  for (const auto& lt : unlabeled_posets(n)) out.push_back(poset_to_space(lt, n));
  return out;
}

std::size_t poset_count(int n) { return unlabeled_posets(n).size(); }

std::size_t poset_count_naive(int n) {
  require_guard(n <= 3, "poset_count_naive", 3);
  std::vector<std::vector<std::uint8_t>> canon;
  const int cells = n * n;
  for (Mask sel = 0; sel <= full_mask(cells); ++sel) {
    std::vector<std::uint8_t> le(cells, 0);
    for (int c = 0; c < cells; ++c)
      if (has(sel, c)) le[c] = 1;
    bool ok = true;
    for (int a = 0; a < n && ok; ++a)
      if (!le[static_cast<std::size_t>(a) * n + a]) ok = false;
    for (int a = 0; a < n && ok; ++a)
      for (int b = 0; b < n && ok; ++b) {
        if (a != b && le[static_cast<std::size_t>(a) * n + b] &&
            le[static_cast<std::size_t>(b) * n + a])
          ok = false;
        for (int c = 0; c < n && ok; ++c)
          if (le[static_cast<std::size_t>(a) * n + b] &&
              le[static_cast<std::size_t>(b) * n + c] &&
              !le[static_cast<std::size_t>(a) * n + c])
            ok = false;
      }
    if (!ok) continue;
    // strict part, canonicalized
    std::vector<std::uint8_t> lt(cells, 0);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (a != b) lt[static_cast<std::size_t>(a) * n + b] = le[static_cast<std::size_t>(a) * n + b];
    auto c = canonical_form(lt, n);
    if (std::find(canon.begin(), canon.end(), c) == canon.end())
      canon.push_back(std::move(c));
    if (cells == 0) break;
  }
  if (n == 0) return 1;
  return canon.size();
}

std::vector<Cim> enumerate_lattices(int n) {
  std::vector<Cim> out;
  for (const auto& lt : unlabeled_posets(n)) {
    auto leq = [&](int a, int b) {
      return a == b || lt[static_cast<std::size_t>(a) * n + b] != 0;
    };
    // joins must exist: least upper bounds for every pair
    Cim c;
    c.n = n;
    c.join.assign(static_cast<std::size_t>(n) * n, -1);
    bool is_lattice = n > 0;
    for (int a = 0; a < n && is_lattice; ++a)
      for (int b = 0; b < n && is_lattice; ++b) {
        int join = -1;
        for (int u = 0; u < n; ++u) {
          if (!leq(a, u) || !leq(b, u)) continue;
          if (join < 0 || leq(u, join)) join = u;
        }
        if (join < 0) {
          is_lattice = false;
          break;
        }
        // least: every upper bound lies above it
        for (int u = 0; u < n; ++u)
          if (leq(a, u) && leq(b, u) && !leq(join, u)) is_lattice = false;
        c.join[static_cast<std::size_t>(a) * n + b] = join;
      }
    if (!is_lattice) continue;
    int bottom = -1, top = -1;
    for (int x = 0; x < n; ++x) {
      bool least = true, greatest = true;
      for (int y = 0; y < n; ++y) {
        if (!leq(x, y)) least = false;
        if (!leq(y, x)) greatest = false;
      }
      if (least) bottom = x;
      if (greatest) top = x;
    }
    if (bottom < 0 || top < 0) continue;
    c.bottom = bottom;
    c.top = top;
    if (check_cim(c).ok()) out.push_back(std::move(c));
  }
  return out;
}

namespace {

std::vector<int> semiring_key(const Semiring& s, const std::vector<int>& perm) {
  const int n = s.n();
  std::vector<int> inv(n);
  for (int i = 0; i < n; ++i) inv[perm[i]] = i;
  std::vector<int> key;
  key.reserve(2 * n * n + 1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      key.push_back(perm[s.plus(inv[a], inv[b])]);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      key.push_back(perm[s.times(inv[a], inv[b])]);
  key.push_back(perm[s.one]);
  return key;
}

std::vector<int> semiring_canonical(const Semiring& s) {
  std::vector<int> perm(s.n());
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<int> best = semiring_key(s, perm);
  while (std::next_permutation(perm.begin(), perm.end())) {
    auto cand = semiring_key(s, perm);
    if (cand < best) best = cand;
  }
  return best;
}

}  // namespace

std::vector<Semiring> enumerate_semirings(int n) {
  require_guard(n <= 4, "enumerate_semirings", 4);
  std::vector<Semiring> out;
  std::vector<std::vector<int>> seen;
  for (const Cim& lattice : enumerate_lattices(n)) {
    // fill the multiplication table: commutative, associative, unital,
    // zero-absorbing, distributive over the lattice join
    std::vector<std::pair<int, int>> cells;
    for (int a = 0; a < n; ++a)
      for (int b = a; b < n; ++b) cells.emplace_back(a, b);
    for (int one = 0; one < n; ++one) {
      Semiring s;
      s.add = lattice;
      s.one = one;
      s.mul.assign(static_cast<std::size_t>(n) * n, -1);
      auto set = [&](int a, int b, int v) {
        s.mul[static_cast<std::size_t>(a) * n + b] = v;
        s.mul[static_cast<std::size_t>(b) * n + a] = v;
      };
      auto get = [&](int a, int b) { return s.mul[static_cast<std::size_t>(a) * n + b]; };
      std::function<void(std::size_t)> fill = [&](std::size_t ci) {
        if (ci == cells.size()) {
          Semiring cand = s;
          if (!check_semiring(cand).ok()) return;
          auto key = semiring_canonical(cand);
          if (std::find(seen.begin(), seen.end(), key) == seen.end()) {
            seen.push_back(key);
            out.push_back(cand);
          }
          return;
        }
        auto [a, b] = cells[ci];
        if (a == lattice.bottom || b == lattice.bottom) {
          set(a, b, lattice.bottom);
          fill(ci + 1);
          s.mul[static_cast<std::size_t>(a) * n + b] = -1;
          s.mul[static_cast<std::size_t>(b) * n + a] = -1;
          return;
        }
        if (a == one || b == one) {
          set(a, b, a == one ? b : a);
          fill(ci + 1);
          s.mul[static_cast<std::size_t>(a) * n + b] = -1;
          s.mul[static_cast<std::size_t>(b) * n + a] = -1;
          return;
        }
        for (int v = 0; v < n; ++v) {
          set(a, b, v);
          fill(ci + 1);
        }
        s.mul[static_cast<std::size_t>(a) * n + b] = -1;
        s.mul[static_cast<std::size_t>(b) * n + a] = -1;
        (void)get;
      };
      fill(0);
    }
  }
  return out;
}

}  // namespace idem
