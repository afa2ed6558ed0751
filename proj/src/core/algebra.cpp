#include "core/algebra.hpp"

#include <algorithm>
#include <functional>

namespace idem {

std::string Ring::label(int a) const {
  if (a >= 0 && a < static_cast<int>(names.size()) && !names[a].empty()) return names[a];
  return std::to_string(a);
}

std::string Monoid::label(int a) const {
  if (a >= 0 && a < static_cast<int>(names.size()) && !names[a].empty()) return names[a];
  return "g" + std::to_string(a);
}

Report check_ring(const Ring& r) {
  Report rep;
  const int n = r.n;
  if (n <= 0 || static_cast<int>(r.add.size()) != n * n ||
      static_cast<int>(r.mul.size()) != n * n) {
    rep.violations.push_back({"format", {}, "tables must be n*n over a non-empty carrier"});
    return rep;
  }
  for (int v : r.add)
    if (v < 0 || v >= n) {
      rep.violations.push_back({"format", {}, "add entry out of range"});
      return rep;
    }
  for (int v : r.mul)
    if (v < 0 || v >= n) {
      rep.violations.push_back({"format", {}, "mul entry out of range"});
      return rep;
    }
  auto comm = [&](const std::vector<int>& t, const char* law) {
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        if (t[a * n + b] != t[b * n + a]) {
          rep.violations.push_back({law, {a, b}, ""});
          return false;
        }
    return true;
  };
  auto assoc = [&](const std::vector<int>& t, const char* law) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (t[t[a * n + b] * n + c] != t[a * n + t[b * n + c]]) {
            rep.violations.push_back({law, {a, b, c}, ""});
            return false;
          }
    return true;
  };
  if (!comm(r.add, "add-commutativity") || !assoc(r.add, "add-associativity") ||
      !comm(r.mul, "mul-commutativity") || !assoc(r.mul, "mul-associativity"))
    return rep;
  for (int a = 0; a < n; ++a)
    if (r.plus(a, r.zero) != a) {
      rep.violations.push_back({"add-unit", {a}, ""});
      return rep;
    }
  for (int a = 0; a < n; ++a) {
    bool inv = false;
    for (int b = 0; b < n && !inv; ++b)
      if (r.plus(a, b) == r.zero) inv = true;
    if (!inv) {
      rep.violations.push_back({"add-inverse", {a}, "no additive inverse"});
      return rep;
    }
  }
  for (int a = 0; a < n; ++a)
    if (r.times(a, r.one) != a) {
      rep.violations.push_back({"mul-unit", {a}, ""});
      return rep;
    }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (r.times(r.plus(a, b), c) != r.plus(r.times(a, c), r.times(b, c))) {
          rep.violations.push_back({"distributivity", {a, b, c}, ""});
          return rep;
        }
  return rep;
}

Ring zmod(int n) {
  Ring r;
  r.n = n;
  r.zero = 0;
  r.one = n > 1 ? 1 : 0;
  r.add.resize(static_cast<std::size_t>(n) * n);
  r.mul.resize(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      r.add[static_cast<std::size_t>(a) * n + b] = (a + b) % n;
      r.mul[static_cast<std::size_t>(a) * n + b] = (a * b) % n;
    }
  for (int a = 0; a < n; ++a) r.names.push_back(std::to_string(a));
  return r;
}

Report check_monoid(const Monoid& m) {
  Report rep;
  const int n = m.n;
  if (n <= 0 || static_cast<int>(m.mul.size()) != n * n) {
    rep.violations.push_back({"format", {}, "table must be n*n over a non-empty carrier"});
    return rep;
  }
  for (int v : m.mul)
    if (v < 0 || v >= n) {
      rep.violations.push_back({"format", {}, "entry out of range"});
      return rep;
    }
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (m.times(a, b) != m.times(b, a)) {
        rep.violations.push_back({"commutativity", {a, b}, ""});
        return rep;
      }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (m.times(m.times(a, b), c) != m.times(a, m.times(b, c))) {
          rep.violations.push_back({"associativity", {a, b, c}, ""});
          return rep;
        }
  for (int a = 0; a < n; ++a)
    if (m.times(a, m.one) != a) {
      rep.violations.push_back({"unit", {a}, ""});
      return rep;
    }
  return rep;
}

Monoid trivial_monoid() {
  Monoid m;
  m.n = 1;
  m.mul = {0};
  m.one = 0;
  m.names = {"1"};
  return m;
}

Monoid cyclic_group(int n) {
  Monoid m;
  m.n = n;
  m.one = 0;
  m.mul.resize(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      m.mul[static_cast<std::size_t>(a) * n + b] = (a + b) % n;
  for (int a = 0; a < n; ++a) m.names.push_back("g" + std::to_string(a));
  if (n >= 1) m.names[0] = "1";
  return m;
}

Monoid truncated_monoid() {
  Monoid m;
  m.n = 3;
  m.one = 0;
  m.names = {"1", "x", "y"};
  // x² = y, xy = y, y² = y
  m.mul = {0, 1, 2,
           1, 2, 2,
           2, 2, 2};
  return m;
}

int algebra_size(const Algebra& a) {
  return std::visit(
      [](const auto& v) -> int {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Semiring>) return v.n();
        else return v.n;
      },
      a);
}

Report check_algebra(const Algebra& a) {
  return std::visit(
      [](const auto& v) -> Report {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Ring>) return check_ring(v);
        else if constexpr (std::is_same_v<T, Monoid>) return check_monoid(v);
        else return check_semiring(v);
      },
      a);
}

std::string algebra_label(const Algebra& a, int x) {
  return std::visit([&](const auto& v) { return v.label(x); }, a);
}

std::string algebra_brief(const Algebra& a) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Ring>)
          return "ring(" + std::to_string(v.n) + ")";
        else if constexpr (std::is_same_v<T, Monoid>)
          return "monoid(" + std::to_string(v.n) + ")";
        else
          return "semiring(" + std::to_string(v.n()) + ")";
      },
      a);
}

namespace {

// Uniform table view: binary operation tables plus pinned constants.
struct TableView {
  int n = 0;
  std::vector<const std::vector<int>*> ops;
  std::vector<int> consts;
};

TableView view_of(const Algebra& a) {
  TableView t;
  std::visit(
      [&](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Ring>) {
          t.n = v.n;
          t.ops = {&v.add, &v.mul};
          t.consts = {v.zero, v.one};
        } else if constexpr (std::is_same_v<T, Monoid>) {
          t.n = v.n;
          t.ops = {&v.mul};
          t.consts = {v.one};
        } else {
          t.n = v.n();
          t.ops = {&v.add.join, &v.mul};
          t.consts = {v.add.bottom, v.add.top, v.one};
        }
      },
      a);
  return t;
}

}  // namespace

bool algebra_is_hom(const Algebra& a, const Algebra& b, std::span<const int> f) {
  if (a.index() != b.index()) return false;
  TableView ta = view_of(a), tb = view_of(b);
  if (static_cast<int>(f.size()) != ta.n) return false;
  for (int v : f)
    if (v < 0 || v >= tb.n) return false;
  for (std::size_t c = 0; c < ta.consts.size(); ++c)
    if (f[ta.consts[c]] != tb.consts[c]) return false;
  for (std::size_t o = 0; o < ta.ops.size(); ++o)
    for (int x = 0; x < ta.n; ++x)
      for (int y = 0; y < ta.n; ++y)
        if (f[(*ta.ops[o])[static_cast<std::size_t>(x) * ta.n + y]] !=
            (*tb.ops[o])[static_cast<std::size_t>(f[x]) * tb.n + f[y]])
          return false;
  return true;
}

std::optional<std::vector<int>> find_algebra_iso(const Algebra& a, const Algebra& b) {
  if (a.index() != b.index()) return std::nullopt;
  TableView ta = view_of(a), tb = view_of(b);
  if (ta.n != tb.n) return std::nullopt;
  const int n = ta.n;
  std::vector<int> map(n, -1), used(n, 0);
  auto compatible = [&](int x, int y) {
    for (std::size_t c = 0; c < ta.consts.size(); ++c)
      if ((x == ta.consts[c]) != (y == tb.consts[c])) return false;
    for (std::size_t o = 0; o < ta.ops.size(); ++o)
      for (int u = 0; u < n; ++u) {
        if (map[u] < 0) continue;
        int xu = (*ta.ops[o])[static_cast<std::size_t>(x) * n + u];
        if (map[xu] >= 0 &&
            map[xu] != (*tb.ops[o])[static_cast<std::size_t>(y) * n + map[u]])
          return false;
      }
    return true;
  };
  std::function<bool(int)> go = [&](int x) -> bool {
    if (x == n) {
      std::vector<int> f(map.begin(), map.end());
      return algebra_is_hom(a, b, f);
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

Algebra terminal_algebra(const Algebra& like) {
  return std::visit(
      [](const auto& v) -> Algebra {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Ring>) {
          Ring r;
          r.n = 1;
          r.add = {0};
          r.mul = {0};
          r.zero = r.one = 0;
          r.names = {"01"};
          return r;
        } else if constexpr (std::is_same_v<T, Monoid>) {
          return trivial_monoid();
        } else {
          return fixtures::zero_semiring();
        }
      },
      like);
}

bool algebra_is_terminal(const Algebra& a) { return algebra_size(a) == 1; }

Algebra product_subalgebra(std::span<const Algebra> factors,
                           const std::vector<std::vector<int>>& tuples) {
  if (factors.empty())
    throw DomainError("product_subalgebra needs at least a kind witness");
  const std::size_t k = factors.size();
  auto tuple_index = [&](const std::vector<int>& t) {
    auto it = std::find(tuples.begin(), tuples.end(), t);
    if (it == tuples.end())
      throw ValidationError("matching families are not closed under the operations");
    return static_cast<int>(it - tuples.begin());
  };
  const int n = static_cast<int>(tuples.size());
  require_carrier(n, "product_subalgebra");

  return std::visit(
      [&](const auto& first) -> Algebra {
        using T = std::decay_t<decltype(first)>;
        if constexpr (std::is_same_v<T, Ring>) {
          Ring out;
          out.n = n;
          out.add.resize(static_cast<std::size_t>(n) * n);
          out.mul.resize(static_cast<std::size_t>(n) * n);
          std::vector<int> zero(k), one(k);
          for (std::size_t i = 0; i < k; ++i) {
            const Ring& f = std::get<Ring>(factors[i]);
            zero[i] = f.zero;
            one[i] = f.one;
          }
          for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) {
              std::vector<int> s(k), p(k);
              for (std::size_t i = 0; i < k; ++i) {
                const Ring& f = std::get<Ring>(factors[i]);
                s[i] = f.plus(tuples[x][i], tuples[y][i]);
                p[i] = f.times(tuples[x][i], tuples[y][i]);
              }
              out.add[static_cast<std::size_t>(x) * n + y] = tuple_index(s);
              out.mul[static_cast<std::size_t>(x) * n + y] = tuple_index(p);
            }
          out.zero = tuple_index(zero);
          out.one = tuple_index(one);
          Report rep = check_ring(out);
          if (!rep.ok()) throw ValidationError("family ring law failure: " + rep.summary());
          return out;
        } else if constexpr (std::is_same_v<T, Monoid>) {
          Monoid out;
          out.n = n;
          out.mul.resize(static_cast<std::size_t>(n) * n);
          std::vector<int> one(k);
          for (std::size_t i = 0; i < k; ++i)
            one[i] = std::get<Monoid>(factors[i]).one;
          for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) {
              std::vector<int> p(k);
              for (std::size_t i = 0; i < k; ++i)
                p[i] = std::get<Monoid>(factors[i]).times(tuples[x][i], tuples[y][i]);
              out.mul[static_cast<std::size_t>(x) * n + y] = tuple_index(p);
            }
          out.one = tuple_index(one);
          Report rep = check_monoid(out);
          if (!rep.ok()) throw ValidationError("family monoid law failure: " + rep.summary());
          return out;
        } else {
          Semiring out;
          out.add.n = n;
          out.add.join.resize(static_cast<std::size_t>(n) * n);
          out.mul.resize(static_cast<std::size_t>(n) * n);
          std::vector<int> bot(k), top(k), one(k);
          for (std::size_t i = 0; i < k; ++i) {
            const Semiring& f = std::get<Semiring>(factors[i]);
            bot[i] = f.zero();
            top[i] = f.top();
            one[i] = f.one;
          }
          for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) {
              std::vector<int> s(k), p(k);
              for (std::size_t i = 0; i < k; ++i) {
                const Semiring& f = std::get<Semiring>(factors[i]);
                s[i] = f.plus(tuples[x][i], tuples[y][i]);
                p[i] = f.times(tuples[x][i], tuples[y][i]);
              }
              out.add.join[static_cast<std::size_t>(x) * n + y] = tuple_index(s);
              out.mul[static_cast<std::size_t>(x) * n + y] = tuple_index(p);
            }
          out.add.bottom = tuple_index(bot);
          out.add.top = tuple_index(top);
          out.one = tuple_index(one);
          Report rep = check_semiring(out);
          if (!rep.ok())
            throw ValidationError("family semiring law failure: " + rep.summary());
          return out;
        }
      },
      factors[0]);
}

}  // namespace idem
