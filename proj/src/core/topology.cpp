#include "core/topology.hpp"

#include <algorithm>
#include <functional>

namespace idem {

int Top::closed_index(Mask z) const {
  auto it = std::find(closed.begin(), closed.end(), z);
  return it == closed.end() ? -1 : static_cast<int>(it - closed.begin());
}

Mask Top::closure(Mask s) const {
  Mask best = full();
  for (Mask z : closed)
    if ((s & ~z) == 0 && count(z) <= count(best)) best = z;
  return best;
}

std::string Top::point_label(int x) const {
  if (x >= 0 && x < static_cast<int>(names.size()) && !names[x].empty())
    return names[x];
  return "p" + std::to_string(x);
}

std::string Top::set_label(Mask z) const {
  std::string s = "{";
  bool first = true;
  for (int x = 0; x < n; ++x)
    if (has(z, x)) {
      if (!first) s += " ";
      s += point_label(x);
      first = false;
    }
  return s + "}";
}

Report check_top(const Top& t) {
  Report r;
  if (t.n < 0 || t.n > guards().max_carrier) {
    r.violations.push_back({"format", {}, "point count out of range"});
    return r;
  }
  for (Mask z : t.closed)
    if ((z & ~t.full()) != 0) {
      r.violations.push_back({"format", {}, "closed set mentions unknown points"});
      return r;
    }
  for (std::size_t i = 0; i + 1 < t.closed.size(); ++i)
    if (t.closed[i] >= t.closed[i + 1]) {
      r.violations.push_back({"format", {}, "closed family must be sorted and unique"});
      return r;
    }
  if (t.closed_index(0) < 0) {
    r.violations.push_back({"closed-empty", {}, "∅ must be closed"});
    return r;
  }
  if (t.closed_index(t.full()) < 0) {
    r.violations.push_back({"closed-full", {}, "the full set must be closed"});
    return r;
  }
  for (Mask a : t.closed)
    for (Mask b : t.closed) {
      if (t.closed_index(a & b) < 0) {
        r.violations.push_back({"closed-intersection", {}, t.set_label(a) + " ∩ " + t.set_label(b)});
        return r;
      }
      if (t.closed_index(a | b) < 0) {
        r.violations.push_back({"closed-union", {}, t.set_label(a) + " ∪ " + t.set_label(b)});
        return r;
      }
    }
  return r;
}

bool is_irreducible(const Top& t, Mask z) {
  if (z == 0) return false;
  for (Mask a : t.closed) {
    if ((a & z) == z || (a & z) == 0) continue;
    Mask a2 = a & z;
    for (Mask b : t.closed) {
      Mask b2 = b & z;
      if (b2 == z) continue;
      if ((a2 | b2) == z) return false;
    }
  }
  return true;
}

std::vector<Mask> irreducible_closed(const Top& t) {
  std::vector<Mask> out;
  for (Mask z : t.closed)
    if (is_irreducible(t, z)) out.push_back(z);
  return out;
}

std::optional<int> generic_point(const Top& t, Mask z) {
  std::optional<int> g;
  for (int x = 0; x < t.n; ++x)
    if (has(z, x) && t.closure_of_point(x) == z) {
      if (g) return std::nullopt;  // not unique
      g = x;
    }
  return g;
}

bool is_t0(const Top& t) {
  for (int x = 0; x < t.n; ++x)
    for (int y = x + 1; y < t.n; ++y)
      if (t.closure_of_point(x) == t.closure_of_point(y)) return false;
  return true;
}

bool is_sober(const Top& t) {
  for (Mask z : irreducible_closed(t))
    if (!generic_point(t, z)) return false;
  return true;
}

static Top space_from_family(int npoints, std::vector<Mask> family,
                             std::vector<std::string> names) {
  std::sort(family.begin(), family.end());
  family.erase(std::unique(family.begin(), family.end()), family.end());
  Top t;
  t.n = npoints;
  t.closed = std::move(family);
  t.names = std::move(names);
  Report r = check_top(t);
  if (!r.ok()) throw ValidationError("constructed family is not a topology: " + r.summary());
  return t;
}

Soberification soberify(const Top& t) {
  Soberification s;
  s.sob_points = irreducible_closed(t);
  const int m = static_cast<int>(s.sob_points.size());
  require_carrier(m, "soberify");
  std::vector<Mask> family;
  for (Mask z : t.closed) {
    Mask v = 0;
    for (int i = 0; i < m; ++i)
      if ((s.sob_points[i] & ~z) == 0) v |= bit(i);
    family.push_back(v);
  }
  std::vector<std::string> names;
  for (int i = 0; i < m; ++i) names.push_back(t.set_label(s.sob_points[i]));
  s.sob = space_from_family(m, std::move(family), std::move(names));
  s.unit.resize(t.n);
  for (int x = 0; x < t.n; ++x) {
    Mask cx = t.closure_of_point(x);
    auto it = std::find(s.sob_points.begin(), s.sob_points.end(), cx);
    if (it == s.sob_points.end())
      throw ValidationError("point closure is not irreducible");
    s.unit[x] = static_cast<int>(it - s.sob_points.begin());
  }
  // The unit is a homeomorphism iff t was already sober.
  s.unit_is_homeo = false;
  if (is_sober(t) && m == t.n) {
    std::vector<int> seen(m, 0);
    bool bij = true;
    for (int x : s.unit) {
      if (seen[x]) bij = false;
      seen[x] = 1;
    }
    if (bij) {
      bool closed_match = t.closed.size() == s.sob.closed.size();
      for (Mask z : t.closed) {
        Mask img = 0;
        for (int x = 0; x < t.n; ++x)
          if (has(z, x)) img |= bit(s.unit[x]);
        if (s.sob.closed_index(img) < 0) closed_match = false;
      }
      s.unit_is_homeo = closed_match;
    }
  }
  return s;
}

PrimeFilterSpace prime_filter_space(const Top& t) {
  const int m = static_cast<int>(t.closed.size());
  require_guard(m <= guards().filter_base, "prime_filter_space",
                guards().filter_base);

  auto is_prime_filter = [&](Mask f) {
    if (f == 0) return false;
    // proper: must not contain ∅ (otherwise the filter is everything)
    int empty_idx = t.closed_index(0);
    if (has(f, empty_idx)) return false;
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) {
        int meet = t.closed_index(t.closed[i] & t.closed[j]);
        if ((has(f, i) && has(f, j)) != has(f, meet)) return false;
        int join = t.closed_index(t.closed[i] | t.closed[j]);
        if (!has(f, i) && !has(f, j) && has(f, join)) return false;
      }
    // closed under supersets
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j)
        if (has(f, i) && (t.closed[i] & ~t.closed[j]) == 0 && !has(f, j))
          return false;
    return true;
  };

  PrimeFilterSpace out;
  for (Mask f = 1; f <= full_mask(m); ++f)
    if (is_prime_filter(f)) out.filters.push_back(f);
  const int np = static_cast<int>(out.filters.size());
  require_carrier(np, "prime_filter_space");

  std::vector<Mask> family;
  for (int c = 0; c < m; ++c) {
    Mask v = 0;
    for (int i = 0; i < np; ++i)
      if (has(out.filters[i], c)) v |= bit(i);
    family.push_back(v);
  }
  std::vector<std::string> names;
  for (int i = 0; i < np; ++i) names.push_back("F" + std::to_string(i));
  out.space = space_from_family(np, std::move(family), std::move(names));

  out.unit.resize(t.n);
  for (int x = 0; x < t.n; ++x) {
    Mask cx = t.closure_of_point(x);
    Mask f = 0;
    for (int c = 0; c < m; ++c)
      if ((cx & ~t.closed[c]) == 0) f |= bit(c);  // closed sets containing x's closure
    auto it = std::find(out.filters.begin(), out.filters.end(), f);
    if (it == out.filters.end())
      throw ValidationError("principal filter of a point closure is not prime");
    out.unit[x] = static_cast<int>(it - out.filters.begin());
  }
  if (np == t.n) {
    Top copy = out.space;
    // relabel via unit to test homeomorphism directly
    std::vector<int> seen(np, 0);
    bool bij = true;
    for (int u : out.unit) {
      if (seen[u]) bij = false;
      seen[u] = 1;
    }
    if (bij) {
      bool ok = true;
      for (Mask z : t.closed) {
        Mask img = 0;
        for (int x = 0; x < t.n; ++x)
          if (has(z, x)) img |= bit(out.unit[x]);
        if (out.space.closed_index(img) < 0) ok = false;
      }
      // and conversely every closed set of the filter space is an image
      if (ok) {
        for (Mask w : out.space.closed) {
          Mask pre = 0;
          for (int x = 0; x < t.n; ++x)
            if (has(w, out.unit[x])) pre |= bit(x);
          if (t.closed_index(pre) < 0) ok = false;
        }
      }
      out.unit_is_homeo = ok;
    }
  }
  return out;
}

std::optional<std::vector<int>> find_homeomorphism(const Top& a, const Top& b) {
  if (a.n != b.n || a.closed.size() != b.closed.size()) return std::nullopt;
  std::vector<int> map(a.n, -1), used(b.n, 0);
  auto closed_image_ok = [&]() {
    for (Mask z : a.closed) {
      Mask img = 0;
      bool complete = true;
      for (int x = 0; x < a.n; ++x) {
        if (!has(z, x)) continue;
        if (map[x] < 0) {
          complete = false;
          break;
        }
        img |= bit(map[x]);
      }
      if (complete && b.closed_index(img) < 0) return false;
    }
    return true;
  };
  std::function<bool(int)> go = [&](int x) -> bool {
    if (x == a.n) {
      for (Mask w : b.closed) {
        Mask pre = 0;
        for (int u = 0; u < a.n; ++u)
          if (has(w, map[u])) pre |= bit(u);
        if (a.closed_index(pre) < 0) return false;
      }
      return true;
    }
    for (int y = 0; y < b.n; ++y) {
      if (used[y]) continue;
      if (count(a.closure_of_point(x)) != count(b.closure_of_point(y))) continue;
      map[x] = y;
      used[y] = 1;
      if (closed_image_ok() && go(x + 1)) return true;
      map[x] = -1;
      used[y] = 0;
    }
    return false;
  };
  if (!go(0)) return std::nullopt;
  return map;
}

Top discrete_space(int n) {
  std::vector<Mask> family;
  for (Mask z = 0; z <= full_mask(n); ++z) family.push_back(z);
  if (n == 0) family = {0};
  return space_from_family(n, std::move(family), {});
}

Top sierpinski() {
  return space_from_family(2, {0, bit(1), bit(0) | bit(1)}, {"o", "c"});
}

Top indiscrete_space(int n) {
  return space_from_family(n, {0, full_mask(n)}, {});
}

}  // namespace idem
