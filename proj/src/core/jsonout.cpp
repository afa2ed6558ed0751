#include "core/jsonout.hpp"

#include <sstream>

namespace idem {

Json to_json(const Report& r) {
  Json j;
  j["status"] = r.ok() ? "pass" : "fail";
  Json v = Json::array();
  for (const auto& viol : r.violations) {
    Json one;
    one["law"] = viol.law;
    one["witness"] = viol.witness;
    if (!viol.detail.empty()) one["detail"] = viol.detail;
    v.push_back(one);
  }
  j["violations"] = v;
  return j;
}

Json to_json(const Semiring& s) {
  Json j;
  Json names = Json::array();
  for (int i = 0; i < s.n(); ++i) names.push_back(s.label(i));
  j["elements"] = names;
  j["zero"] = s.label(s.zero());
  j["top"] = s.label(s.top());
  j["one"] = s.label(s.one);
  j["idealic"] = s.idealic();
  j["idempotent_mult"] = s.idempotent_mult();
  Json add = Json::array(), mul = Json::array();
  for (int a = 0; a < s.n(); ++a) {
    Json ra = Json::array(), rm = Json::array();
    for (int b = 0; b < s.n(); ++b) {
      ra.push_back(s.label(s.plus(a, b)));
      rm.push_back(s.label(s.times(a, b)));
    }
    add.push_back(ra);
    mul.push_back(rm);
  }
  j["add"] = add;
  j["mul"] = mul;
  return j;
}

Json to_json(const Top& t) {
  Json j;
  Json pts = Json::array();
  for (int i = 0; i < t.n; ++i) pts.push_back(t.point_label(i));
  j["points"] = pts;
  Json closed = Json::array();
  for (Mask z : t.closed) {
    Json one = Json::array();
    for (int x = 0; x < t.n; ++x)
      if (has(z, x)) one.push_back(t.point_label(x));
    closed.push_back(one);
  }
  j["closed"] = closed;
  return j;
}

Json to_json(const Partition& p, const Semiring& base) {
  Json j;
  j["classes"] = Json::array();
  for (int c = 0; c < p.k; ++c) {
    Json members = Json::array();
    for (int x = 0; x < p.n; ++x)
      if (p.cls[x] == c) members.push_back(base.label(x));
    j["classes"].push_back(members);
  }
  j["representatives"] = Json::array();
  for (int c = 0; c < p.k; ++c) j["representatives"].push_back(base.label(p.rep[c]));
  return j;
}

Json to_json(const Spectrum& sp, const Semiring& base) {
  Json j;
  Json pts = Json::array();
  for (int p : sp.prime_elems) pts.push_back(base.label(p));
  j["primes"] = pts;
  j["space"] = to_json(sp.space);
  Json v;
  for (int a = 0; a < base.n(); ++a) {
    Json members = Json::array();
    Mask m = sp.v_mask(base, a);
    for (int i = 0; i < sp.space.n; ++i)
      if (has(m, i)) members.push_back(sp.space.point_label(i));
    v[base.label(a)] = members;
  }
  j["V"] = v;
  return j;
}

namespace {

std::string section_text(const Algebra& a) {
  if (std::holds_alternative<Ring>(a))
    return emit_block(block_of_ring("section", std::get<Ring>(a)));
  if (std::holds_alternative<Monoid>(a))
    return emit_block(block_of_monoid("section", std::get<Monoid>(a)));
  return emit_block(block_of_semiring("section", std::get<Semiring>(a)));
}

}  // namespace

Json scheme_to_json(const AScheme& x, bool with_sections, bool with_checks) {
  Json j;
  j["type"] = std::string(x.type->name());
  Json pts = Json::array();
  for (int i = 0; i < x.space.n; ++i) pts.push_back(x.space.point_label(i));
  j["points"] = pts;
  Json closed = Json::array();
  for (Mask z : x.cx.elems) {
    Json one = Json::array();
    for (int p = 0; p < x.space.n; ++p)
      if (has(z, p)) one.push_back(x.space.point_label(p));
    closed.push_back(one);
  }
  j["closed_sets"] = closed;
  if (with_sections) {
    Json sections;
    Json beta;
    for (int z = 0; z < x.cx.sr.n(); ++z) {
      std::string key = x.space.set_label(x.cx.elems[z]);
      sections[key] = section_text(x.O.sections[z]);
      Json bz = Json::array();
      for (int u = 0; u < x.section_alpha[z].a1.n(); ++u)
        bz.push_back(x.tau[z].q.quot.label(x.beta[z][u]));
      beta[key] = bz;
    }
    j["sections"] = sections;
    j["beta"] = beta;
  }
  if (with_checks) {
    Json checks;
    checks["scheme_invariants"] = to_json(verify_scheme(x));
    checks["sheaf"] = sheaf_check(x.O).ok;
    checks["sober"] = is_sober(x.space);
    j["checks"] = checks;
  }
  return j;
}

std::string to_dot(const Cim& c, const std::string& name) {
  std::ostringstream os;
  os << "digraph \"" << name << "\" {\n  rankdir=BT;\n";
  for (int i = 0; i < c.n; ++i)
    os << "  n" << i << " [label=\"" << c.label(i) << "\"];\n";
  // Hasse edges: a < b with nothing strictly between
  for (int a = 0; a < c.n; ++a)
    for (int b = 0; b < c.n; ++b) {
      if (a == b || !c.leq(a, b)) continue;
      bool covered = true;
      for (int m = 0; m < c.n && covered; ++m)
        if (m != a && m != b && c.leq(a, m) && c.leq(m, b)) covered = false;
      if (covered) os << "  n" << a << " -> n" << b << ";\n";
    }
  os << "}\n";
  return os.str();
}

std::string to_dot(const Top& t, const std::string& name) {
  std::ostringstream os;
  os << "digraph \"" << name << "\" {\n  rankdir=BT;\n";
  for (int i = 0; i < t.n; ++i)
    os << "  n" << i << " [label=\"" << t.point_label(i) << "\"];\n";
  // specialization: y ⤳ x when x ∈ closure{y}; draw the Hasse edges
  auto spec_leq = [&](int x, int y) {
    // x ≤ y in the specialization order iff x ∈ closure{y}
    return has(t.closure_of_point(y), x);
  };
  for (int a = 0; a < t.n; ++a)
    for (int b = 0; b < t.n; ++b) {
      if (a == b || !spec_leq(a, b)) continue;
      if (spec_leq(b, a)) continue;
      bool covered = true;
      for (int m = 0; m < t.n && covered; ++m)
        if (m != a && m != b && spec_leq(a, m) && spec_leq(m, b) && !spec_leq(m, a) &&
            !spec_leq(b, m))
          covered = false;
      if (covered) os << "  n" << a << " -> n" << b << " [label=\"spec\"];\n";
    }
  os << "}\n";
  return os.str();
}

}  // namespace idem
