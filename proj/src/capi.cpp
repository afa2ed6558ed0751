#include "idemspec.h"

#include <cstring>
#include <sstream>

#include "core/enumerate.hpp"
#include "core/jsonout.hpp"
#include "core/module.hpp"
#include "core/scheme.hpp"
#include "core/verify.hpp"

using namespace idem;

struct ids_document {
  Document doc;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

ids_status fail(ids_status code, const std::string& msg) {
  g_last_error = msg;
  return code;
}

template <typename F>
ids_status guarded(F&& f) {
  try {
    return f();
  } catch (const ParseError& e) {
    return fail(IDS_ERR_USAGE, e.what());
  } catch (const GuardError& e) {
    return fail(IDS_ERR_USAGE, e.what());
  } catch (const DomainError& e) {
    return fail(IDS_ERR_USAGE, e.what());
  } catch (const ValidationError& e) {
    return fail(IDS_ERR_VIOLATION, e.what());
  } catch (const std::exception& e) {
    return fail(IDS_ERR_VIOLATION, e.what());
  }
}

int element_by_name(const Semiring& s, const std::string& name) {
  for (int i = 0; i < s.n(); ++i)
    if (s.label(i) == name) return i;
  bool digits = !name.empty() && name.find_first_not_of("0123456789") == std::string::npos;
  if (digits) {
    int v = std::stoi(name);
    if (v >= 0 && v < s.n()) return v;
  }
  throw DomainError("no element named '" + name + "'");
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == sep) {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

std::string describe_localization(const Semiring& base, const Localization& l) {
  std::ostringstream os;
  os << emit_block(block_of_semiring("localized", l.q.quot)) << "\n";
  Json j;
  j["inverted"] = Json::array();
  for (int s = 0; s < base.n(); ++s)
    if (has(l.sigma, s)) j["inverted"].push_back(base.label(s));
  j["partition"] = to_json(l.q.part, base);
  os << j.dump(2) << "\n";
  return os.str();
}

}  // namespace

extern "C" {

const char* ids_version(void) { return "idemspec 1.0.0"; }

const char* ids_last_error(void) { return g_last_error.c_str(); }

void ids_string_free(char* s) { std::free(s); }

ids_status ids_parse(const char* text, ids_document** out) {
  if (!text || !out) return fail(IDS_ERR_USAGE, "null argument");
  return guarded([&] {
    auto* d = new ids_document{parse_document(text)};
    *out = d;
    return IDS_OK;
  });
}

void ids_document_free(ids_document* doc) { delete doc; }

ids_status ids_emit(const ids_document* doc, char** out) {
  if (!doc || !out) return fail(IDS_ERR_USAGE, "null argument");
  return guarded([&] {
    *out = dup_string(emit_document(doc->doc));
    return IDS_OK;
  });
}

ids_status ids_check(const ids_document* doc, char** json_out) {
  if (!doc || !json_out) return fail(IDS_ERR_USAGE, "null argument");
  return guarded([&] {
    Json j = Json::array();
    for (const Block& b : doc->doc.blocks) {
      Json one;
      one["name"] = b.name;
      one["kind"] = b.kind;
      // blocks were validated at parse; re-run the law checks to report
      Report r;
      if (b.kind == "cim") r = check_cim(*b.cim);
      else if (b.kind == "semiring") r = check_semiring(*b.semiring);
      else if (b.kind == "top") r = check_top(*b.top);
      else if (b.kind == "module") r = check_module(*b.module);
      else if (b.kind == "monoid") r = check_monoid(*b.monoid);
      else if (b.kind == "ring") r = check_ring(*b.ring);
      one["report"] = to_json(r);
      if (b.kind == "semiring") {
        one["idealic"] = b.semiring->idealic();
        one["idempotent_mult"] = b.semiring->idempotent_mult();
      }
      j.push_back(one);
    }
    *json_out = dup_string(j.dump(2));
    return IDS_OK;
  });
}

ids_status ids_spec(const ids_document* doc, const char* block, int as_dot,
                    char** out) {
  if (!doc || !out) return fail(IDS_ERR_USAGE, "null argument");
  return guarded([&] {
    const Block& b = doc->doc.pick(block ? block : "", {"semiring"});
    Spectrum sp = spec(*b.semiring);
    if (as_dot) {
      *out = dup_string(to_dot(sp.space, "spec_" + b.name));
    } else {
      Json j = to_json(sp, *b.semiring);
      *out = dup_string(j.dump(2));
    }
    return IDS_OK;
  });
}

ids_status ids_dual(const ids_document* doc, const char* block, char** out) {
  if (!doc || !out) return fail(IDS_ERR_USAGE, "null argument");
  return guarded([&] {
    const Block& b = doc->doc.pick(block ? block : "", {"semiring", "top"});
    std::ostringstream os;
    if (b.kind == "top") {
      ClosedSetSemiring c = closed_set_semiring(*b.top);
      os << emit_block(block_of_semiring(b.name + "_closed", c.sr)) << "\n";
    } else {
      Spectrum sp = spec(*b.semiring);
      os << emit_block(block_of_top(b.name + "_spec", sp.space)) << "\n";
      DualityWitness w = duality_check(*b.semiring);
      Json j;
      j["unit_iso"] = w.iso;
      if (w.collapsed)
        j["collapsed"] = {b.semiring->label(w.collapsed->first),
                          b.semiring->label(w.collapsed->second)};
      os << j.dump(2) << "\n";
    }
    *out = dup_string(os.str());
    return IDS_OK;
  });
}

ids_status ids_soberify(const ids_document* doc, const char* block, char** out) {
  if (!doc || !out) return fail(IDS_ERR_USAGE, "null argument");
  return guarded([&] {
    const Block& b = doc->doc.pick(block ? block : "", {"top"});
    Soberification s = soberify(*b.top);
    std::ostringstream os;
    os << emit_block(block_of_top(b.name + "_sob", s.sob)) << "\n";
    Json j;
    j["already_sober"] = is_sober(*b.top);
    j["unit_is_homeomorphism"] = s.unit_is_homeo;
    Json u = Json::array();
    for (int x = 0; x < b.top->n; ++x)
      u.push_back({b.top->point_label(x), s.sob.point_label(s.unit[x])});
    j["unit"] = u;
    os << j.dump(2) << "\n";
    *out = dup_string(os.str());
    return IDS_OK;
  });
}

ids_status ids_localize(const ids_document* doc, const char* block,
                        const char* mode, const char* arg, char** out) {
  if (!doc || !mode || !arg || !out) return fail(IDS_ERR_USAGE, "null argument");
  return guarded([&] {
    const Block& b = doc->doc.pick(block ? block : "", {"semiring"});
    const Semiring& r = *b.semiring;
    Localization l;
    std::string m = mode;
    if (m == "element") {
      l = localize_at_element(r, element_by_name(r, arg));
    } else if (m == "prime") {
      l = localize_at_prime(r, element_by_name(r, arg));
    } else if (m == "sigma") {
      Mask sigma = bit(r.one);
      for (const std::string& name : split(arg, ','))
        sigma |= bit(element_by_name(r, name));
      l = localize(r, sigma);
    } else {
      throw DomainError("unknown localization mode '" + m + "'");
    }
    *out = dup_string(describe_localization(r, l));
    return IDS_OK;
  });
}

ids_status ids_radical(const ids_document* doc, const char* block,
                       const char* of_elem, char** out) {
  if (!doc || !of_elem || !out) return fail(IDS_ERR_USAGE, "null argument");
  return guarded([&] {
    const Block& b = doc->doc.pick(block ? block : "", {"semiring"});
    const Semiring& r = *b.semiring;
    int a = element_by_name(r, of_elem);
    Json j;
    j["of"] = r.label(a);
    j["radical"] = r.label(radical(r, a));
    *out = dup_string(j.dump(2));
    return IDS_OK;
  });
}

ids_status ids_quotient(const ids_document* doc, const char* block,
                        const char* pairs, char** out) {
  if (!doc || !pairs || !out) return fail(IDS_ERR_USAGE, "null argument");
  return guarded([&] {
    const Block& b = doc->doc.pick(block ? block : "", {"semiring"});
    const Semiring& r = *b.semiring;
    std::vector<std::pair<int, int>> gen;
    for (const std::string& chunk : split(pairs, ';')) {
      std::string inner = chunk;
      if (!inner.empty() && inner.front() == '(') inner.erase(inner.begin());
      if (!inner.empty() && inner.back() == ')') inner.pop_back();
      auto parts = split(inner, ',');
      if (parts.size() != 2)
        throw DomainError("pair '" + chunk + "' is not of the form (a,b)");
      gen.emplace_back(element_by_name(r, parts[0]), element_by_name(r, parts[1]));
    }
    QuotientHom q = make_quotient(r, congruence_closure(r, gen));
    std::ostringstream os;
    os << emit_block(block_of_semiring(b.name + "_quot", q.quot)) << "\n";
    os << to_json(q.part, r).dump(2) << "\n";
    *out = dup_string(os.str());
    return IDS_OK;
  });
}

ids_status ids_glue(const ids_document* doc, const char* block, const char* s,
                    const char* parts, char** out) {
  if (!doc || !s || !parts || !out) return fail(IDS_ERR_USAGE, "null argument");
  return guarded([&] {
    const Block& b = doc->doc.pick(block ? block : "", {"semiring"});
    const Semiring& r = *b.semiring;
    int se = element_by_name(r, s);
    std::vector<GluePart> gp;
    std::vector<Localization> li;
    for (const std::string& chunk : split(parts, ';')) {
      auto kv = split(chunk, ':');
      if (kv.size() != 2)
        throw DomainError("part '" + chunk + "' is not of the form s_i:f_i");
      int si = element_by_name(r, kv[0]);
      Localization l = localize_at_element(r, si);
      gp.push_back({si, l.q.pi(element_by_name(r, kv[1]))});
      li.push_back(std::move(l));
    }
    GlueResult g = glue(r, se, gp);
    Json j;
    j["s"] = r.label(se);
    j["glued_class_representative"] = r.label(g.rs.q.part.rep[g.f_class]);
    Json members = Json::array();
    for (int x = 0; x < r.n(); ++x)
      if (g.rs.q.pi(x) == g.f_class) members.push_back(r.label(x));
    j["glued_class"] = members;
    *out = dup_string(j.dump(2));
    return IDS_OK;
  });
}

ids_status ids_tensor(const ids_document* doc, const char* m, const char* n,
                      char** out) {
  if (!doc || !out) return fail(IDS_ERR_USAGE, "null argument");
  return guarded([&] {
    const Block& bm = doc->doc.pick(m ? m : "", {"module"});
    const Block& bn = n && *n ? doc->doc.need_kind(n, "module") : bm;
    Tensor t = tensor(*bm.module, *bn.module);
    std::ostringstream os;
    Json j;
    j["filters"] = static_cast<int>(t.filters.size());
    Json pure;
    const Module& mm = *bm.module;
    const Module& nn = *bn.module;
    for (int x = 0; x < mm.m(); ++x)
      for (int y = 0; y < nn.m(); ++y) {
        std::string key = mm.carrier.label(x) + "⊗" + nn.carrier.label(y);
        pure[key] = t.pure[x * nn.m() + y];
      }
    j["pure_tensors"] = pure;
    os << j.dump(2) << "\n";
    *out = dup_string(os.str());
    return IDS_OK;
  });
}

ids_status ids_scheme(const ids_document* doc, const char* block,
                      const char* kind, int with_sections, int with_checks,
                      char** json_out) {
  if (!doc || !kind || !json_out) return fail(IDS_ERR_USAGE, "null argument");
  return guarded([&] {
    const SchemeType& t = SchemeType::by_name(kind);
    std::string want = t.kind() == SchemeType::Kind::Ring      ? "ring"
                       : t.kind() == SchemeType::Kind::Monoid ? "monoid"
                                                               : "semiring";
    const Block& b = doc->doc.pick(block ? block : "", {want.c_str()});
    Algebra a = want == "ring"     ? Algebra{*b.ring}
                : want == "monoid" ? Algebra{*b.monoid}
                                   : Algebra{*b.semiring};
    AScheme x = spec_scheme(t, a);
    Json j = scheme_to_json(x, with_sections != 0, with_checks != 0);
    *json_out = dup_string(j.dump(2));
    return IDS_OK;
  });
}

ids_status ids_verify(const char* suite, const ids_document* doc, int bound,
                      char** json_out) {
  if (!suite || !json_out) return fail(IDS_ERR_USAGE, "null argument");
  ids_status rc = guarded([&] {
    VerificationReport rep = run_suite(suite, doc ? &doc->doc : nullptr, bound);
    Json j;
    j["suite"] = rep.suite;
    Json items = Json::array();
    for (const VerifyItem& it : rep.items) {
      Json one;
      one["name"] = it.name;
      one["status"] = it.status;
      if (!it.witness.empty()) one["witness"] = it.witness;
      one["ms"] = it.ms;
      items.push_back(one);
    }
    j["items"] = items;
    j["passed"] = rep.passed;
    j["failed"] = rep.failed;
    j["skipped"] = rep.skipped;
    *json_out = dup_string(j.dump(2));
    if (!rep.ok()) {
      g_last_error = "suite '" + rep.suite + "' reported failures";
      return IDS_ERR_VIOLATION;
    }
    return IDS_OK;
  });
  return rc;
}

ids_status ids_suites(char** json_out) {
  if (!json_out) return fail(IDS_ERR_USAGE, "null argument");
  Json j = Json::array();
  for (const std::string& s : suite_names()) j.push_back(s);
  *json_out = dup_string(j.dump());
  return IDS_OK;
}

ids_status ids_enumerate(const char* what, int n, int count_only, char** out) {
  if (!what || !out) return fail(IDS_ERR_USAGE, "null argument");
  return guarded([&] {
    std::string w = what;
    std::ostringstream os;
    if (w == "posets") {
      auto spaces = enumerate_posets(n);
      if (count_only) {
        os << spaces.size() << "\n";
      } else {
        for (std::size_t i = 0; i < spaces.size(); ++i)
          os << emit_block(block_of_top("P" + std::to_string(n) + "_" + std::to_string(i),
                                        spaces[i]))
             << "\n";
      }
    } else if (w == "lattices") {
      auto lats = enumerate_lattices(n);
      if (count_only) {
        os << lats.size() << "\n";
      } else {
        for (std::size_t i = 0; i < lats.size(); ++i)
          os << emit_block(block_of_cim("L" + std::to_string(n) + "_" + std::to_string(i),
                                        lats[i]))
             << "\n";
      }
    } else if (w == "semirings") {
      auto all = enumerate_semirings(n);
      if (count_only) {
        os << all.size() << "\n";
      } else {
        for (std::size_t i = 0; i < all.size(); ++i)
          os << emit_block(block_of_semiring(
                     "S" + std::to_string(n) + "_" + std::to_string(i), all[i]))
             << "\n";
      }
    } else {
      throw DomainError("unknown enumeration '" + w + "'");
    }
    *out = dup_string(os.str());
    return IDS_OK;
  });
}

int ids_max_carrier(void) { return guards().max_carrier; }

void ids_set_max_carrier(int n) {
  if (n > 0) guards().max_carrier = n < 64 ? n : 64;
}

}  // extern "C"
