#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "core/jsonout.hpp"
#include "core/spectrum.hpp"
#include "core/textio.hpp"

using namespace idem;

namespace {

const char* kFixtureDoc = R"(
# the four named semirings
cim chain3 { elements: 0 m 1; zero: 0; one: 1; add: [[0,m,1],[m,m,1],[1,1,1]] }
semiring C3 { cim: chain3; one: 1; mul: [[0,0,0],[0,m,m],[0,m,1]] }
semiring F1 { cim: { elements: 0 1; zero: 0; one: 1; add: [[0,1],[1,1]] };
              one: 1; mul: [[0,0],[0,1]] }
top sierp { points: o c; closed: [], [c], [o c] }
monoid T { elements: 1 x y; mul: [[1,x,y],[x,y,y],[y,y,y]] }
ring Z4 { elements: 0 1 2 3;
          add: [[0,1,2,3],[1,2,3,0],[2,3,0,1],[3,0,1,2]];
          mul: [[0,0,0,0],[0,1,2,3],[0,2,0,2],[0,3,2,1]] }
module M over F1 { cim: { elements: b t; zero: b; one: t; add: [[b,t],[t,t]] };
                   action: [[b,b],[b,t]] }
)";

}  // namespace

TEST_CASE("parsing the fixture document") {
  Document doc = parse_document(kFixtureDoc);
  CHECK(doc.blocks.size() == 7);
  const Block& c3 = doc.need_kind("C3", "semiring");
  REQUIRE(find_semiring_iso(*c3.semiring, fixtures::chain3()).has_value());
  const Block& f1 = doc.need_kind("F1", "semiring");
  REQUIRE(find_semiring_iso(*f1.semiring, fixtures::f1()).has_value());
  const Block& sierp = doc.need_kind("sierp", "top");
  REQUIRE(find_homeomorphism(*sierp.top, sierpinski()).has_value());
  const Block& t = doc.need_kind("T", "monoid");
  REQUIRE(find_algebra_iso(Algebra{*t.monoid}, Algebra{truncated_monoid()}).has_value());
  const Block& z4 = doc.need_kind("Z4", "ring");
  REQUIRE(find_algebra_iso(Algebra{*z4.ring}, Algebra{zmod(4)}).has_value());
  const Block& m = doc.need_kind("M", "module");
  CHECK(m.module->m() == 2);
}

TEST_CASE("round trip: parse ∘ emit ∘ parse = parse") {
  Document doc = parse_document(kFixtureDoc);
  std::string emitted = emit_document(doc);
  Document again = parse_document(emitted);
  CHECK(emit_document(again) == emitted);
  REQUIRE(again.blocks.size() == doc.blocks.size());
  for (std::size_t i = 0; i < doc.blocks.size(); ++i) {
    CHECK(again.blocks[i].kind == doc.blocks[i].kind);
    CHECK(again.blocks[i].name == doc.blocks[i].name);
  }
}

TEST_CASE("parse errors carry positions") {
  CHECK_THROWS_AS(parse_document("cim X { }"), ParseError);
  try {
    parse_document("cim X { elements: a b; zero: a; one: b; add: [[a],[b,b]] }");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    std::string msg = e.what();
    CHECK(msg.find(":") != std::string::npos);
    CHECK(msg.find("too few entries") != std::string::npos);
  }
}

TEST_CASE("validation failures are reported at load") {
  // x ⊕ x ≠ x
  CHECK_THROWS_AS(
      parse_document("cim X { elements: a b; zero: a; one: b; add: [[b,b],[b,b]] }"),
      ParseError);
  // duplicate names
  CHECK_THROWS_AS(parse_document("cim X { elements: a; zero: a; one: a; add: [[a]] }\n"
                                 "cim X { elements: a; zero: a; one: a; add: [[a]] }"),
                  ParseError);
  // unresolved reference
  CHECK_THROWS_AS(parse_document("semiring S { cim: nosuch; one: 1; mul: [[0]] }"),
                  ParseError);
}

TEST_CASE("json and dot output") {
  Semiring c3 = fixtures::chain3();
  Json j = to_json(c3);
  CHECK(j["idealic"] == true);
  CHECK(j["elements"].size() == 3);

  Spectrum sp = spec(c3);
  Json js = to_json(sp, c3);
  CHECK(js["primes"].size() == 2);

  std::string dot = to_dot(sp.space, "spec_c3");
  CHECK(dot.find("digraph") != std::string::npos);
  // two nodes, one specialization edge
  CHECK(dot.find("n0") != std::string::npos);
  CHECK(dot.find("n1") != std::string::npos);
  CHECK(dot.find("->") != std::string::npos);

  Json jr = to_json(check_semiring(c3));
  CHECK(jr["status"] == "pass");
}

TEST_CASE("scheme json has the advertised fields") {
  AScheme x = spec_scheme(SchemeType::semiring_type(), Algebra{fixtures::chain3()});
  Json j = scheme_to_json(x, true, true);
  CHECK(j.contains("points"));
  CHECK(j.contains("closed_sets"));
  CHECK(j.contains("sections"));
  CHECK(j.contains("beta"));
  CHECK(j.contains("checks"));
  CHECK(j["checks"]["sheaf"] == true);
}
