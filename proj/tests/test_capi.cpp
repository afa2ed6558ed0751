#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "idemspec.h"

namespace {

const char* kDoc = R"(
cim chain3 { elements: 0 m 1; zero: 0; one: 1; add: [[0,m,1],[m,m,1],[1,1,1]] }
semiring C3 { cim: chain3; one: 1; mul: [[0,0,0],[0,m,m],[0,m,1]] }
semiring B4 { cim: { elements: 0 a b 1; zero: 0; one: 1;
                     add: [[0,a,b,1],[a,a,1,1],[b,1,b,1],[1,1,1,1]] };
              one: 1; mul: [[0,0,0,0],[0,a,0,a],[0,0,b,b],[0,a,b,1]] }
top sierp { points: o c; closed: [], [c], [o c] }
monoid T { elements: 1 x y; mul: [[1,x,y],[x,y,y],[y,y,y]] }
)";

struct Doc {
  ids_document* d = nullptr;
  ~Doc() { ids_document_free(d); }
};

std::string take(char* s) {
  std::string out = s ? s : "";
  ids_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("parse, emit and reparse through the C interface") {
  Doc doc;
  REQUIRE(ids_parse(kDoc, &doc.d) == IDS_OK);
  char* out = nullptr;
  REQUIRE(ids_emit(doc.d, &out) == IDS_OK);
  std::string text = take(out);
  CHECK(text.find("semiring C3") != std::string::npos);
  Doc doc2;
  REQUIRE(ids_parse(text.c_str(), &doc2.d) == IDS_OK);
}

TEST_CASE("parse errors set the status and message") {
  ids_document* d = nullptr;
  CHECK(ids_parse("cim Bad { elements: a; }", &d) == IDS_ERR_USAGE);
  std::string err = ids_last_error();
  CHECK(err.find(":") != std::string::npos);
  CHECK(d == nullptr);
}

TEST_CASE("check reports every block") {
  Doc doc;
  REQUIRE(ids_parse(kDoc, &doc.d) == IDS_OK);
  char* out = nullptr;
  REQUIRE(ids_check(doc.d, &out) == IDS_OK);
  std::string json = take(out);
  CHECK(json.find("\"idealic\": true") != std::string::npos);
  CHECK(json.find("\"status\": \"pass\"") != std::string::npos);
}

TEST_CASE("spectrum and dot output") {
  Doc doc;
  REQUIRE(ids_parse(kDoc, &doc.d) == IDS_OK);
  char* out = nullptr;
  REQUIRE(ids_spec(doc.d, "C3", 0, &out) == IDS_OK);
  std::string json = take(out);
  CHECK(json.find("\"primes\"") != std::string::npos);
  REQUIRE(ids_spec(doc.d, "C3", 1, &out) == IDS_OK);
  std::string dot = take(out);
  CHECK(dot.find("digraph") != std::string::npos);
}

TEST_CASE("localize, radical, quotient, glue") {
  Doc doc;
  REQUIRE(ids_parse(kDoc, &doc.d) == IDS_OK);
  char* out = nullptr;
  REQUIRE(ids_localize(doc.d, "C3", "element", "m", &out) == IDS_OK);
  CHECK(take(out).find("inverted") != std::string::npos);
  REQUIRE(ids_radical(doc.d, "C3", "m", &out) == IDS_OK);
  CHECK(take(out).find("radical") != std::string::npos);
  REQUIRE(ids_quotient(doc.d, "C3", "(1,m)", &out) == IDS_OK);
  CHECK(take(out).find("classes") != std::string::npos);
  REQUIRE(ids_glue(doc.d, "B4", "1", "a:1;b:0", &out) == IDS_OK);
  std::string glue = take(out);
  CHECK(glue.find("\"glued_class_representative\": \"a\"") != std::string::npos);
  // incompatible cover: exit path with a message
  CHECK(ids_glue(doc.d, "B4", "1", "a:1", &out) == IDS_ERR_USAGE);
}

TEST_CASE("scheme json through the C interface") {
  Doc doc;
  REQUIRE(ids_parse(kDoc, &doc.d) == IDS_OK);
  char* out = nullptr;
  REQUIRE(ids_scheme(doc.d, "T", "monoid", 1, 1, &out) == IDS_OK);
  std::string json = take(out);
  CHECK(json.find("\"points\"") != std::string::npos);
  CHECK(json.find("\"sections\"") != std::string::npos);
  CHECK(json.find("\"beta\"") != std::string::npos);
  // wrong kind for the block
  CHECK(ids_scheme(doc.d, "T", "ring", 0, 0, &out) == IDS_ERR_USAGE);
}

TEST_CASE("verify suites and enumeration") {
  char* out = nullptr;
  REQUIRE(ids_suites(&out) == IDS_OK);
  std::string suites = take(out);
  CHECK(suites.find("duality") != std::string::npos);
  REQUIRE(ids_verify("stone", nullptr, 3, &out) == IDS_OK);
  std::string rep = take(out);
  CHECK(rep.find("\"failed\": 0") != std::string::npos);
  REQUIRE(ids_enumerate("posets", 3, 1, &out) == IDS_OK);
  CHECK(take(out) == "5\n");
  CHECK(ids_enumerate("nonsense", 2, 0, &out) == IDS_ERR_USAGE);
}

TEST_CASE("guards are visible and adjustable") {
  int before = ids_max_carrier();
  CHECK(before > 0);
  ids_set_max_carrier(32);
  CHECK(ids_max_carrier() == 32);
  ids_set_max_carrier(before);
}
