// Command-line front end. Talks to the core exclusively through the C API
// in idemspec.h, the same surface other language bindings would use.

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "idemspec.h"

namespace {

constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

int status_to_exit(ids_status s) {
  switch (s) {
    case IDS_OK: return 0;
    case IDS_ERR_VIOLATION: return kExitViolation;
    default: return kExitUsage;
  }
}

struct DocHandle {
  ids_document* doc = nullptr;
  ~DocHandle() { ids_document_free(doc); }
};

int load(const std::string& path, DocHandle& h) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "cannot open " << path << "\n";
    return kExitUsage;
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  ids_status rc = ids_parse(text.c_str(), &h.doc);
  if (rc != IDS_OK) {
    std::cerr << path << ":" << ids_last_error() << "\n";
    return status_to_exit(rc);
  }
  return 0;
}

int print_result(ids_status rc, char* out) {
  if (rc != IDS_OK) {
    std::cerr << ids_last_error() << "\n";
    if (out) {
      std::cout << out;
      ids_string_free(out);
    }
    return status_to_exit(rc);
  }
  if (out) {
    std::cout << out;
    ids_string_free(out);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite idempotent semirings, spectra and schemes"};
  app.require_subcommand(1);
  int max_carrier = 0;
  app.add_option("--max-carrier", max_carrier,
                 "override the carrier bound (also via IDEMSPEC_MAX_CARRIER)");

  std::string file, block, name_m, name_n, mode_arg, pairs, kind = "semiring";
  std::string suite, what, of_elem, s_elem, parts, sigma, prime, at;
  int bound = 0, enum_n = 2;
  bool as_dot = false, count_only = false, with_sections = false, with_checks = false;

  auto* c_check = app.add_subcommand("check", "validate every block of a file");
  c_check->add_option("file", file)->required();

  auto* c_spec = app.add_subcommand("spec", "prime spectrum of a semiring");
  c_spec->add_option("file", file)->required();
  c_spec->add_option("--name", block, "block name (default: first semiring)");
  c_spec->add_flag("--dot", as_dot, "emit the specialization order as DOT");

  auto* c_dual = app.add_subcommand("dual", "switch between spaces and semirings");
  c_dual->add_option("file", file)->required();
  c_dual->add_option("--name", block);

  auto* c_sob = app.add_subcommand("soberify", "soberification of a space");
  c_sob->add_option("file", file)->required();
  c_sob->add_option("--name", block);

  auto* c_loc = app.add_subcommand("localize", "localize a semiring");
  c_loc->add_option("file", file)->required();
  c_loc->add_option("--name", block);
  c_loc->add_option("--at", at, "invert the powers of one element");
  c_loc->add_option("--sigma", sigma, "invert a comma-separated system");
  c_loc->add_option("--prime", prime, "localize along a prime");

  auto* c_rad = app.add_subcommand("radical", "radical of an element");
  c_rad->add_option("file", file)->required();
  c_rad->add_option("--name", block);
  c_rad->add_option("--of", of_elem)->required();

  auto* c_quot = app.add_subcommand("quotient", "quotient by a congruence");
  c_quot->add_option("file", file)->required();
  c_quot->add_option("--name", block);
  c_quot->add_option("--pairs", pairs, "generators \"(a,b);(c,d)\"")->required();

  auto* c_glue = app.add_subcommand("glue", "glue sections over a cover");
  c_glue->add_option("file", file)->required();
  c_glue->add_option("--name", block);
  c_glue->add_option("--s", s_elem, "the covered element")->required();
  c_glue->add_option("--parts", parts, "\"s1:f1;s2:f2\"")->required();

  auto* c_tensor = app.add_subcommand("tensor", "tensor product of two modules");
  c_tensor->add_option("file", file)->required();
  c_tensor->add_option("-M", name_m, "first module block");
  c_tensor->add_option("-N", name_n, "second module block");

  auto* c_scheme = app.add_subcommand("scheme", "spectrum with structure sheaf");
  c_scheme->add_option("file", file)->required();
  c_scheme->add_option("--name", block);
  c_scheme->add_option("--type", kind, "ring | monoid | semiring")->required();
  c_scheme->add_flag("--sections", with_sections);
  c_scheme->add_flag("--verify", with_checks);

  auto* c_verify = app.add_subcommand("verify", "run a verification suite");
  c_verify->add_option("suite", suite)->required();
  c_verify->add_option("file", file, "optional document of extra instances");
  c_verify->add_option("--max-n", bound, "enumeration bound");

  auto* c_enum = app.add_subcommand("enumerate", "posets | lattices | semirings");
  c_enum->add_option("what", what)->required();
  c_enum->add_option("--n", enum_n, "carrier/point count")->required();
  c_enum->add_flag("--count-only", count_only);

  CLI11_PARSE(app, argc, argv);
  if (max_carrier > 0) ids_set_max_carrier(max_carrier);

  char* out = nullptr;
  if (c_check->parsed()) {
    DocHandle h;
    if (int rc = load(file, h)) return rc;
    ids_status rc2 = ids_check(h.doc, &out);
    return print_result(rc2, out);
  }
  if (c_spec->parsed()) {
    DocHandle h;
    if (int rc = load(file, h)) return rc;
    ids_status rc2 = ids_spec(h.doc, block.c_str(), as_dot ? 1 : 0, &out);
    return print_result(rc2, out);
  }
  if (c_dual->parsed()) {
    DocHandle h;
    if (int rc = load(file, h)) return rc;
    ids_status rc2 = ids_dual(h.doc, block.c_str(), &out);
    return print_result(rc2, out);
  }
  if (c_sob->parsed()) {
    DocHandle h;
    if (int rc = load(file, h)) return rc;
    ids_status rc2 = ids_soberify(h.doc, block.c_str(), &out);
    return print_result(rc2, out);
  }
  if (c_loc->parsed()) {
    DocHandle h;
    if (int rc = load(file, h)) return rc;
    int given = (!at.empty()) + (!sigma.empty()) + (!prime.empty());
    if (given != 1) {
      std::cerr << "localize needs exactly one of --at, --sigma, --prime\n";
      return kExitUsage;
    }
    const char* mode = !at.empty() ? "element" : (!sigma.empty() ? "sigma" : "prime");
    const std::string& arg = !at.empty() ? at : (!sigma.empty() ? sigma : prime);
    ids_status rc2 = ids_localize(h.doc, block.c_str(), mode, arg.c_str(), &out);
    return print_result(rc2, out);
  }
  if (c_rad->parsed()) {
    DocHandle h;
    if (int rc = load(file, h)) return rc;
    ids_status rc2 = ids_radical(h.doc, block.c_str(), of_elem.c_str(), &out);
    return print_result(rc2, out);
  }
  if (c_quot->parsed()) {
    DocHandle h;
    if (int rc = load(file, h)) return rc;
    ids_status rc2 = ids_quotient(h.doc, block.c_str(), pairs.c_str(), &out);
    return print_result(rc2, out);
  }
  if (c_glue->parsed()) {
    DocHandle h;
    if (int rc = load(file, h)) return rc;
    ids_status rc2 = ids_glue(h.doc, block.c_str(), s_elem.c_str(), parts.c_str(), &out);
    return print_result(rc2, out);
  }
  if (c_tensor->parsed()) {
    DocHandle h;
    if (int rc = load(file, h)) return rc;
    ids_status rc2 = ids_tensor(h.doc, name_m.c_str(), name_n.c_str(), &out);
    return print_result(rc2, out);
  }
  if (c_scheme->parsed()) {
    DocHandle h;
    if (int rc = load(file, h)) return rc;
    ids_status rc2 = ids_scheme(h.doc, block.c_str(), kind.c_str(),
                                   with_sections ? 1 : 0, with_checks ? 1 : 0, &out);
    return print_result(rc2, out);
  }
  if (c_verify->parsed()) {
    DocHandle h;
    if (!file.empty())
      if (int rc = load(file, h)) return rc;
    ids_status rc = ids_verify(suite.c_str(), h.doc, bound, &out);
    return print_result(rc, out);
  }
  if (c_enum->parsed()) {
    ids_status rc2 = ids_enumerate(what.c_str(), enum_n, count_only ? 1 : 0, &out);
    return print_result(rc2, out);
  }
  return kExitUsage;
}
