#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "core/enumerate.hpp"

using namespace idem;

TEST_CASE("unlabeled poset counts match the known values") {
  CHECK(poset_count(1) == 1);
  CHECK(poset_count(2) == 2);
  CHECK(poset_count(3) == 5);
  CHECK(poset_count(4) == 16);
  CHECK(poset_count(5) == 63);
}

TEST_CASE("naive all-relations filter agrees for small n") {
  for (int n = 1; n <= 3; ++n) CHECK(poset_count(n) == poset_count_naive(n));
}

TEST_CASE("enumerated spaces are valid, T0 and pairwise non-homeomorphic") {
  for (int n = 1; n <= 4; ++n) {
    auto spaces = enumerate_posets(n);
    for (const Top& t : spaces) {
      CHECK(check_top(t).ok());
      CHECK(is_t0(t));
      CHECK(is_sober(t));
    }
    for (std::size_t i = 0; i < spaces.size(); ++i)
      for (std::size_t j = i + 1; j < spaces.size(); ++j)
        CHECK_FALSE(find_homeomorphism(spaces[i], spaces[j]).has_value());
  }
}

TEST_CASE("two spaces on two points: discrete and the connected one") {
  auto spaces = enumerate_posets(2);
  REQUIRE(spaces.size() == 2);
  bool has_discrete = false, has_sierpinski = false;
  for (const Top& t : spaces) {
    if (find_homeomorphism(t, discrete_space(2))) has_discrete = true;
    if (find_homeomorphism(t, sierpinski())) has_sierpinski = true;
  }
  CHECK(has_discrete);
  CHECK(has_sierpinski);
}

TEST_CASE("lattice counts for small carriers") {
  CHECK(enumerate_lattices(1).size() == 1);
  CHECK(enumerate_lattices(2).size() == 1);
  CHECK(enumerate_lattices(3).size() == 1);  // only the chain
  CHECK(enumerate_lattices(4).size() == 2);  // chain and diamond
  for (int n = 1; n <= 4; ++n)
    for (const Cim& c : enumerate_lattices(n)) CHECK(check_cim(c).ok());
}

TEST_CASE("enumerated semirings are valid and pairwise non-isomorphic") {
  for (int n = 1; n <= 3; ++n) {
    auto all = enumerate_semirings(n);
    CHECK(!all.empty());
    for (const Semiring& s : all) CHECK(check_semiring(s).ok());
    for (std::size_t i = 0; i < all.size(); ++i)
      for (std::size_t j = i + 1; j < all.size(); ++j)
        CHECK_FALSE(find_semiring_iso(all[i], all[j]).has_value());
  }
}

TEST_CASE("the named fixtures appear among the enumerated semirings") {
  auto all3 = enumerate_semirings(3);
  bool has_c3 = false, has_neps = false;
  for (const Semiring& s : all3) {
    if (find_semiring_iso(s, fixtures::chain3())) has_c3 = true;
    if (find_semiring_iso(s, fixtures::neps())) has_neps = true;
  }
  CHECK(has_c3);
  CHECK(has_neps);
  auto all1 = enumerate_semirings(1);
  CHECK(all1.size() == 1);  // the zero semiring
}
