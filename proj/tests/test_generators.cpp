#include <catch_amalgamated.hpp>

#include "partmon/generators.hpp"
#include "partmon/verify.hpp"

using namespace partmon;

TEST_CASE("generator pictures", "[generators]") {
  CHECK(gen_e(3, 1) == parse_diagram("{1 | 1' | 2,2' | 3,3'}"));
  CHECK(gen_t(3, 1, 2) == parse_diagram("{1,2,1',2' | 3,3'}"));
  CHECK(gen_s(3, 1) == parse_diagram("{1,2' | 2,1' | 3,3'}"));
  CHECK(gen_f(3, 1, 2).as_partial_perm() == PartialPerm(std::vector<degree_type>{0, 1, 3}));
  CHECK(gen_f(3, 2, 1).as_partial_perm() == PartialPerm(std::vector<degree_type>{2, 0, 3}));
  CHECK(gen_e(3, 1).as_partial_perm() == PartialPerm(std::vector<degree_type>{0, 2, 3}));
}

TEST_CASE("generator identities for n <= 5", "[generators]") {
  for (degree_type n = 2; n <= 5; ++n) {
    CHECK(gen_tbar(n) == gen_t(n, 1, 2));
    CHECK(gen_e1(n) == gen_e(n, 1));
    for (degree_type i = 1; i < n; ++i) {
      CHECK(gen_s(n, i) * gen_s(n, i) == Diagram::identity(n));
    }
    for (degree_type i = 1; i <= n; ++i) {
      CHECK(gen_e(n, i).is_singular());
      for (degree_type j = 1; j <= n; ++j) {
        if (i != j) {
          CHECK(gen_t(n, i, j) == gen_t(n, j, i));
          CHECK(gen_t(n, i, j).is_singular());
          CHECK(gen_f(n, i, j) == gen_e(n, i) * gen_t(n, i, j) * gen_e(n, j));
        }
      }
    }
  }
}

TEST_CASE("t of sets and equivalences", "[generators]") {
  CHECK(t_of_set(4, {1, 3}) == gen_t(4, 1, 3));
  CHECK(t_of_set(4, {2}) == Diagram::identity(4));
  CHECK(t_of_set(4, {}) == Diagram::identity(4));
  // t_eps t_eta = t_(eps v eta) over all equivalences on 4 points
  std::vector<Equivalence> eqs;
  for (std::uint32_t a = 0; a < 4; ++a) {
    for (std::uint32_t b = 0; b < 4; ++b) {
      for (std::uint32_t c = 0; c < 4; ++c) {
        eqs.push_back(Equivalence::from_labels({0, a, b, c}));
      }
    }
  }
  for (auto const& x : eqs) {
    for (auto const& y : eqs) {
      REQUIRE(t_of_equivalence(x) * t_of_equivalence(y) == t_of_equivalence(join(x, y)));
    }
  }
}

TEST_CASE("permutation and partial permutation diagrams", "[generators]") {
  CHECK(perm_diagram({1, 2, 3}) == Diagram::identity(3));
  CHECK(partial_perm_diagram(PartialPerm(std::vector<degree_type>{0, 1, 3}))
        == gen_f(3, 1, 2));
  CHECK_THROWS(perm_diagram({1, 1, 3}));
  // round trip over the partial permutations of rank <= 3 at n = 4
  std::size_t count = 0;
  for (auto const& d : enumerate_Pn(4)) {
    if (auto p = d.as_partial_perm(); p && p->rank() <= 3) {
      ++count;
      REQUIRE(partial_perm_diagram(*p) == d);
      REQUIRE(partial_perm_diagram(*p).as_partial_perm() == p);
    }
  }
  CHECK(count == 209 - 24);
}
