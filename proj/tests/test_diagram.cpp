#include <algorithm>  // for includes

#include <catch_amalgamated.hpp>

#include "partmon/diagram.hpp"
#include "partmon/exception.hpp"
#include "partmon/verify.hpp"

using namespace partmon;

namespace {
  Diagram const& alpha() {
    static Diagram const d = parse_diagram("{1,4 | 2,3,4',5' | 5,6 | 1',3',6' | 2'}");
    return d;
  }
}  // namespace

TEST_CASE("diagram text round trip", "[diagram]") {
  std::string const s = "{1,4 | 2,3,4',5' | 5,6 | 1',3',6' | 2'}";
  CHECK(to_string(alpha()) == s);
  CHECK(to_string(parse_diagram(to_string(alpha()))) == s);
  // any block and point order, any spacing
  CHECK(parse_diagram("{2'|6',3',1'|6,5|5',4',3,2|4,1}") == alpha());
  for (auto const& d : enumerate_Pn(3)) {
    REQUIRE(parse_diagram(to_string(d)) == d);
  }
}

TEST_CASE("diagram parse errors carry a position", "[diagram]") {
  CHECK_THROWS_AS(parse_diagram("{1,x}"), ParseError);
  try {
    (void) parse_diagram("{1,4 | 2,x}");
    FAIL("no exception");
  } catch (ParseError const& e) {
    CHECK(e.position() == 9);
  }
  CHECK_THROWS_AS(parse_diagram("{1,1' | 1,2'}"), Exception);  // 1 twice
  CHECK_THROWS_AS(parse_diagram("{1,1'}") * parse_diagram("{1,1' | 2,2'}"), DegreeMismatch);
}

TEST_CASE("product and identity", "[diagram]") {
  Diagram const beta = parse_diagram("{1,3 | 2,4,1' | 5,4',5',6' | 6 | 2' | 3'}");
  CHECK(to_string(alpha() * beta) == "{1,4 | 2,3,1',4',5',6' | 5,6 | 2' | 3'}");
  CHECK(to_string(Diagram::identity(2)) == "{1,1' | 2,2'}");
  CHECK(to_string(Diagram::identity(1)) == "{1,1'}");
  CHECK(Diagram::identity(6) * alpha() == alpha());
  CHECK(alpha() * Diagram::identity(6) == alpha());
}

TEST_CASE("product is associative on P_2", "[diagram]") {
  auto const all = enumerate_Pn(2);
  for (auto const& a : all) {
    for (auto const& b : all) {
      for (auto const& c : all) {
        REQUIRE((a * b) * c == a * (b * c));
      }
    }
  }
}

TEST_CASE("rank, domain, kernel of the worked example", "[diagram]") {
  CHECK(alpha().rank() == 1);
  CHECK(alpha().dom() == std::vector<degree_type>{2, 3});
  CHECK(alpha().codom() == std::vector<degree_type>{4, 5});
  CHECK(to_string(alpha().ker()) == "(1,4|2,3|5,6)");
  CHECK(to_string(alpha().coker()) == "(1,3,6|2|4,5)");
  CHECK(alpha().is_singular());
  CHECK_FALSE(alpha().as_partial_perm().has_value());
  CHECK(Diagram::identity(3).is_unit());
}

TEST_CASE("containments under products at n = 3", "[diagram]") {
  auto const all = enumerate_Pn(3);
  auto subset = [](std::vector<degree_type> const& a, std::vector<degree_type> const& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
  };
  for (auto const& a : all) {
    for (auto const& b : all) {
      Diagram const ab = a * b;
      REQUIRE(subset(ab.dom(), a.dom()));
      REQUIRE(subset(ab.codom(), b.codom()));
      REQUIRE(a.ker().is_finer_than(ab.ker()));
      REQUIRE(b.coker().is_finer_than(ab.coker()));
      REQUIRE(ab.rank() <= std::min(a.rank(), b.rank()));
    }
  }
}

TEST_CASE("join of equivalences", "[diagram]") {
  Equivalence const e = parse_equivalence("(1,2|3)");
  CHECK(join(e, Equivalence(3)) == e);
  CHECK(join(e, parse_equivalence("(2,3|1)")) == parse_equivalence("(1,2,3)"));
  // against a fixed-point closure over all pairs at n = 4
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
      std::vector<std::vector<bool>> rel(5, std::vector<bool>(5));
      for (degree_type i = 1; i <= 4; ++i) {
        for (degree_type j = 1; j <= 4; ++j) {
          rel[i][j] = x.related(i, j) || y.related(i, j);
        }
      }
      for (degree_type k = 1; k <= 4; ++k) {
        for (degree_type i = 1; i <= 4; ++i) {
          for (degree_type j = 1; j <= 4; ++j) {
            rel[i][j] = rel[i][j] || (rel[i][k] && rel[k][j]);
          }
        }
      }
      Equivalence const z = join(x, y);
      for (degree_type i = 1; i <= 4; ++i) {
        for (degree_type j = 1; j <= 4; ++j) {
          REQUIRE(z.related(i, j) == rel[i][j]);
        }
      }
    }
  }
}

TEST_CASE("partial permutations", "[diagram]") {
  PartialPerm const p(std::vector<degree_type>{0, 2, 3});
  CHECK(p.rank() == 2);
  CHECK(to_diagram(p).as_partial_perm() == p);
  CHECK_THROWS_AS(PartialPerm(std::vector<degree_type>{1, 1, 0}), InvalidArgument);
  CHECK((p * p.inverse()).domain() == p.domain());
}

TEST_CASE("render shows both rows", "[diagram]") {
  std::string const r = render(parse_diagram("{1,2,1',2' | 3,3'}"));
  CHECK(r.find("1,2,1',2'") != std::string::npos);
}
