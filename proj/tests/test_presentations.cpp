#include <random>  // for mt19937_64

#include <catch_amalgamated.hpp>

#include "partmon/exception.hpp"
#include "partmon/generators.hpp"
#include "partmon/relations.hpp"
#include "partmon/verify.hpp"

using namespace partmon;

namespace {
  Word random_word(std::mt19937_64& rng, degree_type n, Alphabet a, std::size_t max_len) {
    auto const letters = letters_of(n, a);
    Word       w(n, a);
    for (std::size_t i = 1 + rng() % max_len; i > 0; --i) {
      w.push_back(letters[rng() % letters.size()]);
    }
    return w;
  }
}  // namespace

TEST_CASE("word text round trip", "[words]") {
  Word const w = parse_word("e3 t1,2 e1", 4, Alphabet::ET);
  CHECK(w.size() == 3);
  CHECK(to_string(w) == "e3 t1,2 e1");
  CHECK(to_string(parse_word("s1 e t s3", 4, Alphabet::SET)) == "s1 e t s3");
  CHECK(to_string(parse_word("f2,1", 3, Alphabet::F)) == "f2,1");
  CHECK(parse_word("1", 3, Alphabet::ET).empty());
  CHECK_THROWS_AS(parse_word("e5", 4, Alphabet::ET), Exception);
  CHECK_THROWS_AS(parse_word("s1", 4, Alphabet::ET), Exception);
  CHECK_THROWS_AS(parse_word("e1 q", 4, Alphabet::ET), ParseError);
}

TEST_CASE("evaluation of words", "[words]") {
  for (degree_type n = 2; n <= 4; ++n) {
    CHECK(eval_phi(parse_word("e1", n, Alphabet::ET)) == gen_e(n, 1));
    CHECK(eval_phi(parse_word("t1,2 e1 t1,2", n, Alphabet::ET)) == gen_t(n, 1, 2));
    CHECK(eval_Phi(Word(n, Alphabet::SET)) == Diagram::identity(n));
    for (degree_type i = 1; i <= n; ++i) {
      for (degree_type j = 1; j <= n; ++j) {
        if (i != j) {
          Word const z = z_word(n, i, j);
          CHECK(eval_phi(z) == gen_f(n, i, j));
          CHECK(eval_f(Word(n, Alphabet::F, {letter_f(i, j)})) == gen_f(n, i, j));
        }
      }
    }
  }
}

TEST_CASE("c_r, eps_r, tau_ij", "[words]") {
  CHECK(build_c(5, 1).empty());
  for (degree_type n = 1; n <= 5; ++n) {
    for (degree_type r = 1; r <= n; ++r) {
      // c_r sends 1 to r
      CHECK(s_word_permutation(build_c(n, r))[0] == r);
      CHECK(eval_Phi(build_eps(n, r)) == gen_e(n, r));
      for (degree_type j = 1; j <= n; ++j) {
        if (j != r) {
          CHECK(eval_Phi(build_tau(n, r, j)) == gen_t(n, r, j));
        }
      }
    }
  }
  CHECK(to_string(psi(parse_word("e1", 3, Alphabet::ET))) == "e");
}

TEST_CASE("psi preserves images", "[words]") {
  std::mt19937_64 rng(7);
  for (int k = 0; k < 1000; ++k) {
    Word const w = random_word(rng, 4, Alphabet::ET, 6);
    REQUIRE(eval_Phi(psi(w)) == eval_phi(w));
  }
}

TEST_CASE("relation instance counts", "[relations]") {
  CHECK(instantiate_relations({"R10"}, 4).size() == 24);
  CHECK(instantiate_relations({"R5"}, 3).size() == 6);
  for (degree_type n = 3; n <= 5; ++n) {
    CHECK(instantiate_relations({"R19"}, n).size() == 1);
  }
  CHECK_THROWS_AS(make_relation("R12", 4, std::vector<degree_type>{1, 2}), InvalidArgument);
  CHECK_THROWS_AS(make_relation("R99", 4, std::vector<degree_type>{1}), InvalidArgument);
}

TEST_CASE("relations hold in P_n", "[relations]") {
  for (degree_type n = 2; n <= 5; ++n) {
    for (auto const* family : {"R1-R10", "R11-R21", "F", "Z"}) {
      for (auto const& r : instantiate_relations(family_ids(family), n)) {
        INFO(r.id << " " << to_string(r.subs) << " n=" << int(n));
        REQUIRE(check_relation_diagrammatically(r));
      }
    }
  }
  RelationInstance bad = make_relation("R7", 3, std::vector<degree_type>{1, 2, 1});
  CHECK(check_relation_diagrammatically(bad));
  bad.lhs = parse_word("t1,2 e3 t1,2", 3, Alphabet::ET);
  CHECK_FALSE(check_relation_diagrammatically(bad));
}

TEST_CASE("applying relations", "[relations]") {
  Word const ee = parse_word("e1 e1", 3, Alphabet::ET);
  CHECK(to_string(apply_relation(ee, make_relation("R1", 3, std::vector<degree_type>{1}), 0, Direction::forward))
        == "e1");
  RelationInstance const r2 = make_relation("R2", 3, std::vector<degree_type>{1, 2});
  Word const             w  = parse_word("e1 e2", 3, Alphabet::ET);
  Word const             v  = apply_relation(w, r2, 0, Direction::forward);
  CHECK(to_string(v) == "e2 e1");
  CHECK(apply_relation(v, r2, 0, Direction::backward) == w);
  CHECK_THROWS_AS(apply_relation(w, r2, 1, Direction::forward), InvalidArgument);

  // image invariance on random applicable steps
  std::mt19937_64 rng(11);
  auto const      rels = instantiate_relations(family_ids("R1-R10"), 4);
  std::size_t     applied = 0;
  for (int k = 0; k < 10000; ++k) {
    Word const              u   = random_word(rng, 4, Alphabet::ET, 8);
    RelationInstance const& r   = rels[rng() % rels.size()];
    Direction const         dir = rng() % 2 ? Direction::forward : Direction::backward;
    Word const&             lhs = dir == Direction::forward ? r.lhs : r.rhs;
    for (std::size_t pos = 0; pos + lhs.size() <= u.size(); ++pos) {
      if (u.occurs_at(lhs, pos)) {
        ++applied;
        REQUIRE(eval_phi(apply_relation(u, r, pos, dir)) == eval_phi(u));
      }
    }
  }
  CHECK(applied > 100);
}
