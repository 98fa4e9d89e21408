#include <unordered_set>  // for unordered_set

#include <catch_amalgamated.hpp>

#include "partmon/exception.hpp"
#include "partmon/generators.hpp"
#include "partmon/verify.hpp"

using namespace partmon;

TEST_CASE("Bell numbers", "[verify]") {
  CHECK(bell(0) == 1);
  CHECK(bell(1) == 1);
  CHECK(bell(4) == 15);
  CHECK(bell(6) == 203);
  CHECK(bell(10) == 115975);
  CHECK_THROWS_AS(bell(26), InvalidArgument);
}

TEST_CASE("enumeration of P_n", "[verify]") {
  CHECK(enumerate_Pn(1).size() == 2);
  for (degree_type n = 1; n <= 4; ++n) {
    auto const                  all = enumerate_Pn(n);
    std::unordered_set<Diagram> seen(all.begin(), all.end());
    CHECK(all.size() == bell(2 * n));
    CHECK(seen.size() == all.size());
  }
  CHECK(enumerate_Pn(3).front() == parse_diagram("{1,2,3,1',2',3'}"));
  CHECK_THROWS_AS(enumerate_Pn(0), InvalidArgument);
  CHECK_THROWS_AS(enumerate_Pn(7), InvalidArgument);
}

TEST_CASE("words of bounded length", "[verify]") {
  CHECK(all_words(3, Alphabet::ET, 2).size() == 1 + 6 + 36);
  CHECK(all_words(3, Alphabet::SET, 3).size() == 85);
  CHECK(letters_of(3, Alphabet::F).size() == 6);
}

TEST_CASE("factorization", "[verify]") {
  CHECK(factorize_diagram(gen_e(3, 1)) == z_word(3, 1, 2) + z_word(3, 2, 1));
  Word const t = factorize_diagram(gen_t(3, 1, 2));
  CHECK(to_string(t).rfind("t1,2 ", 0) == 0);
  CHECK(to_string(t).size() > 10);
  CHECK(eval_phi(t) == gen_t(3, 1, 2));
  CHECK_THROWS_AS(factorize_diagram(Diagram::identity(3)), InvalidArgument);
  for (degree_type n = 2; n <= 3; ++n) {
    Report const r = verify_factorization(n);
    CHECK(r.ok());
    CHECK(r.instances == bell(2 * n) - (n == 2 ? 2 : 6));
  }
}

TEST_CASE("generation closures", "[verify]") {
  Report const r2 = verify_generation(2);
  CHECK(r2.ok());
  CHECK(r2.instances == 13);
  Report const r3 = verify_generation(3);
  CHECK(r3.ok());
  CHECK(r3.instances == 197);
}

TEST_CASE("verification reports at small degree", "[verify]") {
  VerifyOptions opt;
  opt.samples = 200;
  for (auto const& r : verify_singular(2, opt)) {
    INFO(r.check << " " << (r.messages.empty() ? "" : r.messages[0]));
    CHECK(r.ok());
    CHECK(r.instances > 0);
  }
  for (auto const& r : verify_full(2, opt)) {
    INFO(r.check << " " << (r.messages.empty() ? "" : r.messages[0]));
    CHECK(r.ok());
  }
  auto const insn = verify_insn(3, opt);
  for (auto const& r : insn) {
    INFO(r.check << " " << (r.messages.empty() ? "" : r.messages[0]));
    CHECK(r.ok());
  }
  CHECK(insn[1].instances == 28);
  CHECK_THROWS_AS(verify_singular(5), InvalidArgument);
}

TEST_CASE("a failing check is reported", "[verify]") {
  Report r;
  CHECK(r.ok());
  for (int i = 0; i < 20; ++i) {
    r.fail("x");
  }
  CHECK_FALSE(r.ok());
  CHECK(r.failures == 20);
  CHECK(r.messages.size() < 20);
}
