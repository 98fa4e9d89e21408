#include <random>   // for mt19937_64
#include <sstream>  // for stringstream

#include <catch_amalgamated.hpp>

#include "partmon/exception.hpp"
#include "partmon/generators.hpp"
#include "partmon/normal_form.hpp"
#include "partmon/relations.hpp"
#include "partmon/verify.hpp"

using namespace partmon;

namespace {
  Word et(std::string const& s, degree_type n = 3) {
    return parse_word(s, n, Alphabet::ET);
  }

  Word random_word(std::mt19937_64& rng, degree_type n, std::size_t max_len) {
    auto const letters = letters_of(n, Alphabet::ET);
    Word       w(n, Alphabet::ET);
    for (std::size_t i = 1 + rng() % max_len; i > 0; --i) {
      w.push_back(letters[rng() % letters.size()]);
    }
    return w;
  }

  void require_valid(Certificate const& c, Word const& from, Word const& to) {
    REQUIRE(c.start() == from);
    REQUIRE(c.end() == to);
    auto const r = replay(c, ImageCheck::words);
    INFO(r.message);
    REQUIRE(r.ok);
  }
}  // namespace

TEST_CASE("certificates compose, reverse and serialize", "[certificate]") {
  Derivation d(et("e1 e1 e2"));
  d.apply("R1", {1}, 0, Direction::forward);
  d.apply("R2", {1, 2}, 0, Direction::forward);
  Certificate const c = d.certificate();
  require_valid(c, et("e1 e1 e2"), et("e2 e1"));
  require_valid(c.reversed(), et("e2 e1"), et("e1 e1 e2"));
  require_valid(c.then(c.reversed()), c.start(), c.start());
  require_valid(c.embedded(et("t1,2"), et("e3")), et("t1,2 e1 e1 e2 e3"), et("t1,2 e2 e1 e3"));
  CHECK_THROWS(c.then(c));

  std::string const text = to_jsonl(c);
  CHECK(from_jsonl(text).steps() == c.steps());
  CHECK(to_jsonl(from_jsonl(text)) == text);

  // a corrupted step is rejected
  std::vector<Step> steps = c.steps();
  steps[1].pos            = 1;
  CHECK_FALSE(replay(Certificate(c.start(), steps, c.end())).ok);
  CHECK_THROWS_AS(from_jsonl("{\"degree\": 3}"), Exception);
}

TEST_CASE("macro steps are checked by evaluation", "[certificate]") {
  Word const u = parse_word("s1 s2 s1", 3, Alphabet::SET);
  Word const v = parse_word("s2 s1 s2", 3, Alphabet::SET);
  Derivation d(u);
  d.macro(Macro::SymGroup, 0, 3, v);
  require_valid(d.certificate(), u, v);
  Derivation bad(u);
  CHECK_THROWS(bad.macro(Macro::SymGroup, 0, 3, parse_word("s1", 3, Alphabet::SET)));
}

TEST_CASE("bounded search", "[search]") {
  auto const rels = instantiate_relations(family_ids("R1-R10"), 3);
  auto const c    = bidirectional_search(et("t1,2 t2,3"), et("t2,3 t1,3"), rels);
  REQUIRE(c);
  require_valid(*c, et("t1,2 t2,3"), et("t2,3 t1,3"));
  auto const one = single_step(et("e1 e2"), et("e2 e1"), rels);
  REQUIRE(one);
  CHECK(one->size() == 1);
  CHECK(one->steps()[0].rel == "R2");
}

TEST_CASE("T words", "[identities]") {
  CHECK(canonical_t_word(Equivalence(3)).empty());
  CHECK(to_string(canonical_t_word(parse_equivalence("(1,3|2)"))) == "t1,3");
  std::vector<std::uint32_t> lab(4);
  for (std::uint32_t a = 0; a < 4; ++a) {
    for (std::uint32_t b = 0; b < 4; ++b) {
      for (std::uint32_t c = 0; c < 4; ++c) {
        Equivalence const e = Equivalence::from_labels({0, a, b, c});
        Word const        w = canonical_t_word(e);
        REQUIRE((w.empty() ? Diagram::identity(4) : eval_phi(w)) == t_of_equivalence(e));
      }
    }
  }
  Certificate const c = semilattice_rewrite(et("t1,2 t1,2"), et("t1,2"));
  require_valid(c, et("t1,2 t1,2"), et("t1,2"));
  auto const r5 = elaborate_semilattice(et("t1,3 t1,2"), canonical_t_word(parse_equivalence("(1,2,3)")));
  REQUIRE(r5);
  CHECK(r5->number_of_macro_steps() == 0);
}

TEST_CASE("EZ identities and Z relations", "[identities]") {
  for (degree_type n = 3; n <= 4; ++n) {
    for (auto part : {EzPart::i_left, EzPart::i_right, EzPart::ii_left, EzPart::ii_right,
                      EzPart::ii_square, EzPart::ii_square_swapped, EzPart::iii}) {
      Certificate const c = ez_certificate(n, part, 1, 2);
      REQUIRE(replay(c, ImageCheck::words).ok);
    }
    REQUIRE(replay(ez_certificate(n, EzPart::iv, 1, 2, 3), ImageCheck::words).ok);
  }
  for (auto const& z : instantiate_relations(family_ids("Z"), 4)) {
    Certificate const c = zrel_rewrite(z);
    INFO(z.id << " " << to_string(z.subs));
    require_valid(c, z.lhs, z.rhs);
  }
}

TEST_CASE("z words", "[insn]") {
  CHECK(z_word_for(PartialPerm(std::vector<degree_type>{0, 1, 3})) == z_word(3, 1, 2));
  CHECK(z_word_for(PartialPerm(std::vector<degree_type>{0, 2, 3}))
        == z_word(3, 1, 2) + z_word(3, 2, 1));
  std::size_t count = 0;
  for (auto const& d : enumerate_Pn(3)) {
    if (auto p = d.as_partial_perm(); p && p->rank() < 3) {
      ++count;
      REQUIRE(eval_phi(z_word_for(*p)) == d);
    }
  }
  CHECK(count == 28);
  auto const c = insn_transport(3, {{1, 2}, {2, 1}, {1, 2}}, {{1, 2}});
  REQUIRE(c);
  CHECK(replay(*c, ImageCheck::relations).ok);
  auto const same = insn_transport(3, {{1, 2}}, {{1, 2}});
  REQUIRE(same);
  CHECK(same->size() == 0);
}

TEST_CASE("normal forms", "[normal-form]") {
  auto [nf1, c1] = normal_form_ET(et("e1"));
  CHECK(nf1.eps == Equivalence(3));
  CHECK(nf1.alpha == PartialPerm(std::vector<degree_type>{0, 2, 3}));
  CHECK(nf1.eta == Equivalence(3));
  require_valid(c1, et("e1"), nf1.word);

  auto [nf2, c2] = normal_form_ET(et("t1,2"));
  CHECK(nf2.eps == parse_equivalence("(1,2|3)"));
  CHECK(nf2.alpha == PartialPerm(std::vector<degree_type>{1, 0, 3}));
  CHECK(nf2.eta == parse_equivalence("(1,2|3)"));
  require_valid(c2, et("t1,2"), nf2.word);

  std::mt19937_64 rng(3);
  for (int k = 0; k < 200; ++k) {
    Word const w  = random_word(rng, 4, 8);
    auto [nf, c]  = normal_form_ET(w);
    REQUIRE(eval_phi(nf.word) == eval_phi(w));
    REQUIRE(nf.word == normal_form_of(eval_phi(w)).word);
    REQUIRE(replay(c, ImageCheck::relations).ok);
  }
}

TEST_CASE("normal-form stages", "[normal-form]") {
  W123 const a = to_w123(et("e1"));
  CHECK(a.w1.empty());
  CHECK(a.w3.empty());
  CHECK(a.w2.size() == 2);
  W123 const b = to_w123(et("t1,2"));
  CHECK(to_string(b.w1) == "t1,2");
  CHECK(to_string(b.w3) == "t1,2");
  std::mt19937_64 rng(5);
  for (int k = 0; k < 200; ++k) {
    Word const w   = random_word(rng, 4, 6);
    W123 const x   = to_w123(w);
    TUT const  t1  = to_tut1(w);
    TUT const  t2  = to_tut2(w);
    REQUIRE(replay(x.cert, ImageCheck::relations).ok);
    REQUIRE(replay(t1.cert, ImageCheck::relations).ok);
    REQUIRE(replay(t2.cert, ImageCheck::relations).ok);
    REQUIRE(t1.eps == eval_phi(w).ker());
    REQUIRE(t2.eta == eval_phi(w).coker());
    REQUIRE(z_image(4, t2.u).rank() == eval_phi(w).rank());
  }
}

TEST_CASE("decide_sim", "[normal-form]") {
  Decision const a = decide_sim(et("e1 e2"), et("e2 e1"));
  REQUIRE(a.equal);
  CHECK(a.certificate->size() == 1);
  CHECK(a.certificate->steps()[0].rel == "R2");
  Decision const b = decide_sim(et("t1,2 e1 t1,2"), et("t1,2"));
  REQUIRE(b.equal);
  CHECK(b.certificate->steps()[0].rel == "R7");
  CHECK_FALSE(decide_sim(et("e1"), et("e2")).equal);
  CHECK_THROWS_AS(decide_sim(et("e1"), et("e1", 4)), DegreeMismatch);
}
