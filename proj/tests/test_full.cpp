#include <random>  // for mt19937_64

#include <catch_amalgamated.hpp>

#include "partmon/exception.hpp"
#include "partmon/full.hpp"
#include "partmon/relations.hpp"
#include "partmon/verify.hpp"

using namespace partmon;

namespace {
  Word set(std::string const& s, degree_type n = 3) {
    return parse_word(s, n, Alphabet::SET);
  }

  Word random_word(std::mt19937_64& rng, degree_type n, Alphabet a, std::size_t min_len,
                   std::size_t max_len) {
    auto const letters = letters_of(n, a);
    Word       w(n, a);
    for (std::size_t i = min_len + rng() % (max_len - min_len + 1); i > 0; --i) {
      w.push_back(letters[rng() % letters.size()]);
    }
    return w;
  }

  Word s_only(std::mt19937_64& rng, degree_type n, std::size_t max_len) {
    Word w(n, Alphabet::SET);
    for (std::size_t i = rng() % (max_len + 1); i > 0; --i) {
      w.push_back(letter_s(1 + rng() % (n - 1)));
    }
    return w;
  }

  void require_valid(Certificate const& c, Word const& from, Word const& to) {
    REQUIRE(c.start() == from);
    REQUIRE(c.end() == to);
    auto const r = replay(c, ImageCheck::relations);
    INFO(r.message);
    REQUIRE(r.ok);
  }
}  // namespace

TEST_CASE("conjugating eps and tau by S words", "[full]") {
  Word const empty(4, Alphabet::SET);
  require_valid(conj_eps(empty, 2), build_eps(4, 2), build_eps(4, 2));
  // s_{r-1} eps_r s_{r-1} -> eps_{r-1}
  for (degree_type r = 2; r <= 4; ++r) {
    Word const s = set("s" + std::to_string(r - 1), 4);
    require_valid(conj_eps(s, r), s + build_eps(4, r) + s, build_eps(4, r - 1));
  }
  std::mt19937_64 rng(1);
  for (int k = 0; k < 100; ++k) {
    Word const w   = s_only(rng, 4, 6);
    auto const img = s_word_permutation(w);
    for (degree_type r = 1; r <= 4; ++r) {
      require_valid(conj_eps(w, r), w.reversed() + build_eps(4, r) + w,
                    build_eps(4, img[r - 1]));
    }
    require_valid(conj_tau(w, 1, 3), w.reversed() + build_tau(4, 1, 3) + w,
                  build_tau(4, img[0], img[2]));
  }
}

TEST_CASE("absorbing an S letter", "[full]") {
  auto r = absorb_s(letter_e(3), 4, 2);
  CHECK(to_string(r.u) == "e3 t2,3 e2");
  require_valid(r.cert, build_eps(4, 3) + set("s2", 4), psi(r.u));
  r = absorb_s(letter_e(3), 4, 1);
  CHECK(to_string(r.u) == "e3 t1,3 e1 t1,2 e2 t2,3 e3");
  for (degree_type n = 2; n <= 5; ++n) {
    for (degree_type k = 1; k < n; ++k) {
      Word const s = set("s" + std::to_string(k), n);
      for (degree_type i = 1; i <= n; ++i) {
        for (bool first : {false, true}) {
          PsiReduction const e = absorb_s(letter_e(i), n, k, first);
          Word const         x = build_eps(n, i);
          require_valid(e.cert, first ? s + x : x + s, psi(e.u));
          for (degree_type j = i + 1; j <= n; ++j) {
            PsiReduction const t = absorb_s(letter_t(i, j), n, k, first);
            Word const         y = build_tau(n, i, j);
            require_valid(t.cert, first ? s + y : y + s, psi(t.u));
          }
        }
      }
    }
  }
}

TEST_CASE("reduction into the image of psi", "[full]") {
  auto r = reduce_to_psi(set("e"));
  CHECK(to_string(r.u) == "e1");
  r = reduce_to_psi(set("t"));
  CHECK(to_string(r.u) == "t1,2");
  require_valid(r.cert, set("t"), psi(r.u));
  CHECK_THROWS_AS(reduce_to_psi(set("s1 s2")), InvalidArgument);
  std::mt19937_64 rng(2);
  for (int k = 0; k < 1000; ++k) {
    Word w = random_word(rng, 4, Alphabet::SET, 1, 7);
    w.push_back(letter_ee());
    PsiReduction const p = reduce_to_psi(w);
    REQUIRE(p.u.alphabet() == Alphabet::ET);
    REQUIRE(eval_Phi(psi(p.u)) == eval_Phi(w));
    REQUIRE(p.cert.start() == w);
    REQUIRE(p.cert.end() == psi(p.u));
  }
}

TEST_CASE("psi gadgets and transport", "[full]") {
  for (degree_type n = 2; n <= 4; ++n) {
    for (auto const& r : instantiate_relations(family_ids("R1-R10"), n)) {
      INFO(r.id << " " << to_string(r.subs) << " n=" << int(n));
      require_valid(psi_gadget(r), psi(r.lhs), psi(r.rhs));
      require_valid(psi_gadget(r, Direction::backward), psi(r.rhs), psi(r.lhs));
    }
  }
  Derivation d(parse_word("e1 e2", 3, Alphabet::ET));
  d.apply("R2", {1, 2}, 0, Direction::forward);
  Certificate const p = psi_transport(d.certificate());
  require_valid(p, psi(d.start()), psi(d.current()));
}

TEST_CASE("decide_approx", "[full]") {
  Decision const a = decide_approx(set("s1 s1"), Word(3, Alphabet::SET));
  REQUIRE(a.equal);
  CHECK(a.certificate->steps()[0].rel == "R11");
  Decision const b = decide_approx(set("e t e"), set("e"));
  REQUIRE(b.equal);
  CHECK(b.certificate->size() == 1);
  CHECK(b.certificate->steps()[0].rel == "R14.2");
  CHECK_FALSE(decide_approx(set("e"), set("t")).equal);
  Decision const c = decide_approx(set("s1 s2 s1"), set("s2 s1 s2"));
  REQUIRE(c.equal);
  require_valid(*c.certificate, set("s1 s2 s1"), set("s2 s1 s2"));
  Decision const d = decide_approx(set("e e e", 1), set("e", 1));
  REQUIRE(d.equal);
  require_valid(*d.certificate, set("e e e", 1), set("e", 1));
}

TEST_CASE("normal forms over S u {e, t}", "[full]") {
  std::mt19937_64 rng(4);
  for (int k = 0; k < 100; ++k) {
    Word w = random_word(rng, 3, Alphabet::SET, 1, 6);
    w.push_back(letter_tt());
    auto [nf, c] = normal_form_full(w);
    REQUIRE(eval_phi(nf.word) == eval_Phi(w));
    require_valid(c, w, psi(nf.word));
  }
}
