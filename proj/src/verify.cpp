#include "partmon/verify.hpp"

#include <algorithm>      // for max, sort
#include <chrono>         // for steady_clock
#include <map>            // for map
#include <random>         // for mt19937_64
#include <set>            // for set
#include <unordered_map>  // for unordered_map
#include <unordered_set>  // for unordered_set

#include "partmon/exception.hpp"
#include "partmon/full.hpp"
#include "partmon/generators.hpp"
#include "partmon/relations.hpp"
#include "partmon/search.hpp"

namespace partmon {

  namespace {
    constexpr std::size_t max_messages = 8;

    class Timer {
     public:
      explicit Timer(Report& r) : _r(r), _t0(std::chrono::steady_clock::now()) {}

      Report done() {
        _r.elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - _t0)
                         .count();
        return std::move(_r);
      }

      Timer(Timer const&)            = delete;
      Timer& operator=(Timer const&) = delete;

     private:
      Report&                               _r;
      std::chrono::steady_clock::time_point _t0;
    };

    Report start(std::string check, degree_type n) {
      Report r;
      r.check = std::move(check);
      r.n     = n;
      return r;
    }

    std::uint64_t factorial(std::size_t n) {
      std::uint64_t f = 1;
      for (std::size_t i = 2; i <= n; ++i) {
        f *= i;
      }
      return f;
    }

    std::uint64_t binomial(std::size_t n, std::size_t k) {
      std::uint64_t b = 1;
      for (std::size_t i = 1; i <= k; ++i) {
        b = b * (n - k + i) / i;
      }
      return b;
    }

    std::vector<Diagram> singular_diagrams(degree_type n) {
      std::vector<Diagram> out;
      for_each_diagram(n, [&](Diagram const& d) {
        if (d.is_singular()) {
          out.push_back(d);
        }
      });
      return out;
    }

    // Closure of gens under products; returns the set and the number of
    // rounds until nothing new appears.
    std::pair<std::unordered_set<Diagram>, std::size_t>
    closure(std::vector<Diagram> const& gens) {
      std::unordered_set<Diagram> seen(gens.begin(), gens.end());
      std::vector<Diagram>        frontier(seen.begin(), seen.end());
      std::size_t                 depth = 1;
      while (!frontier.empty()) {
        std::vector<Diagram> next;
        for (auto const& x : frontier) {
          for (auto const& g : gens) {
            Diagram y = x * g;
            if (seen.insert(y).second) {
              next.push_back(std::move(y));
            }
          }
        }
        if (!next.empty()) {
          ++depth;
        }
        frontier = std::move(next);
      }
      return {std::move(seen), depth};
    }

    Word random_word(std::mt19937_64& rng, std::vector<Letter> const& letters, degree_type n,
                     Alphabet a, std::size_t min_len, std::size_t max_len) {
      std::uniform_int_distribution<std::size_t> len(min_len, max_len);
      std::uniform_int_distribution<std::size_t> pick(0, letters.size() - 1);
      Word                                       w(n, a);
      for (std::size_t i = len(rng); i > 0; --i) {
        w.push_back(letters[pick(rng)]);
      }
      return w;
    }

    // Pairs from a pool of random words, half of them drawn from one image
    // class so that equal pairs are well represented.
    std::vector<std::pair<Word, Word>> sampled_pairs(std::mt19937_64& rng,
                                                     std::vector<Word> const& pool,
                                                     std::size_t count) {
      std::unordered_map<Diagram, std::vector<std::size_t>> classes;
      for (std::size_t i = 0; i < pool.size(); ++i) {
        classes[evaluate(pool[i])].push_back(i);
      }
      std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
      std::vector<std::pair<Word, Word>>          out;
      for (std::size_t c = 0; c < count; ++c) {
        std::size_t const i = pick(rng);
        std::size_t       j = pick(rng);
        if (c % 2 == 0) {
          auto const& cls = classes[evaluate(pool[i])];
          j               = cls[rng() % cls.size()];
        }
        out.emplace_back(pool[i], pool[j]);
      }
      return out;
    }

    std::string str(std::size_t x) {
      return std::to_string(x);
    }

    Report normal_form_words(degree_type n, std::vector<Word> const& words) {
      Report r = start("normal-form-words", n);
      Timer  t(r);
      // image -> normal form, and back
      std::unordered_map<Diagram, Word> by_image;
      std::map<std::string, Diagram>    by_nf;
      for (auto const& w : words) {
        ++r.instances;
        auto [nf, c]       = normal_form_ET(w);
        Diagram const img  = eval_phi(w);
        auto const    res  = replay(c, ImageCheck::words);
        std::string   key  = to_string(nf.word);
        if (!res.ok || c.start() != w || c.end() != nf.word || eval_phi(nf.word) != img) {
          r.fail(to_string(w) + ": " + res.message);
          continue;
        }
        auto [it, fresh] = by_image.emplace(img, nf.word);
        if (!fresh && it->second != nf.word) {
          r.fail(to_string(w) + ": two normal forms for one image");
        }
        auto [jt, fresh2] = by_nf.emplace(key, img);
        if (!fresh2 && jt->second != img) {
          r.fail(to_string(w) + ": one normal form for two images");
        }
      }
      r.detail = "images=" + str(by_image.size());
      return t.done();
    }
  }  // namespace

  void Report::fail(std::string msg) {
    ++failures;
    if (messages.size() < max_messages) {
      messages.push_back(std::move(msg));
    }
  }

  std::uint64_t bell(std::size_t m) {
    if (m > 25) {
      throw InvalidArgument("bell(" + std::to_string(m) + ") does not fit in 64 bits");
    }
    std::vector<std::uint64_t> row{1};
    for (std::size_t i = 0; i < m; ++i) {
      std::vector<std::uint64_t> next{row.back()};
      for (auto x : row) {
        next.push_back(next.back() + x);
      }
      row = std::move(next);
    }
    return row.front();
  }

  void for_each_diagram(degree_type n, std::function<void(Diagram const&)> const& f) {
    if (n < 1 || n > 6) {
      throw InvalidArgument("enumeration needs 1 <= n <= 6, got " + std::to_string(n));
    }
    std::size_t const          m = 2 * n;
    std::vector<std::uint32_t> a(m, 0);
    std::vector<std::uint32_t> top(m, 0);  // max of a[0..i]
    for (;;) {
      f(Diagram::from_labels(a));
      std::size_t i = m - 1;
      while (i > 0 && a[i] > top[i - 1]) {
        --i;
      }
      if (i == 0) {
        return;
      }
      ++a[i];
      top[i] = std::max(top[i - 1], a[i]);
      for (std::size_t j = i + 1; j < m; ++j) {
        a[j]   = 0;
        top[j] = top[i];
      }
    }
  }

  std::vector<Diagram> enumerate_Pn(degree_type n) {
    std::vector<Diagram> out;
    out.reserve(bell(2 * n));
    for_each_diagram(n, [&](Diagram const& d) { out.push_back(d); });
    return out;
  }

  Word factorize_diagram(Diagram const& d) {
    if (d.is_unit()) {
      throw InvalidArgument("factorize_diagram needs a singular diagram");
    }
    return normal_form_of(d).word;
  }

  std::vector<Letter> letters_of(degree_type n, Alphabet a) {
    std::vector<Letter> out;
    switch (a) {
      case Alphabet::ET:
        for (degree_type r = 1; r <= n; ++r) {
          out.push_back(letter_e(r));
        }
        for (degree_type i = 1; i <= n; ++i) {
          for (degree_type j = i + 1; j <= n; ++j) {
            out.push_back(letter_t(i, j));
          }
        }
        break;
      case Alphabet::SET:
        out.push_back(letter_ee());
        if (n >= 2) {
          out.push_back(letter_tt());
        }
        for (degree_type i = 1; i < n; ++i) {
          out.push_back(letter_s(i));
        }
        break;
      case Alphabet::F:
        for (degree_type i = 1; i <= n; ++i) {
          for (degree_type j = 1; j <= n; ++j) {
            if (i != j) {
              out.push_back(letter_f(i, j));
            }
          }
        }
        break;
    }
    return out;
  }

  std::vector<Word> all_words(degree_type n, Alphabet a, std::size_t max_length) {
    auto const        letters = letters_of(n, a);
    std::vector<Word> out{Word(n, a)};
    for (std::size_t i = 0; i < out.size(); ++i) {
      if (out[i].size() < max_length) {
        for (auto const& x : letters) {
          Word w = out[i];
          w.push_back(x);
          out.push_back(std::move(w));
        }
      }
    }
    return out;
  }

  Report verify_generation(degree_type n) {
    Report r = start("generation", n);
    Timer  t(r);
    if (n < 2) {
      throw InvalidArgument("generation needs n >= 2");
    }
    std::vector<Diagram> gens;
    for (degree_type i = 1; i <= n; ++i) {
      gens.push_back(gen_e(n, i));
      for (degree_type j = i + 1; j <= n; ++j) {
        gens.push_back(gen_t(n, i, j));
      }
    }
    auto [closed, depth] = closure(gens);
    r.instances          = closed.size();
    std::uint64_t const expected = bell(2 * n) - factorial(n);
    for (auto const& d : closed) {
      if (d.is_unit()) {
        r.fail("a unit in the closure: " + to_string(d));
      }
    }
    if (closed.size() != expected) {
      r.fail("closure has " + str(closed.size()) + " elements, expected "
             + std::to_string(expected));
    }
    // closing again adds nothing
    for (auto const& x : closed) {
      for (auto const& g : gens) {
        if (!closed.contains(x * g)) {
          r.fail("closure not closed at " + to_string(x));
        }
      }
    }
    r.detail = "closure=" + str(closed.size()) + " expected=" + std::to_string(expected)
               + " generators=" + str(gens.size()) + " depth=" + str(depth);
    return t.done();
  }

  Report verify_factorization(degree_type n) {
    Report      r = start("factorization", n);
    Timer       t(r);
    std::size_t longest = 0;
    for (auto const& d : singular_diagrams(n)) {
      ++r.instances;
      Word const w = factorize_diagram(d);
      longest      = std::max(longest, w.size());
      if (eval_phi(w) != d) {
        r.fail(to_string(d) + " -> " + to_string(w));
      }
    }
    r.detail = "max_length=" + str(longest);
    return t.done();
  }

  Report verify_relations(std::string const& family, degree_type n) {
    Report r = start("relations " + family, n);
    Timer  t(r);
    for (auto const& x : instantiate_relations(family_ids(family), n)) {
      ++r.instances;
      if (!check_relation_diagrammatically(x)) {
        r.fail(x.id + " " + to_string(x.subs));
      }
    }
    return t.done();
  }

  Report verify_eps_tau(degree_type n) {
    Report r = start("eps-tau-images", n);
    Timer  t(r);
    for (degree_type i = 1; i <= n; ++i) {
      ++r.instances;
      if (eval_Phi(build_eps(n, i)) != gen_e(n, i)) {
        r.fail("eps_" + std::to_string(i));
      }
      for (degree_type j = 1; j <= n; ++j) {
        if (i != j) {
          ++r.instances;
          if (eval_Phi(build_tau(n, i, j)) != gen_t(n, i, j)) {
            r.fail("tau_" + std::to_string(i) + "," + std::to_string(j));
          }
        }
      }
    }
    return t.done();
  }

  namespace {
    // The word set for the E u T checks: exhaustive for n <= 3, sampled above.
    std::pair<std::vector<Word>, std::string> et_words(degree_type n, VerifyOptions const& opt,
                                                       std::mt19937_64& rng) {
      std::vector<Word> words;
      if (n <= 3) {
        std::size_t const len = n == 2 ? 4 : 3;
        words                 = all_words(n, Alphabet::ET, len);
        words.erase(words.begin());  // the empty word is not in the semigroup
        return {std::move(words), "exhaustive length<=" + str(len)};
      }
      auto const letters = letters_of(n, Alphabet::ET);
      for (std::size_t i = 0; i < opt.samples; ++i) {
        words.push_back(random_word(rng, letters, n, Alphabet::ET, 1, 6));
      }
      return {std::move(words), "sampled seed=" + std::to_string(opt.seed)};
    }

    void check_degree(degree_type n, degree_type lo, char const* what) {
      if (n < lo || n > 4) {
        throw InvalidArgument(std::string(what) + " needs " + std::to_string(lo)
                              + " <= n <= 4");
      }
    }
  }  // namespace

  Report verify_normal_forms(degree_type n, VerifyOptions const& opt) {
    check_degree(n, 2, "normal-form checks");
    std::mt19937_64 rng(opt.seed);
    auto [words, range] = et_words(n, opt, rng);
    Report r            = normal_form_words(n, words);
    r.detail += " " + range;
    return r;
  }

  Report verify_decide_sim(degree_type n, VerifyOptions const& opt) {
    check_degree(n, 2, "decide_sim checks");
    std::mt19937_64 rng(opt.seed);
    auto [words, range] = et_words(n, opt, rng);
    Report r            = start("decide_sim", n);
    Timer  t(r);
    std::vector<std::pair<Word, Word>> pairs;
    if (n <= 3) {
      for (auto const& u : words) {
        for (auto const& v : words) {
          pairs.emplace_back(u, v);
        }
      }
      range = "all pairs, " + range;
    } else {
      pairs = sampled_pairs(rng, words, opt.samples);
    }
    std::size_t equal = 0;
    for (auto const& [u, v] : pairs) {
      ++r.instances;
      Decision const d     = decide_sim(u, v);
      bool const     truth = eval_phi(u) == eval_phi(v);
      if (d.equal != truth) {
        r.fail(to_string(u) + " | " + to_string(v) + ": wrong answer");
        continue;
      }
      if (d.equal) {
        ++equal;
        auto const res = replay(*d.certificate, ImageCheck::relations);
        if (!res.ok || d.certificate->start() != u || d.certificate->end() != v) {
          r.fail(to_string(u) + " | " + to_string(v) + ": " + res.message);
        }
      }
    }
    r.detail = range + " equal=" + str(equal);
    return t.done();
  }

  Report verify_completeness(degree_type n) {
    check_degree(n, 2, "normal-form completeness");
    Report r = start("normal-form-completeness", n);
    Timer  t(r);
    std::set<std::tuple<std::vector<std::uint32_t>, std::vector<degree_type>,
                        std::vector<std::uint32_t>>>
        triples;
    for (auto const& d : singular_diagrams(n)) {
      ++r.instances;
      NormalForm const nf = normal_form_of(d);
      triples.emplace(nf.eps.labels(), nf.alpha.images(), nf.eta.labels());
      if (eval_phi(nf.word) != d) {
        r.fail(to_string(d) + " -> " + to_string(nf.word));
      }
    }
    if (triples.size() != r.instances) {
      r.fail(str(triples.size()) + " distinct triples for " + str(r.instances) + " diagrams");
    }
    r.detail = "triples=" + str(triples.size());
    return t.done();
  }

  Report verify_monotonicity(degree_type n, VerifyOptions const& opt) {
    check_degree(n, 2, "monotonicity checks");
    Report          r = start("monotonicity", n);
    Timer           t(r);
    std::mt19937_64 rng(opt.seed);
    auto const      letters = letters_of(n, Alphabet::ET);
    std::size_t     rounds  = 0;
    for (std::size_t i = 0; i < opt.samples; ++i) {
      Word const      w = random_word(rng, letters, n, Alphabet::ET, 1, 8);
      NormalFormTrace tr;
      try {
        (void) normal_form_ET(w, &tr);
      } catch (Exception const& e) {
        r.fail(to_string(w) + ": " + e.what());
        continue;
      }
      auto check = [&](std::vector<std::size_t> const& v, char const* what, auto ok) {
        for (std::size_t k = 1; k < v.size(); ++k) {
          ++r.instances;
          if (!ok(v[k - 1], v[k])) {
            r.fail(to_string(w) + ": " + what + " " + str(v[k - 1]) + " -> " + str(v[k]));
          }
        }
        rounds += v.empty() ? 0 : v.size() - 1;
      };
      check(tr.tut1_k, "tut1 k", [](auto a, auto b) { return b < a; });
      check(tr.tut2_rank, "tut2 rank", [](auto a, auto b) { return b + 1 == a; });
      check(tr.tut3_k, "nf k", [](auto a, auto b) { return b > a; });
    }
    r.detail = "words=" + str(opt.samples) + " rounds=" + str(rounds)
               + " seed=" + std::to_string(opt.seed);
    return t.done();
  }

  std::vector<Report> verify_singular(degree_type n, VerifyOptions const& opt) {
    check_degree(n, 2, "verify singular");
    return {verify_relations("R1-R10", n), verify_normal_forms(n, opt),
            verify_decide_sim(n, opt),     verify_completeness(n),
            verify_monotonicity(n, opt)};
  }

  Report verify_decide_approx(degree_type n, VerifyOptions const& opt) {
    check_degree(n, 1, "decide_approx checks");
    Report          r = start("decide_approx", n);
    Timer           t(r);
    std::mt19937_64 rng(opt.seed);
    std::vector<std::pair<Word, Word>> pairs;
    if (n <= 3) {
      auto const words = all_words(n, Alphabet::SET, 3);
      for (auto const& u : words) {
        for (auto const& v : words) {
          pairs.emplace_back(u, v);
        }
      }
      r.detail = "all pairs, exhaustive length<=3";
    } else {
      auto const        letters = letters_of(n, Alphabet::SET);
      std::vector<Word> pool;
      for (std::size_t i = 0; i < opt.samples; ++i) {
        pool.push_back(random_word(rng, letters, n, Alphabet::SET, 0, 6));
      }
      pairs    = sampled_pairs(rng, pool, opt.samples);
      r.detail = "sampled seed=" + std::to_string(opt.seed);
    }
    std::size_t equal = 0;
    for (auto const& [u, v] : pairs) {
      ++r.instances;
      try {
        Decision const d     = decide_approx(u, v);
        bool const     truth = eval_Phi(u) == eval_Phi(v);
        if (d.equal != truth) {
          r.fail(to_string(u) + " | " + to_string(v) + ": wrong answer");
          continue;
        }
        if (d.equal) {
          ++equal;
          auto const res = replay(*d.certificate, ImageCheck::relations);
          if (!res.ok || d.certificate->start() != u || d.certificate->end() != v) {
            r.fail(to_string(u) + " | " + to_string(v) + ": " + res.message);
          }
        }
      } catch (Exception const& e) {
        r.fail(to_string(u) + " | " + to_string(v) + ": " + e.what());
      }
    }
    r.detail += " equal=" + str(equal);
    return t.done();
  }

  Report verify_psi_transport(degree_type n, VerifyOptions const& opt) {
    check_degree(n, 2, "psi transport checks");
    Report          r = start("psi_transport", n);
    Timer           t(r);
    std::mt19937_64 rng(opt.seed);
    auto const      letters = letters_of(n, Alphabet::ET);
    std::size_t     steps   = 0;
    std::size_t const count = std::min<std::size_t>(opt.samples, 200);
    for (std::size_t i = 0; i < count; ++i) {
      ++r.instances;
      Word const w = random_word(rng, letters, n, Alphabet::ET, 1, 5);
      try {
        auto [nf, c]        = normal_form_ET(w);
        Certificate const p = psi_transport(c);
        steps += p.size();
        auto const res = replay(p, ImageCheck::relations);
        if (!res.ok || p.start() != psi(w) || p.end() != psi(nf.word)) {
          r.fail(to_string(w) + ": " + res.message);
        }
      } catch (Exception const& e) {
        r.fail(to_string(w) + ": " + e.what());
      }
    }
    r.detail = "words=" + str(count) + " seed=" + std::to_string(opt.seed)
               + " steps=" + str(steps);
    return t.done();
  }

  std::vector<Report> verify_full(degree_type n, VerifyOptions const& opt) {
    check_degree(n, 1, "verify full");
    std::vector<Report> out;
    if (n >= 2) {
      out.push_back(verify_relations("R11-R21", n));
    }
    out.push_back(verify_decide_approx(n, opt));
    if (n >= 2) {
      out.push_back(verify_psi_transport(n, opt));
    }
    out.push_back(verify_eps_tau(n));
    return out;
  }

  std::vector<Report> verify_insn(degree_type n, VerifyOptions const& opt) {
    check_degree(n, 2, "verify insn");
    std::vector<Report> out;
    out.push_back(verify_relations("F", n));
    {
      Report r = start("insn-generation", n);
      Timer  t(r);
      std::vector<Diagram> gens;
      for (auto const& x : letters_of(n, Alphabet::F)) {
        gens.push_back(gen_f(n, x.a, x.b));
      }
      auto [closed, depth] = closure(gens);
      r.instances          = closed.size();
      std::uint64_t expected = 0;
      for (std::size_t k = 0; k < n; ++k) {
        expected += binomial(n, k) * binomial(n, k) * factorial(k);
      }
      for (auto const& d : closed) {
        if (!d.as_partial_perm() || d.is_unit()) {
          r.fail("not a singular partial permutation: " + to_string(d));
        }
      }
      if (closed.size() != expected) {
        r.fail("closure has " + str(closed.size()) + " elements, expected "
               + std::to_string(expected));
      }
      r.detail = "closure=" + str(closed.size()) + " expected=" + std::to_string(expected)
                 + " depth=" + str(depth);
      out.push_back(t.done());
    }
    {
      // equal-image F-word pairs are joined by bounded search
      Report r = start("insn-rewriting", n);
      Timer  t(r);
      auto const        rels    = instantiate_relations(family_ids("F"), n);
      auto const        letters = letters_of(n, Alphabet::F);
      std::mt19937_64   rng(opt.seed);
      std::vector<Word> pool;
      for (std::size_t i = 0; i < std::min<std::size_t>(opt.samples, 300); ++i) {
        pool.push_back(random_word(rng, letters, n, Alphabet::F, 1, 3));
      }
      std::size_t equal = 0;
      for (auto const& [u, v] : sampled_pairs(rng, pool, pool.size())) {
        ++r.instances;
        bool const truth = eval_f(u) == eval_f(v);
        if (!truth) {
          continue;
        }
        ++equal;
        SearchLimits lim;
        lim.slack      = 3;
        lim.max_states = 1'000'000;
        auto const c   = bidirectional_search(u, v, rels, lim);
        if (!c) {
          r.fail(to_string(u) + " | " + to_string(v) + ": not joined");
        } else if (!replay(*c, ImageCheck::relations).ok) {
          r.fail(to_string(u) + " | " + to_string(v) + ": bad certificate");
        }
      }
      r.detail = "seed=" + std::to_string(opt.seed) + " equal=" + str(equal);
      out.push_back(t.done());
    }
    return out;
  }

}  // namespace partmon
