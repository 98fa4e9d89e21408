#include "partmon/full.hpp"

#include <algorithm>      // for sort, unique, find
#include <map>            // for map
#include <unordered_map>  // for unordered_map

#include "partmon/exception.hpp"
#include "partmon/lemmas.hpp"
#include "partmon/search.hpp"
#include "setrw.hpp"

namespace partmon {

  namespace {
    Word on(Word const& w, degree_type n) {
      return Word(n, w.alphabet(), w.letters());
    }

    Certificate lift(Certificate const& c, degree_type n) {
      if (c.degree() == n) {
        return c;
      }
      std::vector<Step> steps(c.steps());
      for (auto& s : steps) {
        if (s.is_macro) {
          s.from = on(s.from, n);
          s.to   = on(s.to, n);
        }
      }
      return Certificate(on(c.start(), n), std::move(steps), on(c.end(), n));
    }

    Word s_letter(degree_type n, degree_type k) {
      return Word(n, Alphabet::SET, {letter_s(k)});
    }

    Word et(degree_type n, std::vector<Letter> letters) {
      return Word(n, Alphabet::ET, std::move(letters));
    }

    // x -> y when both sweep to the same word.
    Certificate by_sweeps(Word const& x, Word const& y) {
      Certificate a = setrw::to_canonical(x);
      Certificate b = setrw::to_canonical(y);
      if (a.end() != b.end()) {
        throw Exception("internal: " + to_string(x) + " and " + to_string(y)
                        + " sweep apart");
      }
      return a.then(b.reversed());
    }

    Certificate const& base_certificate(Word const& u, Word const& v) {
      thread_local std::unordered_map<std::string, Certificate> cache;
      std::string key = std::to_string(u.degree()) + ' ' + to_string(u) + '|' + to_string(v);
      auto        it  = cache.find(key);
      if (it == cache.end()) {
        auto c = setrw::connect(u, v);
        if (!c) {
          throw Exception("no derivation found between " + to_string(u) + " and "
                          + to_string(v));
        }
        it = cache.emplace(std::move(key), std::move(*c)).first;
      }
      return it->second;
    }

    // The S-word of the permutation sending b to image[b - 1] for b <= m and
    // the remaining points to the remaining points in order.
    Word relabel(degree_type n, std::vector<degree_type> const& image) {
      setrw::Perm       p(n);
      std::vector<bool> used(n + 1, false);
      for (std::size_t b = 0; b < image.size(); ++b) {
        p[b]            = static_cast<std::uint8_t>(image[b] - 1);
        used[image[b]] = true;
      }
      degree_type next = 1;
      for (std::size_t b = image.size(); b < n; ++b) {
        while (used[next]) {
          ++next;
        }
        p[b]       = static_cast<std::uint8_t>(next - 1);
        used[next] = true;
      }
      return setrw::word_of(n, p);
    }

    // x -> y through a derivation between base words of lower degree whose
    // subscripts b stand for image[b - 1].
    Certificate via_base(Word const& x, Word const& y, Word const& bx, Word const& by,
                         std::vector<degree_type> const& image) {
      degree_type const n  = x.degree();
      Word const        w  = relabel(n, image);
      Word const        wi = w.reversed();
      Certificate const b  = lift(base_certificate(bx, by), n).embedded(wi, w);
      return by_sweeps(x, b.start()).then(b).then(by_sweeps(b.end(), y));
    }

    // Distinct values in order, and each value's rank among them.
    std::vector<degree_type> ranks(std::vector<degree_type> const& vals,
                                   std::vector<degree_type>&       distinct) {
      distinct = vals;
      std::sort(distinct.begin(), distinct.end());
      distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
      std::vector<degree_type> out;
      for (auto v : vals) {
        out.push_back(static_cast<degree_type>(
            std::find(distinct.begin(), distinct.end(), v) - distinct.begin() + 1));
      }
      return out;
    }

    degree_type base_degree(degree_type n, std::size_t points) {
      return n < 3 ? n : std::max<degree_type>(3, static_cast<degree_type>(points));
    }

    std::size_t psi_length(degree_type n, Letter const& x) {
      return x.kind == LetterKind::E ? build_eps(n, x.a).size() : build_tau(n, x.a, x.b).size();
    }

    std::size_t psi_length(Word const& w, std::size_t upto) {
      std::size_t len = 0;
      for (std::size_t i = 0; i < upto; ++i) {
        len += psi_length(w.degree(), w.letters()[i]);
      }
      return len;
    }

    degree_type swap_point(degree_type x, degree_type k) {
      return x == k ? k + 1 : x == k + 1 ? k : x;
    }

    // e_r s_k -> psi of the three-case word.
    PsiReduction eps_s(degree_type n, degree_type r, degree_type k) {
      auto u_for = [](degree_type m, degree_type r0, degree_type k0) {
        if (k0 + 1 == r0) {
          return et(m, {letter_e(r0), letter_t(r0, r0 - 1), letter_e(r0 - 1)});
        }
        if (k0 == r0) {
          return et(m, {letter_e(r0), letter_t(r0, r0 + 1), letter_e(r0 + 1)});
        }
        return et(m, {letter_e(r0), letter_t(r0, k0), letter_e(k0), letter_t(k0, k0 + 1),
                      letter_e(k0 + 1), letter_t(k0 + 1, r0), letter_e(r0)});
      };
      std::vector<degree_type> distinct;
      std::vector<degree_type> base = ranks({r, k, static_cast<degree_type>(k + 1)}, distinct);
      degree_type const        m    = base_degree(n, distinct.size());
      Word const               u    = u_for(n, r, k);
      Word const bx = build_eps(m, base[0]) + s_letter(m, base[1]);
      Word const by = psi(u_for(m, base[0], base[1]));
      return {u, via_base(build_eps(n, r) + s_letter(n, k), psi(u), bx, by, distinct)};
    }

    std::map<std::tuple<degree_type, std::string, Substitution, bool>, Certificate>& gadget_cache() {
      thread_local std::map<std::tuple<degree_type, std::string, Substitution, bool>, Certificate> c;
      return c;
    }
  }  // namespace

  Certificate symmetric_rewrite(Word const& u, Word const& v) {
    Derivation d(u);
    d.macro(Macro::SymGroup, 0, u.size(), v);
    return d.certificate();
  }

  Certificate conj_eps(Word const& w, degree_type r) {
    degree_type const n = w.degree();
    return by_sweeps(w.reversed() + build_eps(n, r) + w,
                     build_eps(n, s_word_permutation(w)[r - 1]));
  }

  Certificate conj_tau(Word const& w, degree_type i, degree_type j) {
    degree_type const n   = w.degree();
    auto const        img = s_word_permutation(w);
    return by_sweeps(w.reversed() + build_tau(n, i, j) + w,
                     build_tau(n, img[i - 1], img[j - 1]));
  }

  PsiReduction absorb_s(Letter x, degree_type n, degree_type k, bool s_first) {
    if (k < 1 || k >= n) {
      throw InvalidArgument("s_" + std::to_string(k) + " out of range");
    }
    bool const  is_e = x.kind == LetterKind::E;
    Word const  sk   = s_letter(n, k);
    Word const  xw   = is_e ? build_eps(n, x.a) : build_tau(n, x.a, x.b);
    if (s_first) {
      // s x -> s x s s -> x' s
      Derivation d(sk + xw);
      d.apply("R11", {k}, d.current().size(), Direction::backward);
      d.append(is_e ? conj_eps(sk, x.a) : conj_tau(sk, x.a, x.b), 0);
      Letter const y = is_e ? letter_e(swap_point(x.a, k))
                            : letter_t(swap_point(x.a, k), swap_point(x.b, k));
      PsiReduction r = absorb_s(y, n, k, false);
      d.append(r.cert, 0);
      return {r.u, d.certificate()};
    }
    if (is_e) {
      return eps_s(n, x.a, k);
    }
    // t_ij s -> t_ij e_i t_ij s -> t_ij e_i s s t_ij s -> t_ij (e_i s) t_i'j'
    degree_type const i = x.a;
    degree_type const j = x.b;
    Derivation        d(xw + sk);
    d.append(psi_gadget(make_relation("R7", n, {i, j, i}), Direction::backward), 0);
    std::size_t const at = xw.size() + build_eps(n, i).size();
    d.apply("R11", {k}, at, Direction::backward);
    d.append(conj_tau(sk, i, j), at + 1);
    PsiReduction const es = eps_s(n, i, k);
    d.append(es.cert, xw.size());
    Word u = et(n, {x});
    u += es.u;
    u.push_back(letter_t(swap_point(i, k), swap_point(j, k)));
    return {u, d.certificate()};
  }

  Certificate psi_gadget(RelationInstance const& r, Direction dir) {
    auto& cache = gadget_cache();
    auto  key   = std::make_tuple(r.lhs.degree(), r.id, r.subs, dir == Direction::forward);
    auto  it    = cache.find(key);
    if (it != cache.end()) {
      return it->second;
    }
    degree_type const        n = r.lhs.degree();
    std::vector<degree_type> vals;
    for (auto const& [v, x] : r.subs) {
      vals.push_back(x);
    }
    std::vector<degree_type> distinct;
    std::vector<degree_type> base_vals = ranks(vals, distinct);
    RelationInstance const   base
        = make_relation(r.id, base_degree(n, distinct.size()), base_vals);
    Certificate c = via_base(psi(r.lhs), psi(r.rhs), psi(base.lhs), psi(base.rhs), distinct);
    if (dir == Direction::backward) {
      c = c.reversed();
    }
    return cache.emplace(std::move(key), std::move(c)).first->second;
  }

  Certificate psi_transport(Certificate const& c) {
    degree_type const n   = c.degree();
    Word              cur = c.start();
    Derivation        d(psi(cur));
    auto              one = [&](Step const& s) {
      d.append(psi_gadget(cached_relation(s.rel, n, s.subs), s.dir), psi_length(cur, s.pos));
      cur = apply_step(cur, s);
    };
    for (auto const& s : c.steps()) {
      if (!s.is_macro) {
        one(s);
        continue;
      }
      if (s.macro != Macro::LemmaT) {
        throw InvalidArgument("a certificate over E u T has a " + to_string(s.macro)
                              + " step");
      }
      auto found = elaborate_semilattice(s.from, s.to);
      if (!found) {
        throw Exception("could not expand the LemmaT step " + to_string(s.from) + " -> "
                        + to_string(s.to) + " into R3-R5 steps");
      }
      for (Step x : found->steps()) {
        x.pos += s.pos;
        one(x);
      }
    }
    return d.certificate();
  }

  PsiReduction reduce_to_psi(Word const& w) {
    if (w.alphabet() != Alphabet::SET) {
      throw InvalidArgument("reduce_to_psi needs a word over S u {e, t}");
    }
    degree_type const n = w.degree();
    struct Item {
      Letter      x;  // s_k, or e_r / t_ij over E u T
      std::size_t len;
    };
    std::vector<Item> items;
    Derivation        d(w);
    std::size_t       pos = 0;
    for (auto const& x : w.letters()) {
      if (x.kind == LetterKind::S) {
        items.push_back({x, 1});
      } else if (x.kind == LetterKind::Ee) {
        items.push_back({letter_e(1), 1});
      } else {
        // t -> s1 t -> s1 t s1 = tau_12
        d.apply("R15.4", {}, pos, Direction::forward);
        d.apply("R15.3", {}, pos + 1, Direction::forward);
        items.push_back({letter_t(1, 2), 3});
      }
      pos += items.back().len;
    }
    auto is_s = [](Item const& it) { return it.x.kind == LetterKind::S; };
    if (std::all_of(items.begin(), items.end(), is_s)) {
      throw InvalidArgument("reduce_to_psi needs a word containing e or t");
    }
    for (;;) {
      std::size_t idx = 0;
      std::size_t at  = 0;
      bool        s_first = false;
      bool        found   = false;
      for (std::size_t i = 0, p = 0; i < items.size() && !found; p += items[i].len, ++i) {
        if (!is_s(items[i])) {
          continue;
        }
        if (i > 0 && !is_s(items[i - 1])) {
          idx = i - 1;
          at  = p - items[i - 1].len;
          found = true;
        } else if (i + 1 < items.size() && !is_s(items[i + 1])) {
          idx     = i;
          at      = p;
          s_first = true;
          found   = true;
        }
      }
      if (!found) {
        break;
      }
      Item const   sigma = s_first ? items[idx + 1] : items[idx];
      Item const   s     = s_first ? items[idx] : items[idx + 1];
      PsiReduction r     = absorb_s(sigma.x, n, s.x.a, s_first);
      d.append(r.cert, at);
      std::vector<Item> repl;
      for (auto const& y : r.u.letters()) {
        repl.push_back({y, psi_length(n, y)});
      }
      items.erase(items.begin() + idx, items.begin() + idx + 2);
      items.insert(items.begin() + idx, repl.begin(), repl.end());
    }
    Word u(n, Alphabet::ET);
    for (auto const& it : items) {
      u.push_back(it.x);
    }
    if (d.current() != psi(u)) {
      throw Exception("internal: reduction ends at " + to_string(d.current()));
    }
    return {u, d.certificate()};
  }

  std::pair<NormalForm, Certificate> normal_form_full(Word const& w) {
    PsiReduction r       = reduce_to_psi(w);
    auto [nf, c]         = normal_form_ET(r.u);
    return {nf, r.cert.then(psi_transport(c))};
  }

  Decision decide_approx(Word const& w1, Word const& w2) {
    if (w1.degree() != w2.degree() || w1.alphabet() != Alphabet::SET
        || w2.alphabet() != Alphabet::SET) {
      throw InvalidArgument("decide_approx needs two words over S u {e, t} of one degree");
    }
    if (evaluate(w1) != evaluate(w2)) {
      return {false, std::nullopt};
    }
    auto only_s = [](Word const& w) {
      return std::all_of(w.letters().begin(), w.letters().end(),
                         [](Letter const& x) { return x.kind == LetterKind::S; });
    };
    if (w1 == w2) {
      return {true, Certificate(w1, {}, w2)};
    }
    if (w1.degree() >= 2) {
      if (auto c = single_step(w1, w2, cached_family("R11-R21", w1.degree()))) {
        return {true, std::move(*c)};
      }
    }
    if (only_s(w1)) {
      return {true, symmetric_rewrite(w1, w2)};
    }
    if (w1.degree() < 2) {
      // only e: collapse both sides to one letter
      auto collapse = [](Word const& w) {
        Derivation d(w);
        while (d.current().size() > 1) {
          d.apply("R14.1", {}, 0, Direction::forward);
        }
        return d.certificate();
      };
      return {true, collapse(w1).then(collapse(w2).reversed())};
    }
    auto [nf1, c1] = normal_form_full(w1);
    auto [nf2, c2] = normal_form_full(w2);
    if (nf1.word != nf2.word) {
      throw Exception("internal: equal images with different normal forms");
    }
    return {true, c1.then(c2.reversed())};
  }

}  // namespace partmon
