#include "setrw.hpp"

#include <deque>          // for deque
#include <map>            // for map
#include <unordered_map>  // for unordered_map

#include "partmon/exception.hpp"

namespace partmon::setrw {

  namespace {
    constexpr Direction fwd = Direction::forward;
    constexpr Direction bwd = Direction::backward;

    bool is_x(Letter const& l) {
      return l.kind == LetterKind::Ee || l.kind == LetterKind::Tt;
    }

    Perm s_perm(std::size_t n, std::size_t i) {
      Perm p = identity(static_cast<degree_type>(n));
      std::swap(p[i - 1], p[i]);
      return p;
    }

    struct Group {
      std::map<Perm, Word> words;
      std::vector<Perm>    stab1, stab12;
    };

    Group const& group(degree_type n) {
      thread_local std::unordered_map<degree_type, Group> cache;
      auto it = cache.find(n);
      if (it != cache.end()) {
        return it->second;
      }
      Group            g;
      std::deque<Perm> queue{identity(n)};
      g.words.emplace(identity(n), Word(n, Alphabet::SET));
      while (!queue.empty()) {
        Perm p = queue.front();
        queue.pop_front();
        for (degree_type i = 1; i < n; ++i) {
          Perm q = mul(p, s_perm(n, i));
          if (g.words.count(q) == 0) {
            Word w = g.words.at(p);
            w.push_back(letter_s(i));
            g.words.emplace(q, std::move(w));
            queue.push_back(std::move(q));
          }
        }
      }
      for (auto const& [p, w] : g.words) {
        if (p[0] == 0) {
          g.stab1.push_back(p);
        }
        if (n >= 2 && p[0] < 2 && p[1] < 2) {
          g.stab12.push_back(p);
        }
      }
      return cache.emplace(n, std::move(g)).first->second;
    }

    // Permutations that may slide through x (with t absorbing s1 on either side).
    std::vector<Perm> const& slide(degree_type n, char x) {
      return x == 'e' ? group(n).stab1 : group(n).stab12;
    }

    bool slides(char x, Perm const& p) {
      return x == 'e' ? p[0] == 0 : p[0] < 2 && p[1] < 2;
    }

    // The part of p that passes x; the rest is an s1 absorbed by t.
    Perm through(char x, Perm const& p) {
      if (x == 'e' || p[0] == 0) {
        return p;
      }
      return mul(s_perm(p.size(), 1), p);
    }

    bool absorbed(char x, Perm const& p) {
      return x == 't' && p[0] != 0;
    }

    std::vector<std::size_t> xpos(Word const& w) {
      std::vector<std::size_t> out;
      for (std::size_t i = 0; i < w.size(); ++i) {
        if (is_x(w.letters()[i])) {
          out.push_back(i);
        }
      }
      return out;
    }

    // Block i sits between the (i-1)-th and i-th e/t letters.
    std::pair<std::size_t, std::size_t> block(Word const& w, std::size_t i) {
      auto const x = xpos(w);
      return {i == 0 ? 0 : x[i - 1] + 1, i == x.size() ? w.size() : x[i]};
    }

    void set_block(Derivation& d, std::size_t i, Word const& to) {
      auto [b, e] = block(d.current(), i);
      d.macro(Macro::SymGroup, b, e - b, to);
    }

    char xchar(Word const& w, std::size_t p) {
      return w.letters()[p].kind == LetterKind::Ee ? 'e' : 't';
    }

    // The len letters in front of the i-th e/t letter move behind it.
    void push_right(Derivation& d, std::size_t i, std::size_t len) {
      for (std::size_t k = 0; k < len; ++k) {
        std::size_t const p = xpos(d.current())[i];
        degree_type const s = d.current().letters()[p - 1].a;
        d.apply(xchar(d.current(), p) == 'e' ? "R16" : "R17", {s}, p - 1, bwd);
      }
    }

    // The len letters behind the i-th e/t letter move in front of it.
    void push_left(Derivation& d, std::size_t i, std::size_t len) {
      for (std::size_t k = 0; k < len; ++k) {
        std::size_t const p = xpos(d.current())[i];
        degree_type const s = d.current().letters()[p + 1].a;
        d.apply(xchar(d.current(), p) == 'e' ? "R16" : "R17", {s}, p, fwd);
      }
    }

    // Block i becomes [s1] lt mid rt [s1]; the outer s1 letters are absorbed
    // by the neighbouring t letters, lt moves left and rt moves right.
    void split(Derivation& d, std::size_t i, bool a, Perm const& lt, Word const& mid,
               Perm const& rt, bool b) {
      degree_type const n = d.degree();
      Word              target(n, Alphabet::SET);
      if (a) {
        target.push_back(letter_s(1));
      }
      target += word_of(n, lt);
      target += mid;
      target += word_of(n, rt);
      if (b) {
        target.push_back(letter_s(1));
      }
      set_block(d, i, target);
      if (b) {
        d.apply("R15.4", {}, xpos(d.current())[i] - 1, bwd);
      }
      push_right(d, i, word_of(n, rt).size());
      if (a) {
        d.apply("R15.3", {}, xpos(d.current())[i - 1], bwd);
      }
      push_left(d, i - 1, word_of(n, lt).size());
    }

    struct Plan {
      Shape                              s;
      std::vector<std::pair<Perm, Perm>> kh;  // per block: left s1 factor, right slide
    };

    // Block by block, the least permutation reachable by sliding; ties
    // (possible next to t) are broken by the least overall result.
    Plan plan(degree_type n, Shape const& s, std::size_t i) {
      std::size_t const m = s.x.size();
      if (i > m) {
        return {s, {}};
      }
      Perm const        id = identity(n);
      std::vector<Perm> ks{id};
      if (i > 0 && s.x[i - 1] == 't') {
        ks.push_back(s_perm(n, 1));
      }
      std::vector<Perm> const one{id};
      auto const&             hs = i < m ? slide(n, s.x[i]) : one;
      Perm                    best;
      std::vector<std::pair<Perm, Perm>> ties;
      for (auto const& k : ks) {
        Perm const kg = mul(k, s.g[i]);
        for (auto const& h : hs) {
          Perm c = mul(kg, h);
          if (best.empty() || c < best) {
            best = std::move(c);
            ties.clear();
          }
          if (c == best || ties.empty()) {
            ties.emplace_back(k, h);
          }
        }
      }
      Plan out;
      bool have = false;
      for (auto const& [k, h] : ties) {
        Shape t = s;
        t.g[i]  = best;
        if (i < m) {
          t.g[i + 1] = mul(through(s.x[i], inv(h)), t.g[i + 1]);
        }
        Plan r = plan(n, t, i + 1);
        if (!have || r.s.g < out.s.g) {
          r.kh.insert(r.kh.begin(), {k, h});
          out  = std::move(r);
          have = true;
        }
      }
      return out;
    }

    void sweep(Derivation* d, degree_type n, Shape& s) {
      Plan const        p  = plan(n, s, 0);
      std::size_t const m  = s.x.size();
      Perm const        id = identity(n);
      if (d != nullptr) {
        for (std::size_t i = 0; i <= m; ++i) {
          auto const& [k, h] = p.kh[i];
          Perm const hinv    = inv(h);
          char const x       = i < m ? s.x[i] : 'e';
          split(*d, i, k != id, id, word_of(n, p.s.g[i]), through(x, hinv),
                absorbed(x, hinv));
        }
      }
      s = p.s;
    }

    struct Side {
      std::vector<degree_type>              l;
      std::string                           x;
      std::vector<std::vector<degree_type>> mids;
      std::vector<degree_type>              r;
    };

    struct Rule {
      char const* id;
      Side        lhs;
      Side        rhs;
      degree_type need;
    };

    std::vector<Rule> const& rules() {
      using V = std::vector<degree_type>;
      static V const                 g{2, 3, 1, 2};
      static std::vector<Rule> const r{
          {"R14.1", {{}, "ee", {{}}, {}}, {{}, "e", {}, {}}, 2},
          {"R14.2", {{}, "e", {}, {}}, {{}, "ete", {{}, {}}, {}}, 2},
          {"R15.1", {{}, "tt", {{}}, {}}, {{}, "t", {}, {}}, 2},
          {"R15.2", {{}, "t", {}, {}}, {{}, "tet", {{}, {}}, {}}, 2},
          {"R18.1", {{1}, "ee", {{1}}, {}}, {{}, "ee", {{1}}, {1}}, 2},
          {"R18.2", {{}, "ee", {{1}}, {1}}, {{}, "ee", {{1}}, {}}, 2},
          {"R19", {{}, "tt", {{2}}, {2}}, {{2}, "tt", {{2}}, {}}, 3},
          {"R20", {{}, "tt", {g}, g}, {g, "tt", {g}, {}}, 4},
          {"R21", {{}, "te", {{2, 1}}, {1, 2}}, {{2, 1}, "et", {{1, 2}}, {}}, 3},
      };
      return r;
    }

    Word s_word(degree_type n, std::vector<degree_type> const& v) {
      Word w(n, Alphabet::SET);
      for (auto i : v) {
        w.push_back(letter_s(i));
      }
      return w;
    }

    Perm s_word_perm(degree_type n, std::vector<degree_type> const& v) {
      Perm p = identity(n);
      for (auto i : v) {
        p = mul(p, s_perm(n, i));
      }
      return p;
    }

    struct Move {
      std::size_t       rule = 0;
      bool              forward = true;
      std::size_t       at = 0;
      std::vector<Perm> ls;
      bool              s1_left  = false;  // s1 t at the first letter
      bool              s1_right = false;  // t s1 at the last letter
    };

    Perm s1_of(degree_type n) {
      return s_perm(n, 1);
    }

    // Perm-level effect of freeing the middle blocks of a pattern: returns
    // false if some right factor cannot slide.
    bool prepare(degree_type n, Shape& s, Move const& mv) {
      Side const& from = mv.forward ? rules()[mv.rule].lhs : rules()[mv.rule].rhs;
      if (mv.s1_left) {
        s.g[mv.at] = mul(s.g[mv.at], s1_of(n));
      }
      if (mv.s1_right) {
        s.g[mv.at + from.x.size()] = mul(s1_of(n), s.g[mv.at + from.x.size()]);
      }
      for (std::size_t j = 1; j < from.x.size(); ++j) {
        std::size_t const b = mv.at + j;
        Perm const&       l = mv.ls[j - 1];
        Perm const        p = s_word_perm(n, from.mids[j - 1]);
        Perm const        r = mul(inv(p), mul(inv(l), s.g[b]));
        if (!slides(s.x[b], r)) {
          return false;
        }
        s.g[b - 1] = mul(s.g[b - 1], through(s.x[b - 1], l));
        s.g[b]     = p;
        s.g[b + 1] = mul(through(s.x[b], r), s.g[b + 1]);
      }
      return true;
    }

    Shape rewrite(degree_type n, Shape const& lit, Move const& mv) {
      Rule const& rule = rules()[mv.rule];
      Side const& from = mv.forward ? rule.lhs : rule.rhs;
      Side const& to   = mv.forward ? rule.rhs : rule.lhs;
      std::size_t const k = from.x.size();
      Shape             out;
      out.x = lit.x.substr(0, mv.at) + to.x + lit.x.substr(mv.at + k);
      out.g.assign(lit.g.begin(), lit.g.begin() + mv.at);
      out.g.push_back(mul(mul(lit.g[mv.at], inv(s_word_perm(n, from.l))),
                          s_word_perm(n, to.l)));
      for (auto const& m : to.mids) {
        out.g.push_back(s_word_perm(n, m));
      }
      out.g.push_back(mul(mul(s_word_perm(n, to.r), inv(s_word_perm(n, from.r))),
                          lit.g[mv.at + k]));
      out.g.insert(out.g.end(), lit.g.begin() + mv.at + k + 1, lit.g.end());
      return canonical(std::move(out));
    }

    template <typename F>
    void for_each_move(degree_type n, Shape const& s, std::size_t max_x, F&& f) {
      Perm const id = identity(n);
      for (std::size_t ri = 0; ri < rules().size(); ++ri) {
        if (n < rules()[ri].need) {
          continue;
        }
        for (bool forward : {true, false}) {
          Side const& from = forward ? rules()[ri].lhs : rules()[ri].rhs;
          Side const& to   = forward ? rules()[ri].rhs : rules()[ri].lhs;
          std::size_t const k = from.x.size();
          if (s.x.size() < k || s.x.size() - k + to.x.size() > max_x) {
            continue;
          }
          for (std::size_t at = 0; at + k <= s.x.size(); ++at) {
            if (s.x.compare(at, k, from.x) != 0) {
              continue;
            }
            Move mv{ri, forward, at, {}};
            // all choices of left factors, depth first
            auto rec = [&](auto&& self, std::size_t j) -> void {
              if (j == k) {
                for (int a = 0; a < (from.x.front() == 't' ? 2 : 1); ++a) {
                  for (int b = 0; b < (from.x.back() == 't' ? 2 : 1); ++b) {
                    mv.s1_left  = a != 0;
                    mv.s1_right = b != 0;
                    Shape lit   = s;
                    if (prepare(n, lit, mv)) {
                      f(mv, rewrite(n, lit, mv));
                    }
                  }
                }
                return;
              }
              char const                  x = s.x[at + j - 1];
              std::vector<Perm>           small{id};
              if (x == 't') {
                small.push_back(s_perm(n, 1));
              }
              auto const& cands = j == 1 ? slide(n, x) : small;
              for (auto const& l : cands) {
                mv.ls.push_back(l);
                self(self, j + 1);
                mv.ls.pop_back();
              }
            };
            rec(rec, 1);
          }
        }
      }
    }

    // Derivation from word_of(s) realizing mv, ending at the canonical word
    // of the result.
    Certificate emit(degree_type n, Shape s, Move const& mv) {
      Rule const& rule = rules()[mv.rule];
      Side const& from = mv.forward ? rule.lhs : rule.rhs;
      Derivation  d(word_of(n, s));
      std::size_t const k = from.x.size();
      if (mv.s1_left) {
        d.apply("R15.4", {}, xpos(d.current())[mv.at], fwd);
        s.g[mv.at] = mul(s.g[mv.at], s1_of(n));
      }
      if (mv.s1_right) {
        d.apply("R15.3", {}, xpos(d.current())[mv.at + k - 1], fwd);
        s.g[mv.at + k] = mul(s1_of(n), s.g[mv.at + k]);
      }
      for (std::size_t j = 1; j < k; ++j) {
        std::size_t const b = mv.at + j;
        Perm const&       l = mv.ls[j - 1];
        Perm const        p = s_word_perm(n, from.mids[j - 1]);
        Perm const        r = mul(inv(p), mul(inv(l), s.g[b]));
        split(d, b, absorbed(s.x[b - 1], l), through(s.x[b - 1], l),
              s_word(n, from.mids[j - 1]), through(s.x[b], r), absorbed(s.x[b], r));
        s.g[b - 1] = mul(s.g[b - 1], through(s.x[b - 1], l));
        s.g[b]     = p;
        s.g[b + 1] = mul(through(s.x[b], r), s.g[b + 1]);
      }
      set_block(d, mv.at,
                word_of(n, mul(s.g[mv.at], inv(s_word_perm(n, from.l))))
                    + s_word(n, from.l));
      set_block(d, mv.at + k,
                s_word(n, from.r)
                    + word_of(n, mul(inv(s_word_perm(n, from.r)), s.g[mv.at + k])));
      d.apply(rule.id, {}, xpos(d.current())[mv.at] - from.l.size(),
              mv.forward ? fwd : bwd);
      Shape t = shape_of(d.current());
      sweep(&d, n, t);
      return d.certificate();
    }

    std::string key(Shape const& s) {
      std::string k = s.x;
      k += '|';
      for (auto const& p : s.g) {
        k.append(p.begin(), p.end());
      }
      return k;
    }
  }  // namespace

  Perm identity(degree_type n) {
    Perm p(n);
    for (degree_type i = 0; i < n; ++i) {
      p[i] = static_cast<std::uint8_t>(i);
    }
    return p;
  }

  Perm mul(Perm const& a, Perm const& b) {
    Perm c(a.size());
    for (std::size_t x = 0; x < a.size(); ++x) {
      c[x] = b[a[x]];
    }
    return c;
  }

  Perm inv(Perm const& a) {
    Perm c(a.size());
    for (std::size_t x = 0; x < a.size(); ++x) {
      c[a[x]] = static_cast<std::uint8_t>(x);
    }
    return c;
  }

  Perm perm_of(Word const& w, std::size_t pos, std::size_t len) {
    Perm p = identity(w.degree());
    for (std::size_t i = pos; i < pos + len; ++i) {
      auto const& l = w.letters()[i];
      if (l.kind != LetterKind::S) {
        throw InvalidArgument("not a word over S");
      }
      p = mul(p, s_perm(w.degree(), l.a));
    }
    return p;
  }

  Word const& word_of(degree_type n, Perm const& p) {
    return group(n).words.at(p);
  }

  Shape shape_of(Word const& w) {
    Shape             s;
    std::size_t       b = 0;
    for (std::size_t i = 0; i <= w.size(); ++i) {
      if (i == w.size() || is_x(w.letters()[i])) {
        s.g.push_back(perm_of(w, b, i - b));
        if (i < w.size()) {
          s.x += xchar(w, i);
        }
        b = i + 1;
      }
    }
    return s;
  }

  Word word_of(degree_type n, Shape const& s) {
    Word w = word_of(n, s.g[0]);
    for (std::size_t i = 0; i < s.x.size(); ++i) {
      w.push_back(s.x[i] == 'e' ? letter_ee() : letter_tt());
      w += word_of(n, s.g[i + 1]);
    }
    return w;
  }

  Shape canonical(Shape s) {
    sweep(nullptr, static_cast<degree_type>(s.g[0].size()), s);
    return s;
  }

  Certificate to_canonical(Word const& w) {
    Derivation d(w);
    Shape      s = shape_of(w);
    sweep(&d, w.degree(), s);
    if (d.current() != word_of(w.degree(), s)) {
      throw Exception("internal: sweep ends at " + to_string(d.current()));
    }
    return d.certificate();
  }

  std::vector<std::pair<std::string, Shape>> neighbours(Shape const& s, std::size_t max_x) {
    std::vector<std::pair<std::string, Shape>> out;
    for_each_move(static_cast<degree_type>(s.g[0].size()), s, max_x,
                  [&](Move const& mv, Shape const& to) {
                    out.emplace_back(std::string(rules()[mv.rule].id)
                                         + (mv.forward ? "+" : "-") + "@"
                                         + std::to_string(mv.at),
                                     to);
                  });
    return out;
  }

  std::optional<Certificate> connect(Word const& u, Word const& v, Limits const& limits) {
    degree_type const n  = u.degree();
    Shape const       su = canonical(shape_of(u));
    Shape const       sv = canonical(shape_of(v));
    std::size_t const max_x = std::max(su.x.size(), sv.x.size()) + limits.slack;

    struct Node {
      std::string parent;
      Move        mv;
      Shape       shape;
    };
    std::unordered_map<std::string, Node> seen[2];
    std::vector<std::string>              frontier[2];
    seen[0].emplace(key(su), Node{"", {}, su});
    seen[1].emplace(key(sv), Node{"", {}, sv});
    frontier[0].push_back(key(su));
    frontier[1].push_back(key(sv));
    std::string meet = seen[1].count(key(su)) != 0 ? key(su) : "";

    while (meet.empty() && !frontier[0].empty() && !frontier[1].empty()
           && seen[0].size() + seen[1].size() < limits.max_states) {
      int const                side = frontier[0].size() <= frontier[1].size() ? 0 : 1;
      std::vector<std::string> next;
      for (auto const& k : frontier[side]) {
        Shape const from = seen[side].at(k).shape;
        for_each_move(n, from, max_x, [&](Move const& mv, Shape const& to) {
          if (!meet.empty()) {
            return;
          }
          std::string tk = key(to);
          if (seen[side].count(tk) != 0) {
            return;
          }
          seen[side].emplace(tk, Node{k, mv, to});
          if (seen[1 - side].count(tk) != 0) {
            meet = tk;
          }
          next.push_back(std::move(tk));
        });
        if (!meet.empty()) {
          break;
        }
      }
      frontier[side] = std::move(next);
    }
    if (meet.empty()) {
      return std::nullopt;
    }

    auto chain = [&](int side) {
      std::vector<std::string> ks;
      for (std::string k = meet; !k.empty(); k = seen[side].at(k).parent) {
        ks.push_back(k);
      }
      return ks;
    };
    Certificate result = to_canonical(u);
    auto        left   = chain(0);  // meet ... su
    for (std::size_t i = left.size(); i-- > 1;) {
      Node const& child = seen[0].at(left[i - 1]);
      result            = result.then(emit(n, seen[0].at(left[i]).shape, child.mv));
    }
    auto right = chain(1);  // meet ... sv
    for (std::size_t i = 0; i + 1 < right.size(); ++i) {
      Node const& child = seen[1].at(right[i]);
      result = result.then(emit(n, seen[1].at(right[i + 1]).shape, child.mv).reversed());
    }
    return result.then(to_canonical(v).reversed());
  }

}  // namespace partmon::setrw
