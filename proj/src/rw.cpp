#include "rw.hpp"

#include <algorithm>      // for minmax
#include <string>         // for string
#include <unordered_map>  // for unordered_map

#include "partmon/exception.hpp"
#include "partmon/lemmas.hpp"

namespace partmon::rw {

  namespace {
    bool is(Letter const& x, LetterKind k) {
      return x.kind == k;
    }

    // Runs fn on a fresh derivation of w and replays the result backwards
    // at pos, turning a rewrite of w into one towards w.
    template <typename Fn>
    void reverse_of(Derivation& d, Word const& w, std::size_t pos, Fn&& fn) {
      Derivation local(w);
      fn(local);
      run(d, local.certificate(), pos, true);
    }

    Word zw(degree_type n, degree_type i, degree_type j) {
      return z_word(n, i, j);
    }

    Word ew(degree_type n, degree_type i) {
      Word w(n, Alphabet::ET);
      w.push_back(letter_e(i));
      return w;
    }
  }  // namespace

  void rel(Derivation&                     d,
           char const*                     id,
           std::vector<degree_type> const& values,
           std::size_t                     pos,
           Direction                       dir) {
    d.apply(id, values, pos, dir);
  }

  void run(Derivation& d, Certificate const& c, std::size_t pos, bool reverse) {
    if (reverse) {
      d.append(c.reversed(), pos);
    } else {
      d.append(c, pos);
    }
  }

  void swap_adjacent(Derivation& d, std::size_t pos) {
    Letter const x = d.current()[pos];
    Letter const y = d.current()[pos + 1];
    if (is(x, LetterKind::E) && is(y, LetterKind::E)) {
      rel(d, "R2", {x.a, y.a}, pos);
    } else if (is(x, LetterKind::T) && is(y, LetterKind::T)) {
      rel(d, "R4", {x.a, x.b, y.a, y.b}, pos);
    } else if (is(x, LetterKind::T) && is(y, LetterKind::E)) {
      rel(d, "R6", {x.a, x.b, y.a}, pos);
    } else if (is(x, LetterKind::E) && is(y, LetterKind::T)) {
      rel(d, "R6", {y.a, y.b, x.a}, pos, bwd);
    } else {
      throw InvalidArgument("cannot swap " + to_string(x) + " and " + to_string(y));
    }
  }

  void move_right(Derivation& d, std::size_t pos, std::size_t len, std::size_t over) {
    for (std::size_t m = len; m-- > 0;) {
      for (std::size_t s = 0; s < over; ++s) {
        swap_adjacent(d, pos + m + s);
      }
    }
  }

  void move_left(Derivation& d, std::size_t pos, std::size_t len, std::size_t over) {
    for (std::size_t m = 0; m < len; ++m) {
      for (std::size_t s = 1; s <= over; ++s) {
        swap_adjacent(d, pos + m - s);
      }
    }
  }

  void ez_i_left(Derivation& d, std::size_t pos) {
    rel(d, "R1", {d.current()[pos].a}, pos);
  }

  void ez_i_right(Derivation& d, std::size_t pos) {
    rel(d, "R1", {d.current()[pos + 2].a}, pos + 2);
  }

  void ez_ii_left(Derivation& d, std::size_t pos) {
    // e_j e_i t_ij e_j
    auto const& w = d.current();
    degree_type j = w[pos].a, i = w[pos + 1].a;
    Letter      t = w[pos + 2];
    rel(d, "R2", {j, i}, pos);
    rel(d, "R8", {t.a, t.b, j}, pos + 1);
  }

  void ez_ii_right(Derivation& d, std::size_t pos) {
    // e_i t_ij e_j e_i
    auto const& w = d.current();
    degree_type i = w[pos].a, j = w[pos + 2].a;
    Letter      t = w[pos + 1];
    rel(d, "R2", {j, i}, pos + 2);
    rel(d, "R8", {t.a, t.b, i}, pos);
  }

  void ez_ii_square(Derivation& d, std::size_t pos) {
    degree_type j = d.current()[pos + 2].a;
    Letter      t = d.current()[pos + 1];
    ez_ii_right(d, pos);
    rel(d, "R8", {t.a, t.b, j}, pos + 1);
  }

  void ez_iii(Derivation& d, std::size_t pos) {
    // e_i t e_j e_j t e_i
    auto const& w = d.current();
    degree_type i = w[pos].a, j = w[pos + 2].a;
    Letter      t = w[pos + 1];
    rel(d, "R1", {j}, pos + 2);
    rel(d, "R7", {t.a, t.b, j}, pos + 1);
    rel(d, "R8", {t.a, t.b, i}, pos);
  }

  void ez_iv(Derivation& d, std::size_t pos) {
    // e_k e_i t e_j
    auto const& w = d.current();
    degree_type k = w[pos].a, i = w[pos + 1].a, j = w[pos + 3].a;
    Letter      t = w[pos + 2];
    rel(d, "R2", {k, i}, pos);
    rel(d, "R6", {t.a, t.b, k}, pos + 1, bwd);
    rel(d, "R2", {k, j}, pos + 2);
  }

  void expand_e(Derivation& d, std::size_t pos, degree_type j) {
    degree_type const n = d.degree();
    degree_type const i = d.current()[pos].a;
    reverse_of(d, zw(n, i, j) + zw(n, j, i), pos, [](Derivation& x) { ez_iii(x, 0); });
  }

  void insert_e_before_z(Derivation& d, std::size_t pos) {
    rel(d, "R1", {d.current()[pos].a}, pos, bwd);
  }

  Pairs read_blocks(Word const& w, std::size_t start, std::size_t end) {
    Pairs out;
    std::size_t p = start;
    while (p < end) {
      Letter const& x = w[p];
      if (!is(x, LetterKind::E)) {
        throw InvalidArgument("expected e or z at " + std::to_string(p) + " in "
                              + to_string(w));
      }
      if (p + 2 < end && is(w[p + 1], LetterKind::T) && is(w[p + 2], LetterKind::E)) {
        Letter const& t = w[p + 1];
        degree_type   k = x.a, l = w[p + 2].a;
        auto [lo, hi]   = std::minmax(k, l);
        if (k != l && t.a == lo && t.b == hi) {
          out.emplace_back(k, l);
          p += 3;
          continue;
        }
        throw InvalidArgument("malformed z block at " + std::to_string(p));
      }
      out.emplace_back(x.a, 0);
      ++p;
    }
    return out;
  }

  PartialPerm f_image(degree_type n, degree_type k, degree_type l) {
    std::vector<degree_type> img(n);
    for (degree_type x = 1; x <= n; ++x) {
      img[x - 1] = x;
    }
    img[k - 1] = 0;
    img[l - 1] = k;
    return PartialPerm(std::move(img));
  }

  PartialPerm blocks_image(degree_type n, Pairs const& blocks) {
    PartialPerm p = PartialPerm::identity(n);
    for (auto [k, l] : blocks) {
      if (l == 0) {
        auto img  = p.images();
        for (auto& y : img) {
          if (y == k) {
            y = 0;
          }
        }
        p = PartialPerm(std::move(img));
      } else {
        p = p * f_image(n, k, l);
      }
    }
    return p;
  }

  void absorb_e_right(Derivation& d, std::size_t start, std::size_t end) {
    degree_type const i = d.current()[end].a;
    if (start == end) {
      throw InvalidArgument("e" + std::to_string(i) + " cannot be absorbed");
    }
    Pairs const blocks = read_blocks(d.current(), start, end);
    auto [k, l]        = blocks.back();
    degree_type const n = d.degree();
    if (l == 0) {
      std::size_t const p = end - 1;
      if (k == i) {
        rel(d, "R1", {i}, p);
      } else {
        rel(d, "R2", {k, i}, p);
        absorb_e_right(d, start, p);
      }
      return;
    }
    std::size_t const p = end - 3;
    if (i == l) {
      rel(d, "R1", {l}, p + 2);
    } else if (i == k) {
      ez_ii_right(d, p);
      reverse_of(d, ew(n, l) + zw(n, k, l), p, [](Derivation& x) { ez_ii_left(x, 0); });
      absorb_e_right(d, start, p);
    } else {
      reverse_of(d, ew(n, i) + zw(n, k, l), p, [](Derivation& x) { ez_iv(x, 0); });
      absorb_e_right(d, start, p);
    }
  }

  void absorb_e_left(Derivation& d, std::size_t at, std::size_t end) {
    degree_type const a = d.current()[at].a;
    if (at + 1 == end) {
      throw InvalidArgument("e" + std::to_string(a) + " cannot be absorbed");
    }
    Pairs const blocks  = read_blocks(d.current(), at + 1, end);
    auto [k, l]         = blocks.front();
    degree_type const n = d.degree();
    if (l == 0) {
      if (k == a) {
        rel(d, "R1", {a}, at);
      } else {
        rel(d, "R2", {a, k}, at);
        absorb_e_left(d, at + 1, end);
      }
      return;
    }
    if (a == k) {
      ez_i_left(d, at);
    } else if (a == l) {
      ez_ii_left(d, at);
      reverse_of(d, zw(n, k, l) + ew(n, k), at, [](Derivation& x) { ez_ii_right(x, 0); });
      absorb_e_left(d, at + 3, end);
    } else {
      ez_iv(d, at);
      absorb_e_left(d, at + 3, end);
    }
  }

  void insert_e_right(Derivation& d, std::size_t start, std::size_t end, degree_type i) {
    Word const w = d.current().subword(start, end - start) + ew(d.degree(), i);
    reverse_of(d, w, start, [&](Derivation& x) { absorb_e_right(x, 0, end - start); });
  }

  void insert_e_left(Derivation& d, std::size_t start, std::size_t end, degree_type a) {
    Word const w = ew(d.degree(), a) + d.current().subword(start, end - start);
    reverse_of(d, w, start, [&](Derivation& x) { absorb_e_left(x, 0, end - start + 1); });
  }

  void zrel(Derivation&         d,
            std::string const&  id,
            Substitution const& subs,
            std::size_t         pos,
            Direction           dir) {
    thread_local std::unordered_map<std::string, Certificate> cache;
    std::string key = id + '/' + std::to_string(d.degree()) + '/' + to_string(subs);
    auto        it  = cache.find(key);
    if (it == cache.end()) {
      it = cache
               .emplace(std::move(key),
                        zrel_rewrite(cached_relation(id, d.degree(), subs)))
               .first;
    }
    run(d, it->second, pos, dir == bwd);
  }

}  // namespace partmon::rw
