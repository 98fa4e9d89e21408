#include "partmon/normal_form.hpp"

#include <algorithm>  // for minmax

#include "partmon/exception.hpp"
#include "rw.hpp"

namespace partmon {

  using rw::bwd;
  using rw::fwd;

  namespace {

    degree_type least_other(degree_type k) {
      return k == 1 ? 2 : 1;
    }

    Word t_letter(degree_type n, degree_type i, degree_type j) {
      Word w(n, Alphabet::ET);
      w.push_back(letter_t(i, j));
      return w;
    }

    Equivalence t_equivalence(Word const& w) {
      return eval_phi(w).ker();
    }

    Equivalence without(Equivalence const& eq, degree_type i) {
      auto classes = eq.classes();
      for (auto& c : classes) {
        std::erase(c, i);
      }
      return Equivalence::from_classes(eq.degree(), classes);
    }

    void check(bool ok, std::string const& what) {
      if (!ok) {
        throw Exception("internal: " + what);
      }
    }

    // The word being rewritten: [left | middle | right | rest], left and
    // right over T, middle the z words of M.
    struct State {
      explicit State(Word const& w) : d(w), n(w.degree()) {}

      Derivation  d;
      degree_type n;
      std::size_t L1 = 0;
      ZPairs      M;
      std::size_t L3 = 0;

      std::size_t mid_end() const {
        return L1 + 3 * M.size();
      }
      std::size_t right_end() const {
        return mid_end() + L3;
      }
      Word left() const {
        return d.current().subword(0, L1);
      }
      Word right() const {
        return d.current().subword(mid_end(), L3);
      }
      PartialPerm beta() const {
        return z_image(n, M);
      }

      void set_left(Word const& to) {
        d.macro(Macro::LemmaT, 0, L1, to);
        L1 = to.size();
      }
      void set_right(Word const& to) {
        d.macro(Macro::LemmaT, mid_end(), L3, to);
        L3 = to.size();
      }
    };

    ////////////////////////////////////////////////////////////////////////
    // w ~ w1 w2 w3
    ////////////////////////////////////////////////////////////////////////

    void first_letter(State& s) {
      Letter const x = s.d.current()[0];
      if (x.kind == LetterKind::E) {
        degree_type const j = least_other(x.a);
        rw::expand_e(s.d, 0, j);
        s.M = {{x.a, j}, {j, x.a}};
        return;
      }
      // t_ij -> t_ij e_i t_ij -> t_ij z_ij z_ji t_ij
      rw::rel(s.d, "R7", {x.a, x.b, x.a}, 0, bwd);
      rw::expand_e(s.d, 1, x.b);
      s.L1 = 1;
      s.M  = {{x.a, x.b}, {x.b, x.a}};
      s.L3 = 1;
    }

    void next_letter(State& s) {
      Letter const x = s.d.current()[s.right_end()];
      if (x.kind == LetterKind::T) {
        ++s.L3;
        return;
      }
      degree_type const i   = x.a;
      Equivalence const eq3 = t_equivalence(s.right());
      auto const        cls = eq3.classes()[eq3.class_of(i)];
      if (cls.size() == 1) {
        // Case 1: e_i commutes with u3
        rw::move_left(s.d, s.right_end(), 1, s.L3);
        degree_type const j = least_other(i);
        rw::expand_e(s.d, s.mid_end(), j);
        s.M.emplace_back(i, j);
        s.M.emplace_back(j, i);
        return;
      }
      // Case 2: u3 -> t_ij u4 with i absent from u4
      degree_type const j = cls[0] == i ? cls[1] : cls[0];
      s.set_right(t_letter(s.n, i, j) + canonical_t_word(without(eq3, i)));
      rw::move_left(s.d, s.right_end(), 1, s.L3 - 1);
      --s.L3;
      // now: u1 u2 t_ij e_i u4
      std::size_t const p    = s.mid_end();
      PartialPerm const b    = s.beta();
      PartialPerm const binv = b.inverse();
      if (binv.defined(i) && binv.defined(j)) {
        // both preimages defined: t_kl u2 ~ u2 t_ij
        degree_type const k = binv(i), l = binv(j);
        rw::run(s.d, twwt(s.n, k, l, s.M), s.L1, true);
        ++s.L1;
        rw::expand_e(s.d, s.mid_end(), j);
        s.M.emplace_back(i, j);
        s.M.emplace_back(j, i);
      } else if (!binv.defined(i)) {
        // i has no preimage: u2 t_ij e_i ~ u2 e_i t_ij e_i ~ u2 e_i ~ u2
        rw::insert_e_right(s.d, s.L1, p, i);
        auto [lo, hi] = std::minmax(i, j);
        rw::rel(s.d, "R8", {lo, hi, i}, p);
        rw::absorb_e_right(s.d, s.L1, p);
      } else {
        // otherwise: u2 t_ij e_i ~ u2 e_j t_ij e_i = u2 z_ji
        rw::insert_e_right(s.d, s.L1, p, j);
        s.M.emplace_back(j, i);
      }
    }

    State run_w123(Word const& w) {
      if (w.alphabet() != Alphabet::ET || w.empty()) {
        throw InvalidArgument("expected a nonempty word over E u T");
      }
      if (w.degree() < 2) {
        throw InvalidArgument("the normal form needs degree >= 2");
      }
      State s(w);
      first_letter(s);
      while (s.right_end() < s.d.current().size()) {
        next_letter(s);
      }
      return s;
    }

    ////////////////////////////////////////////////////////////////////////
    // t_lambda u t_rho with lambda, rho coarsened to ker, coker
    ////////////////////////////////////////////////////////////////////////

    void run_tut1(State& s, Diagram const& image, NormalFormTrace* trace) {
      degree_type const n   = s.n;
      Equivalence       lam = t_equivalence(s.left());
      Equivalence       rho = t_equivalence(s.right());
      s.set_left(canonical_t_word(lam));
      s.set_right(canonical_t_word(rho));
      Equivalence const eps = image.ker();
      Equivalence const eta = image.coker();

      std::size_t k = lam.number_of_classes() + rho.number_of_classes();
      if (trace != nullptr) {
        trace->tut1_k.push_back(k);
      }
      while (!(lam == eps && rho == eta)) {
        PartialPerm const b   = s.beta();
        auto const        dom = b.domain();
        bool              done = false;
        // (i): (a, b) in lambda, images not in rho
        for (std::size_t x = 0; x < dom.size() && !done; ++x) {
          for (std::size_t y = x + 1; y < dom.size() && !done; ++y) {
            degree_type const a = dom[x], bb = dom[y];
            degree_type const c = b(a), dd = b(bb);
            if (lam.related(a, bb) && !rho.related(c, dd)) {
              s.set_left(canonical_t_word(lam) + t_letter(n, a, bb));
              rw::run(s.d, twwt(n, a, bb, s.M), s.L1 - 1);
              --s.L1;
              ++s.L3;
              rho = join(rho, Equivalence::pair(n, c, dd));
              s.set_right(canonical_t_word(rho));
              done = true;
            }
          }
        }
        // (ii): (a, b) not in lambda, images in rho
        for (std::size_t x = 0; x < dom.size() && !done; ++x) {
          for (std::size_t y = x + 1; y < dom.size() && !done; ++y) {
            degree_type const a = dom[x], bb = dom[y];
            degree_type const c = b(a), dd = b(bb);
            if (!lam.related(a, bb) && rho.related(c, dd)) {
              s.set_right(t_letter(n, c, dd) + canonical_t_word(rho));
              rw::run(s.d, twwt(n, a, bb, s.M), s.L1, true);
              ++s.L1;
              --s.L3;
              lam = join(lam, Equivalence::pair(n, a, bb));
              s.set_left(canonical_t_word(lam));
              done = true;
            }
          }
        }
        check(done, "neither coarsening condition holds");
        std::size_t const k2 = lam.number_of_classes() + rho.number_of_classes();
        check(k2 < k, "coarsening did not decrease k");
        k = k2;
        if (trace != nullptr) {
          trace->tut1_k.push_back(k);
        }
      }
    }

    ////////////////////////////////////////////////////////////////////////
    // rank of the middle factor down to rank of the image
    ////////////////////////////////////////////////////////////////////////

    void run_tut2(State& s, Diagram const& image, NormalFormTrace* trace) {
      degree_type const n   = s.n;
      Equivalence const eps = image.ker();
      Equivalence const eta = image.coker();
      Word const        te  = canonical_t_word(eps);
      Word const        th  = canonical_t_word(eta);
      std::size_t const r   = image.rank();
      std::size_t       rk  = s.beta().rank();
      if (trace != nullptr) {
        trace->tut2_rank.push_back(rk);
      }
      while (rk > r) {
        PartialPerm const b = s.beta();
        degree_type       i = 0, j = 0;
        for (auto const& cls : eps.classes()) {
          std::vector<degree_type> in;
          for (auto x : cls) {
            if (b.defined(x)) {
              in.push_back(x);
            }
          }
          if (in.size() >= 2) {
            i = in[0];
            j = in[1];
            break;
          }
        }
        check(i != 0, "no kernel class meets the domain twice");
        // t_eps u t_eta ~ t_eps t_ij e_i t_ij u t_eta ~ t_eps t_ij e_i u t_kl t_eta
        s.set_left(te + t_letter(n, i, j));
        auto [lo, hi] = std::minmax(i, j);
        rw::rel(s.d, "R7", {lo, hi, i}, s.L1 - 1, bwd);
        rw::run(s.d, twwt(n, i, j, s.M), s.L1 + 1);
        s.d.macro(Macro::LemmaT, s.L1 + 1 + 3 * s.M.size(), th.size() + 1, th);
        s.set_left(te);
        rw::expand_e(s.d, s.L1, j);
        s.M.insert(s.M.begin(), {{i, j}, {j, i}});
        std::size_t const rk2 = s.beta().rank();
        check(rk2 + 1 == rk, "rank did not drop by one");
        rk = rk2;
        if (trace != nullptr) {
          trace->tut2_rank.push_back(rk);
        }
      }
    }

    ////////////////////////////////////////////////////////////////////////
    // middle factor moved onto block minima, then z_alpha
    ////////////////////////////////////////////////////////////////////////

    struct Transversal {
      std::vector<degree_type> upper, lower;
    };

    std::vector<Transversal> transversals(Diagram const& d) {
      std::vector<Transversal> out;
      for (auto const& blk : d.blocks()) {
        Transversal t;
        for (auto p : blk) {
          (p.primed ? t.lower : t.upper).push_back(p.index);
        }
        if (!t.upper.empty() && !t.lower.empty()) {
          std::sort(t.upper.begin(), t.upper.end());
          std::sort(t.lower.begin(), t.lower.end());
          out.push_back(std::move(t));
        }
      }
      return out;
    }

    std::size_t agreement(PartialPerm const& b, PartialPerm const& alpha) {
      std::size_t k     = 0;
      auto const  bcod  = b.inverse();
      auto const  alcod = alpha.inverse();
      for (degree_type x = 1; x <= b.degree(); ++x) {
        k += (b.defined(x) && alpha.defined(x)) ? 1 : 0;
        k += (bcod.defined(x) && alcod.defined(x)) ? 1 : 0;
      }
      return k;
    }

    void run_tut3(State& s, Diagram const& image, NormalForm const& nf,
                  NormalFormTrace* trace) {
      degree_type const n   = s.n;
      Word const        te  = canonical_t_word(nf.eps);
      Word const        th  = canonical_t_word(nf.eta);
      auto const        tr  = transversals(image);
      std::size_t const r   = tr.size();
      std::size_t       k   = agreement(s.beta(), nf.alpha);
      if (trace != nullptr) {
        trace->tut3_k.push_back(k);
      }
      while (k < 2 * r) {
        PartialPerm const b = s.beta();
        bool              moved = false;
        for (auto const& t : tr) {
          degree_type const a  = t.upper[0];
          degree_type const bm = t.lower[0];
          degree_type       c  = 0;
          for (auto x : t.upper) {
            if (b.defined(x)) {
              c = x;
            }
          }
          check(c != 0, "transversal block misses the domain");
          degree_type const dd = b(c);
          if (c != a) {
            // u ~ e_a u ~ z_ac z_ca u ~ e_a t_ac z_ca u, then R7 under t_ac
            rw::insert_e_left(s.d, s.L1, s.mid_end(), a);
            rw::expand_e(s.d, s.L1, c);
            rw::ez_i_left(s.d, s.L1 + 2);
            s.set_left(te + t_letter(n, a, c));
            auto [lo, hi] = std::minmax(a, c);
            rw::rel(s.d, "R7", {lo, hi, a}, s.L1 - 1);
            s.set_left(te);
            s.M.insert(s.M.begin(), {c, a});
            moved = true;
            break;
          }
          if (dd != bm) {
            // u ~ u e_b ~ u z_bd z_db ~ u z_bd t_bd e_b, then R7 under t_bd
            std::size_t const p = s.mid_end();
            rw::insert_e_right(s.d, s.L1, p, bm);
            rw::expand_e(s.d, p, dd);
            rw::rel(s.d, "R1", {dd}, p + 2);
            s.M.emplace_back(bm, dd);
            // [u z_bd][t_bd e_b][t_eta]
            std::size_t const q = s.mid_end();
            s.d.macro(Macro::LemmaT, q + 2, s.L3, t_letter(n, bm, dd) + th);
            auto [lo, hi] = std::minmax(bm, dd);
            rw::rel(s.d, "R7", {lo, hi, bm}, q);
            s.L3 = th.size() + 1;
            s.set_right(th);
            moved = true;
            break;
          }
        }
        check(moved, "no block to move although k < 2r");
        std::size_t const k2 = agreement(s.beta(), nf.alpha);
        check(k2 > k, "agreement with alpha did not increase");
        k = k2;
        if (trace != nullptr) {
          trace->tut3_k.push_back(k);
        }
      }
      check(s.beta() == nf.alpha, "middle factor differs from alpha");
      Certificate const zc = z_canonicalize(n, s.M);
      rw::run(s.d, zc, s.L1);
      s.M = z_pairs_for(nf.alpha);
    }

    State pipeline(Word const& w, int stage, NormalFormTrace* trace) {
      State s = run_w123(w);
      if (stage == 0) {
        return s;
      }
      Diagram const image = eval_phi(w);
      run_tut1(s, image, trace);
      if (stage == 1) {
        return s;
      }
      run_tut2(s, image, trace);
      return s;
    }

    TUT as_tut(State const& s) {
      return {t_equivalence(s.left()), s.M, t_equivalence(s.right()),
              s.d.certificate()};
    }
  }  // namespace

  NormalForm normal_form_of(Diagram const& d) {
    if (d.is_unit()) {
      throw InvalidArgument("a unit has no normal form over E u T");
    }
    degree_type const        n = d.degree();
    std::vector<degree_type> img(n, 0);
    for (auto const& t : transversals(d)) {
      img[t.upper[0] - 1] = t.lower[0];
    }
    NormalForm nf{d.ker(), PartialPerm(std::move(img)), d.coker(), Word(n, Alphabet::ET)};
    nf.word = canonical_t_word(nf.eps) + z_word_for(nf.alpha) + canonical_t_word(nf.eta);
    return nf;
  }

  W123 to_w123(Word const& w) {
    State s = run_w123(w);
    return {s.left(), s.M, s.right(), s.d.certificate()};
  }

  TUT to_tut1(Word const& w, NormalFormTrace* trace) {
    return as_tut(pipeline(w, 1, trace));
  }

  TUT to_tut2(Word const& w, NormalFormTrace* trace) {
    return as_tut(pipeline(w, 2, trace));
  }

  std::pair<NormalForm, Certificate> normal_form_ET(Word const& w, NormalFormTrace* trace) {
    State            s     = pipeline(w, 2, trace);
    Diagram const    image = eval_phi(w);
    NormalForm const nf    = normal_form_of(image);
    run_tut3(s, image, nf, trace);
    Certificate c = s.d.certificate();
    check(c.end() == nf.word, "certificate does not end at the normal form");
    return {nf, std::move(c)};
  }

  Decision decide_sim(Word const& u, Word const& v) {
    if (u.degree() != v.degree()) {
      throw DegreeMismatch(u.degree(), v.degree());
    }
    if (eval_phi(u) != eval_phi(v)) {
      return {};
    }
    if (u == v) {
      return {true, Certificate(u, {}, v)};
    }
    if (auto c = single_step(u, v, cached_family("R1-R10", u.degree()))) {
      return {true, std::move(*c)};
    }
    auto [nu, cu] = normal_form_ET(u);
    auto [nv, cv] = normal_form_ET(v);
    check(nu == nv, "equal images with different normal forms");
    return {true, cu.then(cv.reversed())};
  }

}  // namespace partmon
