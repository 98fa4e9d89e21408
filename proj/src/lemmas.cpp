#include "partmon/lemmas.hpp"

#include <algorithm>  // for minmax

#include "partmon/exception.hpp"
#include "rw.hpp"

namespace partmon {

  using rw::bwd;
  using rw::fwd;
  using rw::rel;

  namespace {
    Word E(degree_type n, degree_type i) {
      Word w(n, Alphabet::ET);
      w.push_back(letter_e(i));
      return w;
    }

    Word T(degree_type n, degree_type i, degree_type j) {
      Word w(n, Alphabet::ET);
      w.push_back(letter_t(i, j));
      return w;
    }

    Word Z(degree_type n, degree_type i, degree_type j) {
      return z_word(n, i, j);
    }

    degree_type var(RelationInstance const& r, char c) {
      for (auto const& [name, value] : r.subs) {
        if (name == c) {
          return value;
        }
      }
      throw InvalidArgument("relation " + r.id + " has no variable " + c);
    }

    // z_ij z_ik -> e_j z_ik
    void chain_a(Derivation& d) {
      rw::insert_e_before_z(d, 3);
      rw::ez_ii_right(d, 0);
      rel(d, "R2", {d.current()[0].a, d.current()[1].a}, 0);
      rw::ez_i_left(d, 1);
    }

    // z_jk z_ij -> e_j z_ik
    void chain_b(Derivation& d, degree_type i, degree_type j, degree_type k) {
      auto [jk0, jk1] = std::minmax(j, k);
      auto [ij0, ij1] = std::minmax(i, j);
      auto [ik0, ik1] = std::minmax(i, k);
      rel(d, "R2", {k, i}, 2);
      rel(d, "R6", {jk0, jk1, i}, 1);
      rel(d, "R2", {j, i}, 0);
      rel(d, "R6", {ij0, ij1, k}, 3, bwd);
      rel(d, "R2", {k, j}, 4);
      rel(d, "R5", {k, j, i}, 2);
      rel(d, "R6", {ik0, ik1, j}, 3);
      rel(d, "R8", {ij0, ij1, j}, 1);
      rel(d, "R2", {i, j}, 0);
    }

    // z_ik z_jk -> e_j z_ik
    void chain_c(Derivation& d, degree_type i, degree_type j, degree_type k) {
      degree_type const n = d.degree();
      rel(d, "R1", {k}, 2, bwd);
      rw::ez_ii_left(d, 3);
      Derivation iv(E(n, j) + Z(n, i, k));
      rw::ez_iv(iv, 0);
      rw::run(d, iv.certificate(), 0, true);
      rw::ez_i_right(d, 1);
    }

    template <typename Fn>
    void towards(Derivation& d, Word const& w, std::size_t pos, Fn&& fn) {
      Derivation local(w);
      fn(local);
      rw::run(d, local.certificate(), pos, true);
    }

    // z_ki z_ij z_jl z_lk -> z_kl z_li z_ij z_jk, by R1 and R10.
    void observation(Derivation& d, degree_type i, degree_type j, degree_type k,
                     degree_type l) {
      rel(d, "R1", {i}, 2);
      rel(d, "R1", {j}, 4);
      rel(d, "R1", {l}, 6);
      rel(d, "R10", {i, j, k, l}, 0);
      rel(d, "R1", {l}, 2, bwd);
      rel(d, "R1", {i}, 5, bwd);
      rel(d, "R1", {j}, 8, bwd);
    }

    Substitution subs(std::string const& vars, std::vector<degree_type> const& v) {
      Substitution s;
      for (std::size_t k = 0; k < vars.size(); ++k) {
        s.emplace_back(vars[k], v[k]);
      }
      return s;
    }
  }  // namespace

  Certificate ez_certificate(degree_type n, EzPart part, degree_type i, degree_type j,
                             degree_type k) {
    if (i == j || i < 1 || j < 1 || i > n || j > n) {
      throw InvalidArgument("EZ identity needs distinct i, j in 1..n");
    }
    switch (part) {
      case EzPart::i_left: {
        Derivation d(E(n, i) + Z(n, i, j));
        rw::ez_i_left(d, 0);
        return d.certificate();
      }
      case EzPart::i_right: {
        Derivation d(Z(n, i, j) + E(n, j));
        rw::ez_i_right(d, 0);
        return d.certificate();
      }
      case EzPart::ii_left: {
        Derivation d(E(n, j) + Z(n, i, j));
        rw::ez_ii_left(d, 0);
        return d.certificate();
      }
      case EzPart::ii_right: {
        Derivation d(Z(n, i, j) + E(n, i));
        rw::ez_ii_right(d, 0);
        return d.certificate();
      }
      case EzPart::ii_square: {
        Derivation d(Z(n, i, j) + Z(n, i, j));
        rw::ez_ii_square(d, 0);
        return d.certificate();
      }
      case EzPart::ii_square_swapped: {
        Derivation d(Z(n, j, i) + Z(n, j, i));
        rw::ez_ii_square(d, 0);
        rel(d, "R2", {j, i}, 0);
        return d.certificate();
      }
      case EzPart::iii: {
        Derivation d(Z(n, i, j) + Z(n, j, i));
        rw::ez_iii(d, 0);
        return d.certificate();
      }
      case EzPart::iv: {
        if (k == i || k == j || k < 1 || k > n) {
          throw InvalidArgument("EZ identity iv needs k outside {i, j}");
        }
        Derivation d(E(n, k) + Z(n, i, j));
        rw::ez_iv(d, 0);
        return d.certificate();
      }
    }
    throw InvalidArgument("unknown EZ identity");
  }

  Certificate tijzkl(degree_type n, degree_type i, degree_type j, degree_type k,
                     degree_type l) {
    if (i == j || k == l || k == i || k == j) {
      throw InvalidArgument("t-through-z move needs i != j, k != l and k outside {i, j}");
    }
    auto [a, b] = std::minmax(i, j);
    Derivation d(T(n, i, j) + Z(n, k, l));
    rel(d, "R6", {a, b, k}, 0);
    if (l != i && l != j) {
      auto [c, e] = std::minmax(k, l);
      rel(d, "R4", {a, b, c, e}, 1);
      rel(d, "R6", {a, b, l}, 2);
    } else {
      degree_type const other = (l == i) ? j : i;
      // t_{other,l} t_{l,k} -> t_{l,k} t_{k,other}
      rel(d, "R5", {other, l, k}, 1);
      auto [c, e] = std::minmax(k, other);
      rel(d, "R6", {c, e, l}, 2);
    }
    return d.certificate();
  }

  Certificate twwt(degree_type n, degree_type i, degree_type j, ZPairs const& w) {
    Derivation d(T(n, i, j) + z_product(n, w));
    std::size_t p = 0;
    for (auto [k, l] : w) {
      Letter const t = d.current()[p];
      rw::run(d, tijzkl(n, t.a, t.b, k, l), p);
      p += 3;
    }
    return d.certificate();
  }

  Certificate zrel_rewrite(RelationInstance const& z) {
    if (z.id.empty() || z.id[0] != 'Z') {
      throw InvalidArgument(z.id + " is not a Z relation");
    }
    degree_type const n = z.lhs.degree();
    Derivation        d(z.lhs);
    std::string const base = z.id.substr(1);
    if (base == "1") {
      rw::ez_iii(d, 0);
      rw::ez_i_left(d, 0);
    } else if (base == "2.1") {
      degree_type i = var(z, 'i'), j = var(z, 'j');
      rw::ez_ii_square(d, 0);
      rw::ez_ii_left(d, 1);
      rel(d, "R1", {i}, 0);
      towards(d, Z(n, i, j) + Z(n, i, j), 0, [](Derivation& x) { rw::ez_ii_square(x, 0); });
    } else if (base == "2.2") {
      degree_type i = var(z, 'i'), j = var(z, 'j');
      rw::ez_ii_square(d, 0);
      towards(d, Z(n, j, i) + Z(n, j, i), 0, [&](Derivation& x) {
        rw::ez_ii_square(x, 0);
        rel(x, "R2", {j, i}, 0);
      });
    } else if (base == "3") {
      rw::move_right(d, 0, 3, 3);
    } else if (base == "4") {
      degree_type i = var(z, 'i'), k = var(z, 'k');
      rw::ez_iii(d, 0);
      towards(d, Z(n, i, k) + Z(n, k, i), 0, [](Derivation& x) { rw::ez_iii(x, 0); });
    } else if (base == "5.1") {
      degree_type i = var(z, 'i'), j = var(z, 'j'), k = var(z, 'k');
      chain_a(d);
      towards(d, z.rhs, 0, [&](Derivation& x) { chain_b(x, i, j, k); });
    } else if (base == "5.2") {
      degree_type i = var(z, 'i'), j = var(z, 'j'), k = var(z, 'k');
      chain_b(d, i, j, k);
      towards(d, z.rhs, 0, [&](Derivation& x) { chain_c(x, i, j, k); });
    } else if (base == "6") {
      degree_type i = var(z, 'i'), j = var(z, 'j'), k = var(z, 'k');
      rel(d, "R1", {i}, 2);
      rel(d, "R1", {j}, 4);
      rel(d, "R9", {i, j, k}, 0);
      rel(d, "R1", {j}, 2, bwd);
      rel(d, "R1", {i}, 5, bwd);
    } else if (base == "7") {
      degree_type i = var(z, 'i'), j = var(z, 'j'), k = var(z, 'k'), l = var(z, 'l');
      rw::zrel(d, "Z1", subs("ij", {i, j}), 3, bwd);
      rw::zrel(d, "Z4", subs("ijk", {j, i, l}), 6, fwd);
      rw::zrel(d, "Z6", subs("ijk", {j, k, l}), 9, fwd);
      observation(d, i, j, k, l);
      rw::zrel(d, "Z4", subs("ijk", {j, k, l}), 9, fwd);
      rw::zrel(d, "Z1", subs("ij", {j, l}), 9, fwd);
    } else {
      throw InvalidArgument("unknown Z relation " + z.id);
    }
    if (d.current() != z.rhs) {
      throw Exception("internal: derivation of " + z.id + " ends at "
                      + to_string(d.current()));
    }
    return d.certificate();
  }

  Certificate absorb_e(degree_type n, ZPairs const& u, degree_type i) {
    Word       w = z_product(n, u) + E(n, i);
    Derivation d(w);
    rw::absorb_e_right(d, 0, w.size() - 1);
    return d.certificate();
  }

  Word canonical_t_word(Equivalence const& eq) {
    Word w(eq.degree(), Alphabet::ET);
    for (auto const& cls : eq.classes()) {
      for (std::size_t k = 1; k < cls.size(); ++k) {
        w.push_back(letter_t(cls[k - 1], cls[k]));
      }
    }
    return w;
  }

  Certificate semilattice_rewrite(Word const& u, Word const& v) {
    Derivation d(u);
    d.macro(Macro::LemmaT, 0, u.size(), v);
    return d.certificate();
  }

  std::optional<Certificate>
  elaborate_semilattice(Word const& u, Word const& v, SearchLimits const& limits) {
    if (eval_phi(u) != eval_phi(v)) {
      throw InvalidArgument("T-words with different images");
    }
    return bidirectional_search(
        u, v, instantiate_relations({"R3", "R4", "R5"}, u.degree()), limits);
  }

  std::size_t elaborate_macros(Certificate& c, SearchLimits const& limits) {
    std::vector<Step> out;
    std::size_t       left = 0;
    for (auto const& s : c.steps()) {
      if (!s.is_macro) {
        out.push_back(s);
        continue;
      }
      auto ids = s.macro == Macro::LemmaT
                     ? std::vector<std::string>{"R3", "R4", "R5"}
                     : std::vector<std::string>{"R11", "R12", "R13"};
      auto found = bidirectional_search(s.from, s.to,
                                        instantiate_relations(ids, c.degree()), limits);
      if (!found) {
        out.push_back(s);
        ++left;
        continue;
      }
      for (Step x : found->steps()) {
        x.pos += s.pos;
        out.push_back(std::move(x));
      }
    }
    c = Certificate(c.start(), std::move(out), c.end());
    return left;
  }

}  // namespace partmon
