#include "partmon/insn.hpp"

#include <sstream>        // for istringstream, ostringstream
#include <unordered_map>  // for unordered_map

#include "partmon/exception.hpp"
#include "rw.hpp"

namespace partmon {

  namespace detail {
    extern char const* const insn_table[];
    extern std::size_t const insn_table_size;
  }  // namespace detail

  namespace {

    Word f_word(degree_type n, ZPairs const& u) {
      Word w(n, Alphabet::F);
      for (auto [k, l] : u) {
        w.push_back(letter_f(k, l));
      }
      return w;
    }

    PartialPerm kill(PartialPerm const& beta, degree_type k) {
      auto img = beta.images();
      for (auto& y : img) {
        if (y == k) {
          y = 0;
        }
      }
      return PartialPerm(std::move(img));
    }

    degree_type least_other(degree_type n, degree_type k) {
      return k == 1 ? (n >= 2 ? 2 : 0) : 1;
    }

    std::string img_key(PartialPerm const& beta) {
      std::string s;
      for (std::size_t x = 0; x < beta.images().size(); ++x) {
        if (x != 0) {
          s += ',';
        }
        s += std::to_string(beta.images()[x]);
      }
      return s;
    }

    std::string edge_key(PartialPerm const& beta, EdgeKind kind, degree_type k,
                         degree_type l) {
      return std::to_string(beta.degree()) + ' ' + img_key(beta) + ' '
             + (kind == EdgeKind::Move ? 'M' : 'K') + ' ' + std::to_string(k) + ' '
             + std::to_string(kind == EdgeKind::Move ? l : 0);
    }

    std::vector<Step> parse_steps(std::string const& s) {
      std::vector<Step> out;
      std::size_t       p = 0;
      while (p < s.size()) {
        std::size_t const q = s.find(';', p);
        std::string const item
            = s.substr(p, q == std::string::npos ? std::string::npos : q - p);
        p = q == std::string::npos ? s.size() : q + 1;
        std::size_t const colon = item.find(':');
        std::size_t const at    = item.find('@');
        Step              st;
        st.rel                  = item.substr(0, colon);
        std::string const& vars = relation_variables(st.rel);
        std::istringstream vals(item.substr(colon + 1, at - colon - 1));
        for (char v : vars) {
          degree_type x;
          vals >> x;
          vals.ignore(1);
          st.subs.emplace_back(v, x);
        }
        st.pos = std::stoul(item.substr(at + 1, item.size() - at - 2));
        st.dir = item.back() == '+' ? Direction::forward : Direction::backward;
        out.push_back(std::move(st));
      }
      return out;
    }

    struct Table {
      std::unordered_map<std::string, std::string> entries;
      std::vector<bool>                            covered;
    };

    Table const& table() {
      static Table t = [] {
        Table x;
        for (std::size_t i = 0; i < detail::insn_table_size; ++i) {
          std::string const line = detail::insn_table[i];
          // "n img kind k l steps"
          std::size_t sp = 0;
          for (int f = 0; f < 5; ++f) {
            sp = line.find(' ', sp) + 1;
          }
          x.entries.emplace(line.substr(0, sp - 1), line.substr(sp));
          std::size_t const n = std::stoul(line.substr(0, line.find(' ')));
          if (x.covered.size() <= n) {
            x.covered.resize(n + 1, false);
          }
          x.covered[n] = true;
        }
        return x;
      }();
      return t;
    }

    std::vector<RelationInstance> const& f_relations(degree_type n) {
      thread_local std::unordered_map<degree_type, std::vector<RelationInstance>> cache;
      auto it = cache.find(n);
      if (it == cache.end()) {
        it = cache.emplace(n, instantiate_relations(family_ids("F"), n)).first;
      }
      return it->second;
    }

    // Replays an F certificate on the z words at [pos, ...).
    void transport_at(Derivation& d, Certificate const& f, std::size_t pos) {
      for (auto const& s : f.steps()) {
        if (s.is_macro || s.rel.empty() || s.rel[0] != 'F') {
          throw InvalidArgument("not an F step: " + s.rel);
        }
        rw::zrel(d, "Z" + s.rel.substr(1), s.subs, pos + 3 * s.pos, s.dir);
      }
    }
  }  // namespace

  ZPairs z_pairs_for(PartialPerm const& alpha) {
    degree_type const n = alpha.degree();
    if (alpha.rank() == n) {
      throw InvalidArgument("z_alpha needs rank < n");
    }
    std::vector<bool> in_codom(n + 1, false);
    for (degree_type x = 1; x <= n; ++x) {
      if (alpha(x) != 0) {
        in_codom[alpha(x)] = true;
      }
    }
    degree_type dstar = 0;
    for (degree_type x = 1; x <= n && dstar == 0; ++x) {
      if (alpha(x) == 0) {
        dstar = x;
      }
    }
    ZPairs out;
    for (degree_type p = 1; p <= n; ++p) {
      if (alpha(p) == 0 && !in_codom[p]) {
        degree_type const q = least_other(n, p);
        out.emplace_back(p, q);
        out.emplace_back(q, p);
      }
    }
    std::vector<bool> seen(n + 1, false);
    for (degree_type c0 = 1; c0 <= n; ++c0) {
      if (seen[c0] || alpha(c0) == 0 || alpha(c0) == c0) {
        continue;
      }
      std::vector<degree_type> cyc{c0};
      degree_type              x = alpha(c0);
      while (x != 0 && x != c0 && cyc.size() <= n) {
        cyc.push_back(x);
        x = alpha(x);
      }
      if (x != c0) {
        continue;  // on a chain
      }
      for (auto y : cyc) {
        seen[y] = true;
      }
      out.emplace_back(dstar, cyc.back());
      for (std::size_t m = cyc.size() - 1; m > 0; --m) {
        out.emplace_back(cyc[m], cyc[m - 1]);
      }
      out.emplace_back(c0, dstar);
    }
    for (degree_type x0 = 1; x0 <= n; ++x0) {
      if (in_codom[x0] || alpha(x0) == 0) {
        continue;
      }
      std::vector<degree_type> path{x0};
      while (alpha(path.back()) != 0) {
        path.push_back(alpha(path.back()));
      }
      for (std::size_t m = path.size() - 1; m > 0; --m) {
        out.emplace_back(path[m], path[m - 1]);
      }
    }
    return out;
  }

  Word z_word_for(PartialPerm const& alpha) {
    return z_product(alpha.degree(), z_pairs_for(alpha));
  }

  PartialPerm z_image(degree_type n, ZPairs const& u) {
    return rw::blocks_image(n, u);
  }

  Certificate transport_f_certificate(Certificate const& f) {
    Derivation d(f_to_z(f.start()));
    transport_at(d, f, 0);
    return d.certificate();
  }

  std::optional<Certificate> insn_transport(degree_type n, ZPairs const& u,
                                            ZPairs const& v, SearchLimits const& limits) {
    if (z_image(n, u) != z_image(n, v)) {
      throw InvalidArgument("z words with different images");
    }
    auto f = bidirectional_search(f_word(n, u), f_word(n, v), f_relations(n), limits);
    if (!f) {
      return std::nullopt;
    }
    return transport_f_certificate(*f);
  }

  std::pair<Word, Word> edge_endpoints(PartialPerm const& beta, EdgeKind kind,
                                       degree_type k, degree_type l) {
    degree_type const n     = beta.degree();
    ZPairs const      canon = z_pairs_for(beta);
    Word              start = f_word(n, canon);
    if (kind == EdgeKind::Move) {
      start.push_back(letter_f(k, l));
      return {start, f_word(n, z_pairs_for(beta * rw::f_image(n, k, l)))};
    }
    degree_type const q = least_other(n, k);
    start.push_back(letter_f(k, q));
    start.push_back(letter_f(q, k));
    return {start, f_word(n, z_pairs_for(kill(beta, k)))};
  }

  std::optional<Certificate> search_edge(PartialPerm const& beta, EdgeKind kind,
                                         degree_type k, degree_type l,
                                         SearchLimits const& limits) {
    auto [u, v] = edge_endpoints(beta, kind, k, l);
    return bidirectional_search(u, v, f_relations(beta.degree()), limits);
  }

  bool edge_table_covers(degree_type n) {
    auto const& c = table().covered;
    return n < c.size() && c[n];
  }

  std::optional<Certificate> edge_certificate(PartialPerm const& beta, EdgeKind kind,
                                              degree_type k, degree_type l) {
    auto const& t  = table();
    auto        it = t.entries.find(edge_key(beta, kind, k, l));
    if (it != t.entries.end()) {
      auto [u, v] = edge_endpoints(beta, kind, k, l);
      return Certificate(u, parse_steps(it->second), v);
    }
    thread_local std::unordered_map<std::string, std::optional<Certificate>> memo;
    std::string key = edge_key(beta, kind, k, l);
    auto        m   = memo.find(key);
    if (m == memo.end()) {
      SearchLimits limits;
      limits.slack = 2;
      auto c       = search_edge(beta, kind, k, l, limits);
      if (!c) {
        limits.slack = 4;
        c            = search_edge(beta, kind, k, l, limits);
      }
      m = memo.emplace(std::move(key), std::move(c)).first;
    }
    return m->second;
  }

  Certificate z_canonicalize(degree_type n, ZPairs const& u) {
    if (u.empty()) {
      throw InvalidArgument("empty z word");
    }
    Derivation  d(z_product(n, u));
    PartialPerm beta = rw::f_image(n, u[0].first, u[0].second);
    std::size_t L    = 3;

    auto holes = [&](PartialPerm const& b) {
      std::vector<bool> h(n + 1, true);
      for (auto y : b.images()) {
        if (y != 0) {
          h[y] = false;
        }
      }
      return h;
    };
    auto follow = [&](PartialPerm const& b, EdgeKind kind, degree_type k, degree_type l) {
      auto c = edge_certificate(b, kind, k, l);
      if (!c) {
        throw Exception("no certificate for a z-word edge at degree "
                        + std::to_string(n));
      }
      transport_at(d, *c, 0);
    };
    // canon(beta) e_k at [0, L] -> canon(beta with k killed)
    auto do_kill = [&](degree_type k) {
      rw::expand_e(d, L, least_other(n, k));
      follow(beta, EdgeKind::Kill, k, 0);
      beta = kill(beta, k);
      L    = 3 * z_pairs_for(beta).size();
    };
    auto do_move = [&](degree_type k, degree_type l) {
      follow(beta, EdgeKind::Move, k, l);
      beta = beta * rw::f_image(n, k, l);
      L    = 3 * z_pairs_for(beta).size();
    };

    for (std::size_t m = 1; m < u.size(); ++m) {
      auto [k, l]  = u[m];
      auto const h = holes(beta);
      if (h[k] && h[l]) {
        rw::insert_e_right(d, 0, L, l);
        rw::ez_ii_left(d, L);
        rw::absorb_e_right(d, 0, L);
        rw::absorb_e_right(d, 0, L);
      } else if (!h[k] && h[l]) {
        rw::insert_e_right(d, 0, L, l);
        rw::ez_ii_left(d, L);
        rw::rel(d, "R2", {k, l}, L);
        rw::absorb_e_right(d, 0, L);
        do_kill(k);
      } else if (!h[k]) {
        rw::insert_e_before_z(d, L);
        do_kill(k);
        do_move(k, l);
      } else {
        do_move(k, l);
      }
    }
    if (d.current() != z_word_for(beta)) {
      throw Exception("internal: z canonicalization ends at " + to_string(d.current()));
    }
    return d.certificate();
  }

  std::string edge_table_line(PartialPerm const& beta, EdgeKind kind, degree_type k,
                              degree_type l, Certificate const& c) {
    std::ostringstream os;
    os << edge_key(beta, kind, k, l) << ' ';
    bool first = true;
    for (auto const& s : c.steps()) {
      if (!first) {
        os << ';';
      }
      first = false;
      os << s.rel << ':';
      for (std::size_t v = 0; v < s.subs.size(); ++v) {
        os << (v ? "," : "") << s.subs[v].second;
      }
      os << '@' << s.pos << (s.dir == Direction::forward ? '+' : '-');
    }
    return os.str();
  }

}  // namespace partmon
