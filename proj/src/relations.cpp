#include "partmon/relations.hpp"

#include <algorithm>  // for find_if
#include <cstdlib>    // for abs
#include <functional>  // for function

#include "partmon/exception.hpp"

namespace partmon {

  namespace {

    using Values = std::vector<degree_type>;

    struct Schema {
      std::string id;
      std::string vars;
      Alphabet    alphabet;
      std::string lhs;
      std::string rhs;
      // Least degree at which the relation has instances.
      degree_type min_degree;
      // Whether all variables must be distinct.
      bool distinct;
      // Extra side condition.
      std::function<bool(degree_type, Values const&)> cond;
    };

    bool always(degree_type, Values const&) {
      return true;
    }

    bool ordered_pair(degree_type, Values const& v) {
      return v[0] < v[1];
    }

    std::vector<Schema> const& schemas() {
      static std::vector<Schema> const table = [] {
        auto const  ET  = Alphabet::ET;
        auto const  SET = Alphabet::SET;
        auto const  F   = Alphabet::F;
        std::vector<Schema> t;
        // clang-format off
        t.push_back({"R1", "i", ET, "e{i} e{i}", "e{i}", 1, true, always});
        t.push_back({"R2", "ij", ET, "e{i} e{j}", "e{j} e{i}", 2, true, always});
        t.push_back({"R3", "ij", ET, "t{i},{j} t{i},{j}", "t{i},{j}", 2, true, ordered_pair});
        t.push_back({"R4", "ijkl", ET, "t{i},{j} t{k},{l}", "t{k},{l} t{i},{j}", 3, false,
                     [](degree_type, Values const& v) {
                       return v[0] < v[1] && v[2] < v[3]
                              && (v[0] != v[2] || v[1] != v[3]);
                     }});
        t.push_back({"R5", "ijk", ET, "t{i},{j} t{j},{k}", "t{j},{k} t{k},{i}", 3, true, always});
        t.push_back({"R6", "ijk", ET, "t{i},{j} e{k}", "e{k} t{i},{j}", 3, true, ordered_pair});
        t.push_back({"R7", "ijk", ET, "t{i},{j} e{k} t{i},{j}", "t{i},{j}", 2, false,
                     [](degree_type, Values const& v) {
                       return v[0] < v[1] && (v[2] == v[0] || v[2] == v[1]);
                     }});
        t.push_back({"R8", "ijk", ET, "e{k} t{i},{j} e{k}", "e{k}", 2, false,
                     [](degree_type, Values const& v) {
                       return v[0] < v[1] && (v[2] == v[0] || v[2] == v[1]);
                     }});
        t.push_back({"R9", "ijk", ET,
                     "e{k} t{k},{i} e{i} t{i},{j} e{j} t{j},{k} e{k}",
                     "e{k} t{k},{j} e{j} t{j},{i} e{i} t{i},{k} e{k}", 3, true, always});
        t.push_back({"R10", "ijkl", ET,
                     "e{k} t{k},{i} e{i} t{i},{j} e{j} t{j},{l} e{l} t{l},{k} e{k}",
                     "e{k} t{k},{l} e{l} t{l},{i} e{i} t{i},{j} e{j} t{j},{k} e{k}",
                     4, true, always});

        t.push_back({"R11", "i", SET, "s{i} s{i}", "1", 2, true, always});
        t.push_back({"R12", "ij", SET, "s{i} s{j}", "s{j} s{i}", 4, true,
                     [](degree_type, Values const& v) {
                       return v[0] + 1 < v[1] || v[1] + 1 < v[0];
                     }});
        t.push_back({"R13", "ij", SET, "s{i} s{j} s{i}", "s{j} s{i} s{j}", 3, true,
                     [](degree_type, Values const& v) {
                       return v[0] + 1 == v[1] || v[1] + 1 == v[0];
                     }});
        t.push_back({"R14.1", "", SET, "e e", "e", 1, true, always});
        t.push_back({"R14.2", "", SET, "e", "e t e", 2, true, always});
        t.push_back({"R15.1", "", SET, "t t", "t", 2, true, always});
        t.push_back({"R15.2", "", SET, "t", "t e t", 2, true, always});
        t.push_back({"R15.3", "", SET, "t", "t s1", 2, true, always});
        t.push_back({"R15.4", "", SET, "t", "s1 t", 2, true, always});
        t.push_back({"R16", "i", SET, "e s{i}", "s{i} e", 3, true,
                     [](degree_type, Values const& v) { return v[0] >= 2; }});
        t.push_back({"R17", "i", SET, "t s{i}", "s{i} t", 4, true,
                     [](degree_type, Values const& v) { return v[0] >= 3; }});
        t.push_back({"R18.1", "", SET, "s1 e s1 e", "e s1 e s1", 2, true, always});
        t.push_back({"R18.2", "", SET, "e s1 e s1", "e s1 e", 2, true, always});
        t.push_back({"R19", "", SET, "t s2 t s2", "s2 t s2 t", 3, true, always});
        t.push_back({"R20", "", SET,
                     "t s2 s3 s1 s2 t s2 s3 s1 s2",
                     "s2 s3 s1 s2 t s2 s3 s1 s2 t", 4, true, always});
        t.push_back({"R21", "", SET, "t s2 s1 e s1 s2", "s2 s1 e s1 s2 t", 3, true, always});

        // The F relations and their images under f_ij -> z_ij.
        struct FS {
          char const* id;
          char const* vars;
          char const* lhs;
          char const* rhs;
          degree_type min_degree;
        };
        std::vector<FS> const fs = {
            {"1", "ij", "{i},{j} {j},{i} {i},{j}", "{i},{j}", 2},
            {"2.1", "ij", "{i},{j} {i},{j} {i},{j}", "{i},{j} {i},{j}", 2},
            {"2.2", "ij", "{i},{j} {i},{j}", "{j},{i} {j},{i}", 2},
            {"3", "ijkl", "{i},{j} {k},{l}", "{k},{l} {i},{j}", 4},
            {"4", "ijk", "{i},{j} {j},{i}", "{i},{k} {k},{i}", 3},
            {"5.1", "ijk", "{i},{j} {i},{k}", "{j},{k} {i},{j}", 3},
            {"5.2", "ijk", "{j},{k} {i},{j}", "{i},{k} {j},{k}", 3},
            {"6", "ijk", "{k},{i} {i},{j} {j},{k}", "{k},{j} {j},{i} {i},{k}", 3},
            {"7", "ijkl", "{k},{i} {i},{j} {j},{k} {k},{l}",
             "{k},{l} {l},{i} {i},{j} {j},{l}", 4},
        };
        auto prefix_each = [](std::string const& s, char c) {
          std::string out;
          bool        start = true;
          for (char x : s) {
            if (start && x != ' ') {
              out += c;
            }
            start = (x == ' ');
            out += x;
          }
          return out;
        };
        for (auto const& x : fs) {
          t.push_back({std::string("F") + x.id, x.vars, F,
                       prefix_each(x.lhs, 'f'), prefix_each(x.rhs, 'f'),
                       x.min_degree, true, always});
        }
        for (auto const& x : fs) {
          t.push_back({std::string("Z") + x.id, x.vars, ET,
                       prefix_each(x.lhs, 'z'), prefix_each(x.rhs, 'z'),
                       x.min_degree, true, always});
        }
        // clang-format on
        return t;
      }();
      return table;
    }

    Schema const& find_schema(std::string_view id) {
      auto const& t  = schemas();
      auto        it = std::find_if(t.begin(), t.end(),
                             [&id](Schema const& s) { return s.id == id; });
      if (it == t.end()) {
        throw InvalidArgument("unknown relation '" + std::string(id) + "'");
      }
      return *it;
    }

    std::string fill(std::string const& tmpl, std::string const& vars, Values const& v) {
      std::string out;
      for (std::size_t i = 0; i < tmpl.size(); ++i) {
        if (tmpl[i] == '{') {
          auto k = vars.find(tmpl[i + 1]);
          out += std::to_string(v[k]);
          i += 2;
        } else {
          out += tmpl[i];
        }
      }
      return out;
    }

    bool admissible(Schema const& s, degree_type n, Values const& v) {
      if (n < s.min_degree) {
        return false;
      }
      for (std::size_t a = 0; a < v.size(); ++a) {
        if (v[a] < 1 || v[a] > n) {
          return false;
        }
        // Subscripts of s letters run over 1..n-1.
        if (s.alphabet == Alphabet::SET && v[a] >= n) {
          return false;
        }
        if (s.distinct) {
          for (std::size_t b = 0; b < a; ++b) {
            if (v[a] == v[b]) {
              return false;
            }
          }
        }
      }
      return s.cond(n, v);
    }

    RelationInstance build(Schema const& s, degree_type n, Values const& v) {
      RelationInstance r;
      r.id = s.id;
      for (std::size_t k = 0; k < v.size(); ++k) {
        r.subs.emplace_back(s.vars[k], v[k]);
      }
      r.lhs = parse_word(fill(s.lhs, s.vars, v), n, s.alphabet);
      r.rhs = parse_word(fill(s.rhs, s.vars, v), n, s.alphabet);
      return r;
    }

  }  // namespace

  std::vector<std::string> const& relation_ids() {
    static std::vector<std::string> const ids = [] {
      std::vector<std::string> out;
      for (auto const& s : schemas()) {
        out.push_back(s.id);
      }
      return out;
    }();
    return ids;
  }

  std::vector<std::string> family_ids(std::string_view family) {
    auto number = [](std::string const& id) {
      return std::stoi(id.substr(1));
    };
    std::vector<std::string> out;
    for (auto const& id : relation_ids()) {
      bool keep = false;
      if (family == "R1-R10") {
        keep = id[0] == 'R' && number(id) <= 10;
      } else if (family == "R11-R21") {
        keep = id[0] == 'R' && number(id) >= 11;
      } else if (family == "F" || family == "Z") {
        keep = id[0] == family[0];
      } else {
        keep = id == family
               || (id.size() > family.size() && id.rfind(family, 0) == 0
                   && id[family.size()] == '.');
      }
      if (keep) {
        out.push_back(id);
      }
    }
    if (out.empty()) {
      throw InvalidArgument("unknown relation family '" + std::string(family)
                            + "'");
    }
    return out;
  }

  std::string const& relation_variables(std::string_view id) {
    return find_schema(id).vars;
  }

  Alphabet relation_alphabet(std::string_view id) {
    return find_schema(id).alphabet;
  }

  RelationInstance make_relation(std::string_view    id,
                                 degree_type         n,
                                 Substitution const& subs) {
    Schema const& s = find_schema(id);
    Values        v(s.vars.size(), 0);
    if (subs.size() != s.vars.size()) {
      throw InvalidArgument("relation " + s.id + " takes variables '"
                            + s.vars + "'");
    }
    for (auto const& [name, value] : subs) {
      auto k = s.vars.find(name);
      if (k == std::string::npos || v[k] != 0) {
        throw InvalidArgument("relation " + s.id + " takes variables '"
                              + s.vars + "'");
      }
      v[k] = value;
    }
    if (!admissible(s, n, v)) {
      throw InvalidArgument("subscripts " + to_string(subs)
                            + " violate the side condition of " + s.id
                            + " at degree " + std::to_string(n));
    }
    return build(s, n, v);
  }

  RelationInstance make_relation(std::string_view                id,
                                 degree_type                     n,
                                 std::vector<degree_type> const& values) {
    Schema const& s = find_schema(id);
    if (values.size() != s.vars.size()) {
      throw InvalidArgument("relation " + s.id + " takes "
                            + std::to_string(s.vars.size()) + " subscripts");
    }
    Substitution subs;
    for (std::size_t k = 0; k < values.size(); ++k) {
      subs.emplace_back(s.vars[k], values[k]);
    }
    return make_relation(id, n, subs);
  }

  std::vector<RelationInstance>
  instantiate_relations(std::vector<std::string> const& ids, degree_type n) {
    std::vector<RelationInstance> out;
    for (auto const& id : ids) {
      Schema const& s = find_schema(id);
      if (n < s.min_degree) {
        continue;
      }
      std::size_t const k = s.vars.size();
      Values            v(k, 1);
      while (true) {
        if (admissible(s, n, v)) {
          out.push_back(build(s, n, v));
        }
        std::size_t pos = k;
        while (pos > 0 && v[pos - 1] == n) {
          v[pos - 1] = 1;
          --pos;
        }
        if (pos == 0) {
          break;
        }
        ++v[pos - 1];
      }
    }
    return out;
  }

  bool check_relation_diagrammatically(RelationInstance const& r) {
    return evaluate(r.lhs) == evaluate(r.rhs);
  }

  Word apply_relation(Word const&             w,
                      RelationInstance const& r,
                      std::size_t             pos,
                      Direction               dir) {
    Word const& from = dir == Direction::forward ? r.lhs : r.rhs;
    Word const& to   = dir == Direction::forward ? r.rhs : r.lhs;
    if (w.degree() != from.degree()) {
      throw DegreeMismatch(w.degree(), from.degree());
    }
    if (w.alphabet() != from.alphabet() || !w.occurs_at(from, pos)) {
      throw InvalidArgument("relation " + r.id + " (" + to_string(r.subs)
                            + ") does not match at position "
                            + std::to_string(pos) + " of " + to_string(w));
    }
    return w.replaced(pos, from.size(), to);
  }

  std::string to_string(Substitution const& subs) {
    std::string out;
    for (auto const& [name, value] : subs) {
      if (!out.empty()) {
        out += ',';
      }
      out += name;
      out += '=';
      out += std::to_string(value);
    }
    return out;
  }

}  // namespace partmon
