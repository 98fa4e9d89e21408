#include "partmon/search.hpp"

#include <algorithm>      // for max
#include <map>            // for map
#include <string>         // for string
#include <unordered_map>  // for unordered_map

namespace partmon {

  namespace {

    struct Rule {
      std::string             lhs;
      std::string             rhs;
      RelationInstance const* rel;
      Direction               dir;
    };

    struct Node {
      std::string word;
      int         parent;
      int         rule;
      std::size_t pos;
    };

    struct Side {
      std::vector<Node>                    nodes;
      std::unordered_map<std::string, int> index;
      std::vector<int>                     frontier;

      void add(std::string w, int parent, int rule, std::size_t pos) {
        index.emplace(w, static_cast<int>(nodes.size()));
        frontier.push_back(static_cast<int>(nodes.size()));
        nodes.push_back({std::move(w), parent, rule, pos});
      }
    };

    // Steps from the root of a side to node k.
    std::vector<Step> path_to(Side const&              s,
                              int                      k,
                              std::vector<Rule> const& rules) {
      std::vector<Step> out;
      while (s.nodes[k].parent != -1) {
        auto const& node = s.nodes[k];
        auto const& r    = rules[node.rule];
        Step        st;
        st.rel  = r.rel->id;
        st.subs = r.rel->subs;
        st.pos  = node.pos;
        st.dir  = r.dir;
        out.push_back(std::move(st));
        k = node.parent;
      }
      std::reverse(out.begin(), out.end());
      return out;
    }

  }  // namespace

  std::optional<Certificate>
  bidirectional_search(Word const&                          u,
                       Word const&                          v,
                       std::vector<RelationInstance> const& relations,
                       SearchLimits const&                  limits) {
    if (u == v) {
      return Certificate(u);
    }
    // Encode letters as bytes.
    std::map<Letter, char> code;
    auto                   encode = [&code](Word const& w) {
      std::string s;
      for (auto const& x : w.letters()) {
        auto it = code.find(x);
        if (it == code.end()) {
          it = code.emplace(x, static_cast<char>(code.size() + 1)).first;
        }
        s += it->second;
      }
      return s;
    };
    std::vector<Rule> rules;
    for (auto const& r : relations) {
      if (r.lhs.degree() != u.degree() || r.lhs.alphabet() != u.alphabet()) {
        continue;
      }
      rules.push_back({encode(r.lhs), encode(r.rhs), &r, Direction::forward});
      rules.push_back({encode(r.rhs), encode(r.lhs), &r, Direction::backward});
    }
    std::unordered_map<char, std::vector<int>> by_first;
    std::vector<int>                           empty_lhs;
    for (int k = 0; k < static_cast<int>(rules.size()); ++k) {
      if (rules[k].lhs.empty()) {
        empty_lhs.push_back(k);
      } else {
        by_first[rules[k].lhs[0]].push_back(k);
      }
    }
    std::size_t const max_len
        = limits.max_length != 0 ? limits.max_length
                                 : std::max(u.size(), v.size()) + limits.slack;

    Side a, b;
    a.add(encode(u), -1, -1, 0);
    b.add(encode(v), -1, -1, 0);

    auto finish = [&](int ka, int kb) {
      std::vector<Step> steps = path_to(a, ka, rules);
      std::vector<Step> back  = path_to(b, kb, rules);
      for (auto it = back.rbegin(); it != back.rend(); ++it) {
        Step s = *it;
        s.dir  = flip(s.dir);
        steps.push_back(std::move(s));
      }
      return Certificate(u, std::move(steps), v);
    };

    while (!a.frontier.empty() && !b.frontier.empty()) {
      bool const  forward = a.frontier.size() <= b.frontier.size();
      Side&       me      = forward ? a : b;
      Side const& other   = forward ? b : a;
      std::vector<int> frontier;
      std::swap(frontier, me.frontier);
      for (int k : frontier) {
        std::string const w = me.nodes[k].word;
        auto try_rule = [&](int r, std::size_t pos) -> std::optional<Certificate> {
          auto const& rule = rules[r];
          if (w.compare(pos, rule.lhs.size(), rule.lhs) != 0) {
            return std::nullopt;
          }
          if (w.size() - rule.lhs.size() + rule.rhs.size() > max_len) {
            return std::nullopt;
          }
          std::string x = w.substr(0, pos) + rule.rhs
                          + w.substr(pos + rule.lhs.size());
          if (me.index.count(x) != 0) {
            return std::nullopt;
          }
          me.add(x, k, r, pos);
          auto hit = other.index.find(x);
          if (hit != other.index.end()) {
            int const mine = me.index.at(x);
            return forward ? finish(mine, hit->second)
                           : finish(hit->second, mine);
          }
          return std::nullopt;
        };
        for (std::size_t pos = 0; pos <= w.size(); ++pos) {
          for (int r : empty_lhs) {
            if (auto c = try_rule(r, pos)) {
              return c;
            }
          }
          if (pos == w.size()) {
            break;
          }
          auto it = by_first.find(w[pos]);
          if (it == by_first.end()) {
            continue;
          }
          for (int r : it->second) {
            if (auto c = try_rule(r, pos)) {
              return c;
            }
          }
        }
        if (a.nodes.size() + b.nodes.size() > limits.max_states) {
          return std::nullopt;
        }
      }
    }
    return std::nullopt;
  }

  std::optional<Certificate>
  single_step(Word const& u, Word const& v, std::vector<RelationInstance> const& relations) {
    for (auto const& r : relations) {
      for (auto dir : {Direction::forward, Direction::backward}) {
        Word const& from = dir == Direction::forward ? r.lhs : r.rhs;
        Word const& to   = dir == Direction::forward ? r.rhs : r.lhs;
        if (u.size() + to.size() != v.size() + from.size() || from.size() > u.size()) {
          continue;
        }
        for (std::size_t pos = 0; pos + from.size() <= u.size(); ++pos) {
          if (u.occurs_at(from, pos) && u.replaced(pos, from.size(), to) == v) {
            Derivation d(u);
            d.apply(r, pos, dir);
            return d.certificate();
          }
        }
      }
    }
    return std::nullopt;
  }

  std::vector<RelationInstance> const& cached_family(std::string const& family,
                                                     degree_type        n) {
    thread_local std::map<std::pair<std::string, degree_type>, std::vector<RelationInstance>>
         cache;
    auto key = std::make_pair(family, n);
    auto it  = cache.find(key);
    if (it == cache.end()) {
      it = cache.emplace(key, instantiate_relations(family_ids(family), n)).first;
    }
    return it->second;
  }

}  // namespace partmon
