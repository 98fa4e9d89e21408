#include "partmon/certificate.hpp"

#include <istream>        // for istream
#include <map>            // for map
#include <ostream>        // for ostream
#include <sstream>        // for ostringstream
#include <optional>       // for optional
#include <unordered_map>  // for unordered_map

#include "json.hpp"

#include "partmon/exception.hpp"

namespace partmon {

  std::string to_string(Macro m) {
    return m == Macro::LemmaT ? "LemmaT" : "SymGroup";
  }

  RelationInstance const&
  cached_relation(std::string const& id, degree_type n, Substitution const& subs) {
    thread_local std::unordered_map<std::string, RelationInstance> cache;
    std::string key = id + '/' + std::to_string(n) + '/' + to_string(subs);
    auto        it  = cache.find(key);
    if (it == cache.end()) {
      it = cache.emplace(std::move(key), make_relation(id, n, subs)).first;
    }
    return it->second;
  }

  namespace {
    void check_macro(Macro m, Word const& from, Word const& to) {
      auto only = [](Word const& w, LetterKind k) {
        for (auto const& x : w.letters()) {
          if (x.kind != k) {
            return false;
          }
        }
        return true;
      };
      if (from.alphabet() != to.alphabet() || from.degree() != to.degree()) {
        throw InvalidArgument("macro step between incompatible words");
      }
      if (m == Macro::LemmaT
          && !(only(from, LetterKind::T) && only(to, LetterKind::T))) {
        throw InvalidArgument("LemmaT step on words that are not over T");
      }
      if (m == Macro::SymGroup
          && !(only(from, LetterKind::S) && only(to, LetterKind::S))) {
        throw InvalidArgument("SymGroup step on words that are not over S");
      }
      if (evaluate(from) != evaluate(to)) {
        throw InvalidArgument(to_string(m) + " step between " + to_string(from)
                              + " and " + to_string(to)
                              + " with different images");
      }
    }

    void check_instance(Step const& s, degree_type n) {
      thread_local std::unordered_map<std::string, bool> seen;
      std::string key = s.rel + '/' + std::to_string(n) + '/' + to_string(s.subs);
      auto        it  = seen.find(key);
      if (it == seen.end()) {
        bool const ok = check_relation_diagrammatically(cached_relation(s.rel, n, s.subs));
        it            = seen.emplace(std::move(key), ok).first;
      }
      if (!it->second) {
        throw InvalidArgument(s.rel + " " + to_string(s.subs) + " changes the image");
      }
    }
  }  // namespace

  Word apply_step(Word const& w, Step const& s) {
    if (!s.is_macro) {
      return apply_relation(w, cached_relation(s.rel, w.degree(), s.subs),
                            s.pos, s.dir);
    }
    if (!w.occurs_at(s.from, s.pos)) {
      throw InvalidArgument(to_string(s.macro) + " step does not match at "
                            + std::to_string(s.pos));
    }
    return w.replaced(s.pos, s.from.size(), s.to);
  }

  ////////////////////////////////////////////////////////////////////////
  // Certificate
  ////////////////////////////////////////////////////////////////////////

  std::size_t Certificate::number_of_macro_steps() const {
    std::size_t k = 0;
    for (auto const& s : _steps) {
      k += s.is_macro ? 1 : 0;
    }
    return k;
  }

  Certificate Certificate::reversed() const {
    std::vector<Step> steps(_steps.rbegin(), _steps.rend());
    for (auto& s : steps) {
      s.dir = flip(s.dir);
      std::swap(s.from, s.to);
    }
    return Certificate(_end, std::move(steps), _start);
  }

  Certificate Certificate::embedded(Word const& prefix, Word const& suffix) const {
    std::vector<Step> steps(_steps);
    for (auto& s : steps) {
      s.pos += prefix.size();
    }
    return Certificate(prefix + _start + suffix, std::move(steps),
                       prefix + _end + suffix);
  }

  Certificate Certificate::then(Certificate const& next) const {
    if (_end != next._start) {
      throw InvalidArgument("certificates do not compose: " + to_string(_end)
                            + " vs " + to_string(next._start));
    }
    std::vector<Step> steps(_steps);
    steps.insert(steps.end(), next._steps.begin(), next._steps.end());
    return Certificate(_start, std::move(steps), next._end);
  }

  ReplayResult replay(Certificate const& c, bool check_images) {
    return replay(c, check_images ? ImageCheck::words : ImageCheck::none);
  }

  ReplayResult replay(Certificate const& c, ImageCheck mode) {
    bool const   check_images = mode == ImageCheck::words;
    ReplayResult result;
    Word         w = c.start();
    std::optional<Diagram> image;
    bool const   imageable = !(w.alphabet() == Alphabet::ET && w.empty());
    if (check_images && imageable) {
      image = evaluate(w);
    }
    for (std::size_t k = 0; k < c.steps().size(); ++k) {
      auto const& s = c.steps()[k];
      try {
        if (s.is_macro) {
          check_macro(s.macro, s.from, s.to);
        } else if (mode == ImageCheck::relations) {
          check_instance(s, c.degree());
        }
        w = apply_step(w, s);
      } catch (Exception const& e) {
        result.ok          = false;
        result.failed_step = k;
        result.message     = e.what();
        return result;
      }
      if (image && evaluate(w) != *image) {
        result.ok          = false;
        result.failed_step = k;
        result.message     = "step changes the image";
        return result;
      }
    }
    if (w != c.end()) {
      result.ok          = false;
      result.failed_step = c.steps().size();
      result.message     = "replay ends at " + to_string(w) + ", expected "
                       + to_string(c.end());
      return result;
    }
    if (mode == ImageCheck::relations && imageable && !c.steps().empty()
        && evaluate(c.start()) != evaluate(w)) {
      result.ok          = false;
      result.failed_step = c.steps().size();
      result.message     = "start and end images differ";
      return result;
    }
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // Derivation
  ////////////////////////////////////////////////////////////////////////

  void Derivation::apply(std::string const&              id,
                         std::vector<degree_type> const& values,
                         std::size_t                     pos,
                         Direction                       dir) {
    std::string const& vars = relation_variables(id);
    if (vars.size() != values.size()) {
      throw InvalidArgument("relation " + id + " takes "
                            + std::to_string(vars.size()) + " subscripts");
    }
    Substitution subs;
    for (std::size_t k = 0; k < values.size(); ++k) {
      subs.emplace_back(vars[k], values[k]);
    }
    apply(cached_relation(id, degree(), subs), pos, dir);
  }

  void Derivation::apply(RelationInstance const& r, std::size_t pos, Direction dir) {
    _current = apply_relation(_current, r, pos, dir);
    Step s;
    s.rel  = r.id;
    s.subs = r.subs;
    s.pos  = pos;
    s.dir  = dir;
    _steps.push_back(std::move(s));
  }

  void Derivation::macro(Macro m, std::size_t pos, std::size_t len, Word const& to) {
    Word from = _current.subword(pos, len);
    if (from == to) {
      return;
    }
    check_macro(m, from, to);
    _current = _current.replaced(pos, len, to);
    Step s;
    s.is_macro = true;
    s.macro    = m;
    s.pos      = pos;
    s.from     = std::move(from);
    s.to       = to;
    _steps.push_back(std::move(s));
  }

  void Derivation::append(Certificate const& c, std::size_t pos) {
    if (!_current.occurs_at(c.start(), pos)) {
      throw InvalidArgument("certificate start " + to_string(c.start())
                            + " does not occur at " + std::to_string(pos)
                            + " in " + to_string(_current));
    }
    for (Step s : c.steps()) {
      s.pos += pos;
      _current = apply_step(_current, s);
      _steps.push_back(std::move(s));
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // Serialization
  ////////////////////////////////////////////////////////////////////////

  namespace {
    using nlohmann::ordered_json;

    ordered_json step_json(Step const& s) {
      ordered_json j;
      if (s.is_macro) {
        j["macro"] = to_string(s.macro);
        j["pos"]   = s.pos;
        j["from"]  = to_string(s.from);
        j["to"]    = to_string(s.to);
      } else {
        j["rel"]  = s.rel;
        ordered_json subs = ordered_json::object();
        for (auto const& [name, value] : s.subs) {
          subs[std::string(1, name)] = value;
        }
        j["subs"] = subs;
        j["pos"]  = s.pos;
        j["dir"]  = s.dir == Direction::forward ? "fwd" : "bwd";
      }
      return j;
    }
  }  // namespace

  void write_jsonl(std::ostream& os, Certificate const& c) {
    ordered_json header;
    header["degree"]   = c.degree();
    header["alphabet"] = to_string(c.start().alphabet());
    header["start"]    = to_string(c.start());
    header["end"]      = to_string(c.end());
    header["steps"]    = c.size();
    os << header.dump() << '\n';
    for (auto const& s : c.steps()) {
      os << step_json(s).dump() << '\n';
    }
  }

  std::string to_jsonl(Certificate const& c) {
    std::ostringstream os;
    write_jsonl(os, c);
    return os.str();
  }

  Certificate read_jsonl(std::istream& is) {
    std::string line;
    std::size_t lineno = 0;
    auto        next   = [&]() -> bool {
      while (std::getline(is, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") != std::string::npos) {
          return true;
        }
      }
      return false;
    };
    try {
      if (!next()) {
        throw ParseError("empty certificate", 0);
      }
      auto const  header = nlohmann::json::parse(line);
      degree_type n      = header.at("degree").get<degree_type>();
      Alphabet    a      = parse_alphabet(header.at("alphabet").get<std::string>());
      Word        start  = parse_word(header.at("start").get<std::string>(), n, a);
      Word        end    = parse_word(header.at("end").get<std::string>(), n, a);
      std::vector<Step> steps;
      while (next()) {
        auto const j = nlohmann::json::parse(line);
        Step       s;
        s.pos = j.at("pos").get<std::size_t>();
        if (j.contains("macro")) {
          s.is_macro        = true;
          std::string const m = j.at("macro").get<std::string>();
          if (m == "LemmaT") {
            s.macro = Macro::LemmaT;
          } else if (m == "SymGroup") {
            s.macro = Macro::SymGroup;
          } else {
            throw ParseError("unknown macro '" + m + "'", lineno);
          }
          s.from = parse_word(j.at("from").get<std::string>(), n, a);
          s.to   = parse_word(j.at("to").get<std::string>(), n, a);
        } else {
          s.rel = j.at("rel").get<std::string>();
          std::string const& vars = relation_variables(s.rel);
          auto const&        subs = j.at("subs");
          for (char v : vars) {
            s.subs.emplace_back(v, subs.at(std::string(1, v)).get<degree_type>());
          }
          if (subs.size() != vars.size()) {
            throw ParseError("wrong subscripts for " + s.rel, lineno);
          }
          std::string const dir = j.at("dir").get<std::string>();
          if (dir != "fwd" && dir != "bwd") {
            throw ParseError("dir must be fwd or bwd", lineno);
          }
          s.dir = dir == "fwd" ? Direction::forward : Direction::backward;
        }
        steps.push_back(std::move(s));
      }
      if (header.contains("steps")
          && header.at("steps").get<std::size_t>() != steps.size()) {
        throw ParseError("header announces "
                             + std::to_string(header.at("steps").get<std::size_t>())
                             + " steps, found " + std::to_string(steps.size()),
                         lineno);
      }
      return Certificate(std::move(start), std::move(steps), std::move(end));
    } catch (nlohmann::json::exception const& e) {
      throw ParseError(std::string("line ") + std::to_string(lineno) + ": "
                           + e.what(),
                       lineno);
    } catch (InvalidArgument const& e) {
      throw ParseError(std::string("line ") + std::to_string(lineno) + ": "
                           + e.what(),
                       lineno);
    }
  }

  Certificate from_jsonl(std::string const& s) {
    std::istringstream is(s);
    return read_jsonl(is);
  }

}  // namespace partmon
