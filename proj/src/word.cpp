#include "partmon/word.hpp"

#include <algorithm>  // for reverse
#include <cctype>     // for isdigit, isspace, tolower
#include <numeric>    // for iota

#include "partmon/exception.hpp"
#include "partmon/generators.hpp"

namespace partmon {

  std::string to_string(Alphabet a) {
    switch (a) {
      case Alphabet::ET:
        return "et";
      case Alphabet::SET:
        return "set";
      case Alphabet::F:
        return "f";
    }
    return "?";
  }

  Alphabet parse_alphabet(std::string_view s) {
    std::string lower;
    for (char c : s) {
      lower += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    }
    if (lower == "et") {
      return Alphabet::ET;
    } else if (lower == "set") {
      return Alphabet::SET;
    } else if (lower == "f") {
      return Alphabet::F;
    }
    throw ParseError("unknown alphabet '" + std::string(s) + "'", 0);
  }

  namespace {
    std::uint8_t small(degree_type x) {
      if (x > 255) {
        throw InvalidArgument("subscript " + std::to_string(x)
                              + " too large");
      }
      return static_cast<std::uint8_t>(x);
    }
  }  // namespace

  Letter letter_e(degree_type r) {
    return {LetterKind::E, small(r), 0};
  }

  Letter letter_t(degree_type i, degree_type j) {
    if (i > j) {
      std::swap(i, j);
    }
    return {LetterKind::T, small(i), small(j)};
  }

  Letter letter_s(degree_type i) {
    return {LetterKind::S, small(i), 0};
  }

  Letter letter_ee() {
    return {LetterKind::Ee, 0, 0};
  }

  Letter letter_tt() {
    return {LetterKind::Tt, 0, 0};
  }

  Letter letter_f(degree_type i, degree_type j) {
    return {LetterKind::F, small(i), small(j)};
  }

  Alphabet alphabet_of(LetterKind k) noexcept {
    switch (k) {
      case LetterKind::E:
      case LetterKind::T:
        return Alphabet::ET;
      case LetterKind::S:
      case LetterKind::Ee:
      case LetterKind::Tt:
        return Alphabet::SET;
      case LetterKind::F:
        return Alphabet::F;
    }
    return Alphabet::ET;
  }

  std::string to_string(Letter const& x) {
    switch (x.kind) {
      case LetterKind::E:
        return "e" + std::to_string(x.a);
      case LetterKind::T:
        return "t" + std::to_string(x.a) + "," + std::to_string(x.b);
      case LetterKind::S:
        return "s" + std::to_string(x.a);
      case LetterKind::Ee:
        return "e";
      case LetterKind::Tt:
        return "t";
      case LetterKind::F:
        return "f" + std::to_string(x.a) + "," + std::to_string(x.b);
    }
    return "?";
  }

  ////////////////////////////////////////////////////////////////////////
  // Word
  ////////////////////////////////////////////////////////////////////////

  Word::Word(degree_type n, Alphabet a, std::vector<Letter> letters)
      : _n(n), _alphabet(a), _letters(std::move(letters)) {
    for (auto const& x : _letters) {
      check(x);
    }
  }

  void Word::check(Letter const& x) const {
    if (alphabet_of(x.kind) != _alphabet) {
      throw InvalidArgument("letter " + to_string(x) + " is not in alphabet "
                            + to_string(_alphabet));
    }
    auto in_range = [this](degree_type v) { return v >= 1 && v <= _n; };
    bool ok       = true;
    switch (x.kind) {
      case LetterKind::E:
        ok = in_range(x.a);
        break;
      case LetterKind::T:
        ok = in_range(x.a) && in_range(x.b) && x.a < x.b;
        break;
      case LetterKind::S:
        ok = x.a >= 1 && x.a < _n;
        break;
      case LetterKind::Ee:
        ok = _n >= 1;
        break;
      case LetterKind::Tt:
        ok = _n >= 2;
        break;
      case LetterKind::F:
        ok = in_range(x.a) && in_range(x.b) && x.a != x.b;
        break;
    }
    if (!ok) {
      throw InvalidArgument("letter " + to_string(x)
                            + " out of range for degree "
                            + std::to_string(_n));
    }
  }

  Word& Word::push_back(Letter x) {
    check(x);
    _letters.push_back(x);
    return *this;
  }

  Word& Word::operator+=(Word const& that) {
    if (_n != that._n) {
      throw DegreeMismatch(_n, that._n);
    }
    if (_alphabet != that._alphabet) {
      throw InvalidArgument("cannot concatenate words over "
                            + to_string(_alphabet) + " and "
                            + to_string(that._alphabet));
    }
    _letters.insert(_letters.end(), that._letters.begin(), that._letters.end());
    return *this;
  }

  Word Word::subword(std::size_t pos, std::size_t len) const {
    if (pos + len > size()) {
      throw InvalidArgument("subword out of range");
    }
    Word result(_n, _alphabet);
    result._letters.assign(_letters.begin() + pos,
                           _letters.begin() + pos + len);
    return result;
  }

  bool Word::occurs_at(Word const& pattern, std::size_t pos) const {
    if (pos + pattern.size() > size()) {
      return false;
    }
    return std::equal(pattern._letters.begin(), pattern._letters.end(),
                      _letters.begin() + pos);
  }

  Word Word::replaced(std::size_t pos, std::size_t len, Word const& with) const {
    if (pos + len > size()) {
      throw InvalidArgument("replacement out of range");
    }
    Word result(_n, _alphabet);
    result._letters.reserve(size() - len + with.size());
    result._letters.insert(result._letters.end(), _letters.begin(),
                           _letters.begin() + pos);
    result._letters.insert(result._letters.end(), with._letters.begin(),
                           with._letters.end());
    result._letters.insert(result._letters.end(),
                           _letters.begin() + pos + len, _letters.end());
    return result;
  }

  Word Word::reversed() const {
    Word result(*this);
    std::reverse(result._letters.begin(), result._letters.end());
    return result;
  }

  Word operator+(Word lhs, Word const& rhs) {
    lhs += rhs;
    return lhs;
  }

  std::string to_string(Word const& w) {
    if (w.empty()) {
      return "1";
    }
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i > 0) {
        out += ' ';
      }
      out += to_string(w[i]);
    }
    return out;
  }

  Word parse_word(std::string_view s, degree_type n, Alphabet a) {
    Word        result(n, a);
    std::size_t i = 0;
    auto        skip = [&] {
      while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) {
        ++i;
      }
    };
    auto number = [&]() -> degree_type {
      std::size_t const start = i;
      degree_type       v     = 0;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
        v = v * 10 + static_cast<degree_type>(s[i] - '0');
        if (v > 255) {
          throw ParseError("subscript too large", start);
        }
        ++i;
      }
      if (i == start) {
        throw ParseError("expected a subscript", i);
      }
      return v;
    };
    auto pair = [&]() {
      degree_type x = number();
      if (i >= s.size() || s[i] != ',') {
        throw ParseError("expected ','", i);
      }
      ++i;
      degree_type y = number();
      return std::pair{x, y};
    };
    auto push = [&](Letter x, std::size_t at) {
      try {
        result.push_back(x);
      } catch (InvalidArgument const& e) {
        throw ParseError(e.what(), at);
      }
    };
    skip();
    std::size_t end = s.size();
    while (end > i && std::isspace(static_cast<unsigned char>(s[end - 1]))) {
      --end;
    }
    if (s.substr(i, end - i) == "1") {
      return result;
    }
    while (true) {
      skip();
      if (i >= s.size()) {
        break;
      }
      std::size_t const start = i;
      char const        c     = s[i++];
      bool const        has_sub
          = i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]));
      if (c == 'e' && has_sub) {
        push(letter_e(number()), start);
      } else if (c == 'e') {
        push(letter_ee(), start);
      } else if (c == 't' && has_sub) {
        auto [x, y] = pair();
        if (x == y) {
          throw ParseError("t needs two distinct subscripts", start);
        }
        push(letter_t(x, y), start);
      } else if (c == 't') {
        push(letter_tt(), start);
      } else if (c == 's' && has_sub) {
        push(letter_s(number()), start);
      } else if (c == 'f' && has_sub) {
        auto [x, y] = pair();
        push(letter_f(x, y), start);
      } else if (c == 'z' && has_sub) {
        auto [x, y] = pair();
        if (a != Alphabet::ET) {
          throw ParseError("z letters belong to the E u T alphabet", start);
        }
        if (x == y) {
          throw ParseError("z needs two distinct subscripts", start);
        }
        push(letter_e(x), start);
        push(letter_t(x, y), start);
        push(letter_e(y), start);
      } else {
        throw ParseError(std::string("unknown letter '") + c + "'", start);
      }
      if (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i]))) {
        throw ParseError("letters must be separated by whitespace", i);
      }
    }
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // Evaluation
  ////////////////////////////////////////////////////////////////////////

  Diagram letter_diagram(degree_type n, Letter const& x) {
    switch (x.kind) {
      case LetterKind::E:
        return gen_e(n, x.a);
      case LetterKind::T:
        return gen_t(n, x.a, x.b);
      case LetterKind::S:
        return gen_s(n, x.a);
      case LetterKind::Ee:
        return gen_e1(n);
      case LetterKind::Tt:
        return gen_tbar(n);
      case LetterKind::F:
        return gen_f(n, x.a, x.b);
    }
    throw InvalidArgument("bad letter");
  }

  Diagram evaluate(Word const& w) {
    Diagram result = Diagram::identity(w.degree());
    for (auto const& x : w.letters()) {
      result = result * letter_diagram(w.degree(), x);
    }
    return result;
  }

  namespace {
    void require(Word const& w, Alphabet a) {
      if (w.alphabet() != a) {
        throw InvalidArgument("expected a word over " + to_string(a)
                              + ", got one over " + to_string(w.alphabet()));
      }
    }
  }  // namespace

  Diagram eval_phi(Word const& w) {
    require(w, Alphabet::ET);
    return evaluate(w);
  }

  Diagram eval_Phi(Word const& w) {
    require(w, Alphabet::SET);
    return evaluate(w);
  }

  Diagram eval_f(Word const& w) {
    require(w, Alphabet::F);
    return evaluate(w);
  }

  Word z_word(degree_type n, degree_type i, degree_type j) {
    if (i == j) {
      throw InvalidArgument("z needs two distinct subscripts");
    }
    return Word(n, Alphabet::ET, {letter_e(i), letter_t(i, j), letter_e(j)});
  }

  Word z_product(degree_type n,
                 std::vector<std::pair<degree_type, degree_type>> const& pairs) {
    Word result(n, Alphabet::ET);
    for (auto [i, j] : pairs) {
      result += z_word(n, i, j);
    }
    return result;
  }

  Word f_to_z(Word const& w) {
    require(w, Alphabet::F);
    Word result(w.degree(), Alphabet::ET);
    for (auto const& x : w.letters()) {
      result += z_word(w.degree(), x.a, x.b);
    }
    return result;
  }

  Word build_c(degree_type n, degree_type r) {
    if (r < 1 || r > n) {
      throw InvalidArgument("c_" + std::to_string(r) + " out of range");
    }
    Word result(n, Alphabet::SET);
    for (degree_type i = 1; i < r; ++i) {
      result.push_back(letter_s(i));
    }
    return result;
  }

  Word build_eps(degree_type n, degree_type r) {
    Word c = build_c(n, r);
    return c.reversed() + Word(n, Alphabet::SET, {letter_ee()}) + c;
  }

  Word build_tau(degree_type n, degree_type i, degree_type j) {
    if (i == j) {
      throw InvalidArgument("tau needs two distinct subscripts");
    }
    if (i > j) {
      std::swap(i, j);
    }
    Word ci = build_c(n, i);
    Word cj = build_c(n, j);
    return ci.reversed() + cj.reversed() + Word(n, Alphabet::SET, {letter_tt()})
           + cj + ci;
  }

  Word psi(Word const& w) {
    require(w, Alphabet::ET);
    Word result(w.degree(), Alphabet::SET);
    for (auto const& x : w.letters()) {
      if (x.kind == LetterKind::E) {
        result += build_eps(w.degree(), x.a);
      } else {
        result += build_tau(w.degree(), x.a, x.b);
      }
    }
    return result;
  }

  std::vector<degree_type> s_word_permutation(Word const& w) {
    std::vector<degree_type> img(w.degree());
    std::iota(img.begin(), img.end(), 1);
    // img[x - 1] is the image of x under the prefix read so far.
    for (auto const& x : w.letters()) {
      if (x.kind != LetterKind::S) {
        throw InvalidArgument("not a word over S");
      }
      for (auto& y : img) {
        if (y == x.a) {
          y = x.a + 1;
        } else if (y == static_cast<degree_type>(x.a) + 1) {
          y = x.a;
        }
      }
    }
    return img;
  }

}  // namespace partmon

std::size_t
std::hash<partmon::Word>::operator()(partmon::Word const& w) const noexcept {
  std::size_t h = w.size() ^ (static_cast<std::size_t>(w.degree()) << 40);
  for (auto const& x : w.letters()) {
    h = h * 1099511628211ULL ^ std::hash<partmon::Letter>()(x);
  }
  return h;
}
