//
// Letters and words over the three alphabets E u T, S u {e, t} and F, their
// text form, and the evaluation maps into P_n.
//

#ifndef PARTMON_WORD_HPP_
#define PARTMON_WORD_HPP_

#include <cstddef>      // for size_t
#include <cstdint>      // for uint8_t
#include <functional>   // for hash
#include <string>       // for string
#include <string_view>  // for string_view
#include <vector>       // for vector

#include "partmon/diagram.hpp"

namespace partmon {

  enum class Alphabet : std::uint8_t { ET, SET, F };

  [[nodiscard]] std::string to_string(Alphabet a);

  //! Accepts et, set, f (any case).
  [[nodiscard]] Alphabet parse_alphabet(std::string_view s);

  enum class LetterKind : std::uint8_t { E, T, S, Ee, Tt, F };

  //! A single generator. T letters always have a < b; F letters keep their
  //! order; unused subscripts are 0.
  struct Letter {
    LetterKind   kind = LetterKind::E;
    std::uint8_t a    = 0;
    std::uint8_t b    = 0;

    friend bool operator==(Letter const&, Letter const&) = default;
    friend auto operator<=>(Letter const&, Letter const&) = default;
  };

  [[nodiscard]] Letter letter_e(degree_type r);
  //! Symmetric: letter_t(i, j) == letter_t(j, i).
  [[nodiscard]] Letter letter_t(degree_type i, degree_type j);
  [[nodiscard]] Letter letter_s(degree_type i);
  [[nodiscard]] Letter letter_ee();
  [[nodiscard]] Letter letter_tt();
  [[nodiscard]] Letter letter_f(degree_type i, degree_type j);

  [[nodiscard]] Alphabet alphabet_of(LetterKind k) noexcept;

  //! Token form: e3, t1,2, s4, e, t, f2,1.
  [[nodiscard]] std::string to_string(Letter const& x);

  //! A word of a given degree over one alphabet. The empty word is allowed
  //! for every alphabet; entry points that need a semigroup word over E u T
  //! reject it.
  class Word {
   public:
    Word() = default;
    Word(degree_type n, Alphabet a) : _n(n), _alphabet(a) {}

    //! Throws InvalidArgument if a letter is from another alphabet or has a
    //! subscript out of range.
    Word(degree_type n, Alphabet a, std::vector<Letter> letters);

    [[nodiscard]] degree_type degree() const noexcept {
      return _n;
    }
    [[nodiscard]] Alphabet alphabet() const noexcept {
      return _alphabet;
    }
    [[nodiscard]] std::vector<Letter> const& letters() const noexcept {
      return _letters;
    }
    [[nodiscard]] std::size_t size() const noexcept {
      return _letters.size();
    }
    [[nodiscard]] bool empty() const noexcept {
      return _letters.empty();
    }
    [[nodiscard]] Letter const& operator[](std::size_t i) const {
      return _letters[i];
    }

    //! Appends after checking the letter.
    Word& push_back(Letter x);

    //! Throws DegreeMismatch / InvalidArgument on incompatible words.
    Word& operator+=(Word const& that);

    //! Letters [pos, pos + len).
    [[nodiscard]] Word subword(std::size_t pos, std::size_t len) const;

    //! Does \p pattern occur at \p pos.
    [[nodiscard]] bool occurs_at(Word const& pattern, std::size_t pos) const;

    //! Replace letters [pos, pos + len) by \p with.
    [[nodiscard]] Word replaced(std::size_t pos,
                                std::size_t len,
                                Word const& with) const;

    //! Letters in the opposite order.
    [[nodiscard]] Word reversed() const;

    friend bool operator==(Word const&, Word const&) = default;
    friend auto operator<=>(Word const&, Word const&) = default;

   private:
    void check(Letter const& x) const;

    degree_type         _n        = 0;
    Alphabet            _alphabet = Alphabet::ET;
    std::vector<Letter> _letters;
  };

  [[nodiscard]] Word operator+(Word lhs, Word const& rhs);

  //! Whitespace separated tokens; the empty word prints as 1.
  [[nodiscard]] std::string to_string(Word const& w);

  //! Parses the token form. z_i,j is accepted over E u T and expands to
  //! e_i t_ij e_j. "1" and the empty string give the empty word. Throws
  //! ParseError.
  [[nodiscard]] Word parse_word(std::string_view s, degree_type n, Alphabet a);

  //! The generator diagram of a letter.
  [[nodiscard]] Diagram letter_diagram(degree_type n, Letter const& x);

  //! Product of letter diagrams (identity for the empty word); works for
  //! every alphabet.
  [[nodiscard]] Diagram evaluate(Word const& w);

  //! evaluate() restricted to words over E u T.
  [[nodiscard]] Diagram eval_phi(Word const& w);
  //! evaluate() restricted to words over S u {e, t}.
  [[nodiscard]] Diagram eval_Phi(Word const& w);
  //! evaluate() restricted to words over F.
  [[nodiscard]] Diagram eval_f(Word const& w);

  //! e_i t_ij e_j.
  [[nodiscard]] Word z_word(degree_type n, degree_type i, degree_type j);

  //! Concatenation of z_word over a list of ordered pairs.
  [[nodiscard]] Word
  z_product(degree_type n,
            std::vector<std::pair<degree_type, degree_type>> const& pairs);

  //! f_ij -> z_ij letterwise.
  [[nodiscard]] Word f_to_z(Word const& w);

  //! c_r = s_1 s_2 ... s_{r-1}.
  [[nodiscard]] Word build_c(degree_type n, degree_type r);
  //! c_r^{-1} e c_r.
  [[nodiscard]] Word build_eps(degree_type n, degree_type r);
  //! c_i^{-1} c_j^{-1} t c_j c_i for i < j (arguments in either order).
  [[nodiscard]] Word build_tau(degree_type n, degree_type i, degree_type j);

  //! e_r -> eps_r, t_ij -> tau_ij.
  [[nodiscard]] Word psi(Word const& w);

  //! Letters s_i read as a permutation of 1..n (images of 1..n).
  [[nodiscard]] std::vector<degree_type> s_word_permutation(Word const& w);

}  // namespace partmon

template <>
struct std::hash<partmon::Letter> {
  std::size_t operator()(partmon::Letter const& x) const noexcept {
    return (static_cast<std::size_t>(x.kind) << 16)
           | (static_cast<std::size_t>(x.a) << 8) | x.b;
  }
};

template <>
struct std::hash<partmon::Word> {
  std::size_t operator()(partmon::Word const& w) const noexcept;
};

#endif  // PARTMON_WORD_HPP_
