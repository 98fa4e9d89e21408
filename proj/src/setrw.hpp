// Internal: words over S u {e, t} viewed as permutations separated by e and
// t letters. R15.3, R15.4, R16 and R17 let permutations slide through the
// letters; sweep() picks one representative per class and search() looks
// for derivations between classes using the remaining relations.

#ifndef PARTMON_SRC_SETRW_HPP_
#define PARTMON_SRC_SETRW_HPP_

#include <cstdint>   // for uint8_t
#include <optional>  // for optional
#include <string>    // for string
#include <vector>    // for vector

#include "partmon/certificate.hpp"

namespace partmon::setrw {

  //! 0-based images; products read left to right like words.
  using Perm = std::vector<std::uint8_t>;

  [[nodiscard]] Perm identity(degree_type n);
  [[nodiscard]] Perm mul(Perm const& a, Perm const& b);
  [[nodiscard]] Perm inv(Perm const& a);
  [[nodiscard]] Perm perm_of(Word const& w, std::size_t pos, std::size_t len);

  //! A fixed shortest word for p.
  [[nodiscard]] Word const& word_of(degree_type n, Perm const& p);

  //! x holds the e/t letters, g the permutations around them.
  struct Shape {
    std::string       x;
    std::vector<Perm> g;

    friend bool operator==(Shape const&, Shape const&) = default;
  };

  [[nodiscard]] Shape shape_of(Word const& w);
  [[nodiscard]] Word  word_of(degree_type n, Shape const& s);
  [[nodiscard]] Shape canonical(Shape s);

  //! w -> word_of(canonical(shape_of(w))) by SymGroup macros and R15.3,
  //! R15.4, R16, R17.
  [[nodiscard]] Certificate to_canonical(Word const& w);

  //! Classes one relation step away from s, labelled by the step.
  [[nodiscard]] std::vector<std::pair<std::string, Shape>>
  neighbours(Shape const& s, std::size_t max_x);

  struct Limits {
    std::size_t slack      = 2;  // extra e/t letters allowed
    std::size_t max_states = 2'000'000;
  };

  //! A derivation between u and v over R11-R21 with SymGroup macros, or
  //! nothing when the bound is hit.
  [[nodiscard]] std::optional<Certificate>
  connect(Word const& u, Word const& v, Limits const& limits = {});

}  // namespace partmon::setrw

#endif  // PARTMON_SRC_SETRW_HPP_
