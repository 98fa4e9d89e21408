//
// The defining relations R1-R10 (over E u T), R11-R21 (over S u {e, t}),
// F1-F7 (over F) and their z-word images Z1-Z7 (over E u T), as closed lists
// of instances at a given degree.
//
// Relations displayed as chains a = b = c are split into parts with ids such
// as R14.1 (e e = e) and R14.2 (e = e t e).
//

#ifndef PARTMON_RELATIONS_HPP_
#define PARTMON_RELATIONS_HPP_

#include <string>       // for string
#include <string_view>  // for string_view
#include <utility>      // for pair
#include <vector>       // for vector

#include "partmon/word.hpp"

namespace partmon {

  using Substitution = std::vector<std::pair<char, degree_type>>;

  //! A relation with concrete subscripts.
  struct RelationInstance {
    std::string  id;
    Substitution subs;
    Word         lhs;
    Word         rhs;
  };

  enum class Direction : std::uint8_t { forward, backward };

  [[nodiscard]] inline Direction flip(Direction d) noexcept {
    return d == Direction::forward ? Direction::backward : Direction::forward;
  }

  //! Every relation id, e.g. R1, R14.2, F5.1, Z7.
  [[nodiscard]] std::vector<std::string> const& relation_ids();

  //! Ids of a family: "R1-R10", "R11-R21", "F", "Z", or a single relation
  //! name such as "R14" (all parts) or "R14.2".
  [[nodiscard]] std::vector<std::string> family_ids(std::string_view family);

  //! Subscript variables of a relation, in order (e.g. "ijk" for R9).
  [[nodiscard]] std::string const& relation_variables(std::string_view id);

  //! Alphabet of the words of a relation.
  [[nodiscard]] Alphabet relation_alphabet(std::string_view id);

  //! Builds one instance. Throws InvalidArgument for an unknown id, missing
  //! or extra variables, or subscripts violating the side condition.
  [[nodiscard]] RelationInstance make_relation(std::string_view    id,
                                               degree_type         n,
                                               Substitution const& subs);

  //! Shorthand with the subscripts given in variable order.
  [[nodiscard]] RelationInstance
  make_relation(std::string_view id, degree_type n, std::vector<degree_type> const& values);

  //! Every admissible instance of the given ids at degree n.
  [[nodiscard]] std::vector<RelationInstance>
  instantiate_relations(std::vector<std::string> const& ids, degree_type n);

  //! Both sides evaluate to the same diagram.
  [[nodiscard]] bool check_relation_diagrammatically(RelationInstance const& r);

  //! Replaces the occurrence of one side at \p pos by the other. Throws
  //! InvalidArgument on a mismatch.
  [[nodiscard]] Word apply_relation(Word const&             w,
                                    RelationInstance const& r,
                                    std::size_t             pos,
                                    Direction               dir);

  //! "i=1,j=2".
  [[nodiscard]] std::string to_string(Substitution const& subs);

}  // namespace partmon

#endif  // PARTMON_RELATIONS_HPP_
