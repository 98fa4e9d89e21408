//
// Bounded bidirectional breadth-first search for a derivation between two
// words using a fixed list of relation instances.
//

#ifndef PARTMON_SEARCH_HPP_
#define PARTMON_SEARCH_HPP_

#include <cstddef>   // for size_t
#include <optional>  // for optional
#include <vector>    // for vector

#include "partmon/certificate.hpp"
#include "partmon/relations.hpp"

namespace partmon {

  struct SearchLimits {
    //! Words longer than this are not explored; 0 means the longer of the
    //! two endpoints plus \c slack.
    std::size_t max_length = 0;
    std::size_t slack      = 2;
    //! Total number of visited words before giving up.
    std::size_t max_states = 4'000'000;
  };

  //! Rewrites with the instances in both directions. The exploration order
  //! is fixed, so the returned certificate is deterministic. Returns nothing
  //! if the limits are hit first.
  [[nodiscard]] std::optional<Certificate>
  bidirectional_search(Word const&                          u,
                       Word const&                          v,
                       std::vector<RelationInstance> const& relations,
                       SearchLimits const&                  limits = {});

  //! A one-step certificate u -> v by one of the relations, if there is one.
  [[nodiscard]] std::optional<Certificate>
  single_step(Word const& u, Word const& v, std::vector<RelationInstance> const& relations);

  //! instantiate_relations for a family, computed once per degree.
  [[nodiscard]] std::vector<RelationInstance> const&
  cached_family(std::string const& family, degree_type n);

}  // namespace partmon

#endif  // PARTMON_SEARCH_HPP_
