//
// Certified identities over E u T: the EZ identities, moving t letters
// through z words, the z-word images Z1-Z7 of the F relations, absorption of
// e letters into z words, and rewriting between T words.
//

#ifndef PARTMON_LEMMAS_HPP_
#define PARTMON_LEMMAS_HPP_

#include <cstdint>   // for uint8_t
#include <optional>  // for optional
#include <utility>   // for pair
#include <vector>    // for vector

#include "partmon/certificate.hpp"
#include "partmon/search.hpp"

namespace partmon {

  using ZPairs = std::vector<std::pair<degree_type, degree_type>>;

  //! The EZ identities, each read left to right:
  //! i_left:   e_i z_ij -> z_ij         i_right:   z_ij e_j -> z_ij
  //! ii_left:  e_j z_ij -> e_i e_j      ii_right:  z_ij e_i -> e_i e_j
  //! ii_square: z_ij z_ij -> e_i e_j    ii_square_swapped: z_ji z_ji -> e_i e_j
  //! iii:      z_ij z_ji -> e_i         iv:        e_k z_ij -> z_ij e_k
  enum class EzPart : std::uint8_t {
    i_left,
    i_right,
    ii_left,
    ii_right,
    ii_square,
    ii_square_swapped,
    iii,
    iv
  };

  [[nodiscard]] Certificate
  ez_certificate(degree_type n, EzPart part, degree_type i, degree_type j, degree_type k = 0);

  //! t_ij z_kl -> z_kl t_{i f, j f} where f is the image of z_kl; needs
  //! k not in {i, j}.
  [[nodiscard]] Certificate
  tijzkl(degree_type n, degree_type i, degree_type j, degree_type k, degree_type l);

  //! t_ij w -> w t_{i w, j w} for a product w of z words with i, j in the
  //! domain of its image.
  [[nodiscard]] Certificate
  twwt(degree_type n, degree_type i, degree_type j, ZPairs const& w);

  //! Derivation of a Z relation instance (lhs -> rhs) by R1-R10.
  [[nodiscard]] Certificate zrel_rewrite(RelationInstance const& z);

  //! u e_i -> u for a product u of z words with i outside the codomain of
  //! its image.
  [[nodiscard]] Certificate absorb_e(degree_type n, ZPairs const& u, degree_type i);

  //! t_A chains per class, classes by least element.
  [[nodiscard]] Word canonical_t_word(Equivalence const& eq);

  //! A single LemmaT macro step from u to v (empty when u == v). Throws
  //! InvalidArgument if the images differ or a word is not over T.
  [[nodiscard]] Certificate semilattice_rewrite(Word const& u, Word const& v);

  //! The same rewrite by elementary R3-R5 steps found by bounded search;
  //! nothing if the bound is hit.
  [[nodiscard]] std::optional<Certificate>
  elaborate_semilattice(Word const& u, Word const& v, SearchLimits const& limits = {});

  //! Replaces every macro step of c by an elementary search result where
  //! one is found within the bound. Returns how many macros remain.
  std::size_t elaborate_macros(Certificate& c, SearchLimits const& limits = {});

}  // namespace partmon

#endif  // PARTMON_LEMMAS_HPP_
