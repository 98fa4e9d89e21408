// Internal helpers shared by the rewrite-engine sources: in-place rewrites
// on a Derivation at given positions.

#ifndef PARTMON_SRC_RW_HPP_
#define PARTMON_SRC_RW_HPP_

#include <cstddef>  // for size_t
#include <string>   // for string
#include <utility>  // for pair
#include <vector>   // for vector

#include "partmon/certificate.hpp"

namespace partmon::rw {

  using Pairs = std::vector<std::pair<degree_type, degree_type>>;

  inline constexpr Direction fwd = Direction::forward;
  inline constexpr Direction bwd = Direction::backward;

  void rel(Derivation&                     d,
           char const*                     id,
           std::vector<degree_type> const& values,
           std::size_t                     pos,
           Direction                       dir = fwd);

  //! Replays c (or its reverse) at pos.
  void run(Derivation& d, Certificate const& c, std::size_t pos, bool reverse = false);

  //! x y -> y x for commuting letters (R2, R4 or R6).
  void swap_adjacent(Derivation& d, std::size_t pos);

  //! Moves [pos, pos + len) to the right past the next \p over letters.
  void move_right(Derivation& d, std::size_t pos, std::size_t len, std::size_t over);

  //! Moves [pos, pos + len) to the left past the previous \p over letters.
  void move_left(Derivation& d, std::size_t pos, std::size_t len, std::size_t over);

  // EZ identities at a position, each named by its left-hand side.
  void ez_i_left(Derivation& d, std::size_t pos);    // e_i z_ij -> z_ij
  void ez_i_right(Derivation& d, std::size_t pos);   // z_ij e_j -> z_ij
  void ez_ii_left(Derivation& d, std::size_t pos);   // e_j z_ij -> e_i e_j
  void ez_ii_right(Derivation& d, std::size_t pos);  // z_ij e_i -> e_i e_j
  void ez_ii_square(Derivation& d, std::size_t pos); // z_ij z_ij -> e_i e_j
  void ez_iii(Derivation& d, std::size_t pos);       // z_ij z_ji -> e_i
  void ez_iv(Derivation& d, std::size_t pos);        // e_k z_ij -> z_ij e_k

  //! Inserts z_ij z_ji in place of e_i at pos.
  void expand_e(Derivation& d, std::size_t pos, degree_type j);

  //! Inserts e_i in front of z_ij at pos (inverse of ez_i_left).
  void insert_e_before_z(Derivation& d, std::size_t pos);

  //! The word [start, end) must consist of e letters and z blocks. Removes
  //! the letter e_i at \p end, which needs i outside the codomain of the
  //! image of [start, end).
  void absorb_e_right(Derivation& d, std::size_t start, std::size_t end);

  //! Removes the letter e_a at \p at in front of [at + 1, end), which needs a
  //! outside the domain of the image of that factor.
  void absorb_e_left(Derivation& d, std::size_t at, std::size_t end);

  //! Inserts e_i at \p end, after the factor [start, end) whose image misses
  //! i in its codomain.
  void insert_e_right(Derivation& d, std::size_t start, std::size_t end, degree_type i);

  //! Inserts e_a at \p start, in front of [start, end) whose image misses a
  //! in its domain.
  void insert_e_left(Derivation& d, std::size_t start, std::size_t end, degree_type a);

  //! Reads [start, end) as z blocks and single e letters (pairs (k, l) for
  //! z_kl and (a, 0) for e_a). Throws if the factor has another shape.
  [[nodiscard]] Pairs read_blocks(Word const& w, std::size_t start, std::size_t end);

  //! The partial permutation of a block list.
  [[nodiscard]] PartialPerm blocks_image(degree_type n, Pairs const& blocks);

  //! Image of z_kl as a partial permutation.
  [[nodiscard]] PartialPerm f_image(degree_type n, degree_type k, degree_type l);

  //! Applies a Z relation instance at pos via its certificate.
  void zrel(Derivation& d,
            std::string const& id,
            Substitution const& subs,
            std::size_t pos,
            Direction dir);

}  // namespace partmon::rw

#endif  // PARTMON_SRC_RW_HPP_
