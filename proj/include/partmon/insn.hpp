//
// The z-word normal forms of I_n \ S_n: a fixed word z_alpha for every
// singular partial permutation, and certified rewriting of any product of z
// words into it.
//

#ifndef PARTMON_INSN_HPP_
#define PARTMON_INSN_HPP_

#include <cstdint>   // for uint8_t
#include <optional>  // for optional

#include "partmon/lemmas.hpp"
#include "partmon/search.hpp"

namespace partmon {

  //! z_alpha as a list of pairs (k, l) standing for z_kl. Points outside the
  //! domain and codomain give z_pq z_qp (q the least point != p); each
  //! nontrivial cycle is routed through the least point outside the
  //! domain; each maximal chain x_0 -> ... -> x_m gives z_{x_m x_{m-1}} ...
  //! z_{x_1 x_0}. Order: isolated points, cycles, chains, each ascending.
  //! Throws InvalidArgument if alpha has full rank.
  [[nodiscard]] ZPairs z_pairs_for(PartialPerm const& alpha);

  //! The E u T word of z_pairs_for.
  [[nodiscard]] Word z_word_for(PartialPerm const& alpha);

  //! Image of a product of z words.
  [[nodiscard]] PartialPerm z_image(degree_type n, ZPairs const& u);

  //! Rewrites an F certificate into one over E u T, replacing each F step by
  //! the derivation of the matching Z relation.
  [[nodiscard]] Certificate transport_f_certificate(Certificate const& f);

  //! A certificate between two products of z words with equal image, by
  //! bounded search over F1-F7 followed by transport. Nothing if the bound
  //! is hit; throws InvalidArgument if the images differ.
  [[nodiscard]] std::optional<Certificate>
  insn_transport(degree_type n, ZPairs const& u, ZPairs const& v,
                 SearchLimits const& limits = {});

  //! One step of the Cayley graph used by z_canonicalize: appending f_kl to
  //! the normal form of beta when k is not in codom(beta) and l is (Move),
  //! or appending f_kq f_qk (q the least point != k) when k is in
  //! codom(beta) (Kill; l is ignored).
  enum class EdgeKind : std::uint8_t { Move, Kill };

  //! The F-word endpoints of an edge.
  [[nodiscard]] std::pair<Word, Word>
  edge_endpoints(PartialPerm const& beta, EdgeKind kind, degree_type k, degree_type l);

  //! F certificate for an edge, from the shipped table when present and by
  //! bounded search otherwise. Nothing if the search fails.
  [[nodiscard]] std::optional<Certificate>
  edge_certificate(PartialPerm const& beta, EdgeKind kind, degree_type k, degree_type l);

  //! The same by search only (used to build the table).
  [[nodiscard]] std::optional<Certificate>
  search_edge(PartialPerm const& beta, EdgeKind kind, degree_type k, degree_type l,
              SearchLimits const& limits);

  //! Degrees covered by the shipped edge table.
  [[nodiscard]] bool edge_table_covers(degree_type n);

  //! Certificate from the product of z words u to z_word_for of its image.
  //! Throws Exception if an edge certificate cannot be found.
  [[nodiscard]] Certificate z_canonicalize(degree_type n, ZPairs const& u);

  //! Serialized table line for an edge: "n img kind k l steps".
  [[nodiscard]] std::string edge_table_line(PartialPerm const& beta,
                                            EdgeKind           kind,
                                            degree_type        k,
                                            degree_type        l,
                                            Certificate const& c);

}  // namespace partmon

#endif  // PARTMON_INSN_HPP_
