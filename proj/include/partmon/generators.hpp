//
// Named diagrams: the idempotent generators e_r, t_ij, the partial
// permutations f_ij, the Coxeter generators s_i, and diagrams built from
// sets, equivalences and (partial) permutations.
//

#ifndef PARTMON_GENERATORS_HPP_
#define PARTMON_GENERATORS_HPP_

#include <vector>  // for vector

#include "partmon/diagram.hpp"

namespace partmon {

  //! Blocks {r}, {r'} and {k, k'} for k != r.
  [[nodiscard]] Diagram gen_e(degree_type n, degree_type r);

  //! Block {i, j, i', j'} and {k, k'} otherwise; gen_t(n, i, j) ==
  //! gen_t(n, j, i).
  [[nodiscard]] Diagram gen_t(degree_type n, degree_type i, degree_type j);

  //! gen_e(n, i) * gen_t(n, i, j) * gen_e(n, j): the partial permutation
  //! with domain {1..n} \ {i} sending j to i and fixing everything else.
  [[nodiscard]] Diagram gen_f(degree_type n, degree_type i, degree_type j);

  //! The adjacent transposition (i, i + 1), 1 <= i < n.
  [[nodiscard]] Diagram gen_s(degree_type n, degree_type i);

  [[nodiscard]] inline Diagram gen_e1(degree_type n) {
    return gen_e(n, 1);
  }

  [[nodiscard]] inline Diagram gen_tbar(degree_type n) {
    return gen_t(n, 1, 2);
  }

  //! The block A u A' with {k, k'} elsewhere; identity when |A| <= 1.
  [[nodiscard]] Diagram t_of_set(degree_type n, std::vector<degree_type> const& A);

  //! The idempotent block bijection with blocks A u A' for the classes A.
  [[nodiscard]] Diagram t_of_equivalence(Equivalence const& eq);

  //! \p perm lists the images of 1..n. Throws InvalidArgument unless it is a
  //! permutation.
  [[nodiscard]] Diagram perm_diagram(std::vector<degree_type> const& perm);

  [[nodiscard]] inline Diagram partial_perm_diagram(PartialPerm const& p) {
    return to_diagram(p);
  }

}  // namespace partmon

#endif  // PARTMON_GENERATORS_HPP_
