//
// The monoid presentation of P_n over S u {e, t}: certified rewriting into
// the image of psi, transport of E u T certificates through psi, and the
// word problem built on them.
//

#ifndef PARTMON_FULL_HPP_
#define PARTMON_FULL_HPP_

#include <utility>  // for pair

#include "partmon/normal_form.hpp"

namespace partmon {

  //! u -> v for words over S with the same permutation: one SymGroup step
  //! (none when u == v).
  [[nodiscard]] Certificate symmetric_rewrite(Word const& u, Word const& v);

  //! w^-1 eps_r w -> eps_{r w} and w^-1 tau_ij w -> tau_{iw, jw} for a word
  //! w over S, where w^-1 is w reversed.
  [[nodiscard]] Certificate conj_eps(Word const& w, degree_type r);
  [[nodiscard]] Certificate conj_tau(Word const& w, degree_type i, degree_type j);

  //! A word u over E u T and a certificate from some word to psi(u).
  struct PsiReduction {
    Word        u;
    Certificate cert;
  };

  //! x s_k (or s_k x when \p s_first) -> psi(u), for x = e_r or t_ij given
  //! as a letter over E u T of degree n.
  [[nodiscard]] PsiReduction absorb_s(Letter x, degree_type n, degree_type k,
                                      bool s_first = false);

  //! psi(lhs) -> psi(rhs) (or back) for an instance of R1-R10.
  [[nodiscard]] Certificate psi_gadget(RelationInstance const& r,
                                       Direction           dir = Direction::forward);

  //! The image under psi of a certificate over E u T: every step replaced
  //! by its gadget. LemmaT steps are first expanded into R3-R5 steps by
  //! bounded search; throws Exception if that fails.
  [[nodiscard]] Certificate psi_transport(Certificate const& c);

  //! w -> psi(u) for a word over S u {e, t} containing e or t. Throws
  //! InvalidArgument for words over S.
  [[nodiscard]] PsiReduction reduce_to_psi(Word const& w);

  //! For w with singular image: its normal form and a certificate from w
  //! to psi of the normal-form word.
  [[nodiscard]] std::pair<NormalForm, Certificate> normal_form_full(Word const& w);

  //! w1 ~ w2 over (R11-R21), decided by image equality and certified.
  [[nodiscard]] Decision decide_approx(Word const& w1, Word const& w2);

}  // namespace partmon

#endif  // PARTMON_FULL_HPP_
