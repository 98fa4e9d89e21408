//
// Certified reduction of words over E u T to the normal form
// t_eps z_alpha t_eta, and the word problem for P_n \ S_n built on it.
//

#ifndef PARTMON_NORMAL_FORM_HPP_
#define PARTMON_NORMAL_FORM_HPP_

#include <optional>  // for optional
#include <vector>    // for vector

#include "partmon/insn.hpp"

namespace partmon {

  //! The data of a normal form and its assembled word.
  struct NormalForm {
    Equivalence eps;    // ker of the image
    PartialPerm alpha;  // min(A_i) -> min(B_i) over transversal blocks
    Equivalence eta;    // coker of the image
    Word        word;   // t_eps z_alpha t_eta

    friend bool operator==(NormalForm const& x, NormalForm const& y) {
      return x.eps == y.eps && x.alpha == y.alpha && x.eta == y.eta;
    }
  };

  //! Reads the normal form off a singular diagram of degree >= 2. Throws
  //! InvalidArgument for units.
  [[nodiscard]] NormalForm normal_form_of(Diagram const& d);

  //! w ~ w1 w2 w3 with w1, w3 over T and w2 a product of z words.
  struct W123 {
    Word        w1;
    ZPairs      w2;
    Word        w3;
    Certificate cert;
  };

  //! w ~ t_eps u t_eta with u a product of z words.
  struct TUT {
    Equivalence eps;
    ZPairs      u;
    Equivalence eta;
    Certificate cert;
  };

  //! Quantities tracked per round: |n/lambda| + |n/rho| while coarsening,
  //! rank of the middle factor while dropping rank, and the agreement count
  //! with alpha while moving to block minima. The first entry of each is
  //! the value before the first round.
  struct NormalFormTrace {
    std::vector<std::size_t> tut1_k;
    std::vector<std::size_t> tut2_rank;
    std::vector<std::size_t> tut3_k;
  };

  //! All of these need a nonempty word over E u T of degree >= 2.
  [[nodiscard]] W123 to_w123(Word const& w);
  [[nodiscard]] TUT  to_tut1(Word const& w, NormalFormTrace* trace = nullptr);
  [[nodiscard]] TUT  to_tut2(Word const& w, NormalFormTrace* trace = nullptr);

  //! The normal form of w and a certificate from w to its word. Throws
  //! Exception if a monotonicity check fails.
  [[nodiscard]] std::pair<NormalForm, Certificate>
  normal_form_ET(Word const& w, NormalFormTrace* trace = nullptr);

  struct Decision {
    bool                       equal = false;
    std::optional<Certificate> certificate;  // u -> v when equal
  };

  //! u ~ v decided through the normal form.
  [[nodiscard]] Decision decide_sim(Word const& u, Word const& v);

}  // namespace partmon

#endif  // PARTMON_NORMAL_FORM_HPP_
