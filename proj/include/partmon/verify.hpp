//
// Enumeration of P_n, counting and closure oracles, and the verification
// reports behind the acceptance suite.
//

#ifndef PARTMON_VERIFY_HPP_
#define PARTMON_VERIFY_HPP_

#include <cstdint>     // for uint64_t
#include <functional>  // for function
#include <string>      // for string
#include <vector>      // for vector

#include "partmon/diagram.hpp"
#include "partmon/word.hpp"

namespace partmon {

  //! Bell number by the Bell triangle. Throws InvalidArgument past m = 25
  //! (the last value fitting in 64 bits).
  [[nodiscard]] std::uint64_t bell(std::size_t m);

  //! Calls \p f on every diagram of P_n in restricted-growth order over the
  //! slots 1, 1', 2, 2', .... Throws InvalidArgument unless 1 <= n <= 6.
  void for_each_diagram(degree_type n, std::function<void(Diagram const&)> const& f);

  //! All of P_n, in the order of for_each_diagram.
  [[nodiscard]] std::vector<Diagram> enumerate_Pn(degree_type n);

  //! t_ker z_gamma t_coker, where gamma sends the least upper point of each
  //! transversal block to its least lower point. Throws InvalidArgument for
  //! units.
  [[nodiscard]] Word factorize_diagram(Diagram const& d);

  //! One verification check.
  struct Report {
    std::string              check;
    degree_type              n         = 0;
    std::size_t              instances = 0;
    std::size_t              failures  = 0;
    double                   elapsed   = 0;   // seconds
    std::string              detail;          // sizes, seeds, maxima
    std::vector<std::string> messages;        // first few failures

    void fail(std::string msg);

    [[nodiscard]] bool ok() const noexcept {
      return failures == 0;
    }
  };

  struct VerifyOptions {
    std::uint64_t seed    = 20240601;
    std::size_t   samples = 2000;  // random words or pairs where not exhaustive
  };

  //! Closure of {e_r} u {t_ij} under products against the singular part.
  [[nodiscard]] Report verify_generation(degree_type n);

  //! factorize_diagram round trip over P_n \ S_n.
  [[nodiscard]] Report verify_factorization(degree_type n);

  //! Every instance of the family at degree n holds in P_n.
  [[nodiscard]] Report verify_relations(std::string const& family, degree_type n);

  //! eps_r and tau_ij evaluate to e_r and t_ij for all subscripts.
  [[nodiscard]] Report verify_eps_tau(degree_type n);

  //! Normal forms of every word of the test set (exhaustive for n <= 3,
  //! sampled at n = 4): certificates replay with per-word image checks, and
  //! normal-form words correspond one to one with images.
  [[nodiscard]] Report verify_normal_forms(degree_type n, VerifyOptions const& = {});

  //! decide_sim against image equality on all pairs of the same word set
  //! (sampled pairs at n = 4); certificates replay.
  [[nodiscard]] Report verify_decide_sim(degree_type n, VerifyOptions const& = {});

  //! Distinct singular diagrams give distinct normal-form triples, and each
  //! assembled word evaluates back.
  [[nodiscard]] Report verify_completeness(degree_type n);

  //! The per-round quantities of the normal-form engine move strictly in
  //! the right direction (rank by exactly one) over random words.
  [[nodiscard]] Report verify_monotonicity(degree_type n, VerifyOptions const& = {});

  //! decide_approx against image equality: all pairs of words of length <= 3
  //! for n <= 3, sampled pairs at n = 4; certificates replay.
  [[nodiscard]] Report verify_decide_approx(degree_type n, VerifyOptions const& = {});

  //! Certificates over E u T carried through psi replay between the images
  //! of their ends.
  [[nodiscard]] Report verify_psi_transport(degree_type n, VerifyOptions const& = {});

  //! The singular checks together (n <= 4).
  [[nodiscard]] std::vector<Report> verify_singular(degree_type n, VerifyOptions const& = {});

  //! R11-R21, decide_approx, psi transport, and the eps/tau images (n <= 4).
  [[nodiscard]] std::vector<Report> verify_full(degree_type n, VerifyOptions const& = {});

  //! F1-F7, closure of the f_ij, and F-rewriting against image equality
  //! (n <= 4).
  [[nodiscard]] std::vector<Report> verify_insn(degree_type n, VerifyOptions const& = {});

  //! Every word over the alphabet's letters at degree n of length at most
  //! \p max_length, shortest first (the empty word included).
  [[nodiscard]] std::vector<Word>
  all_words(degree_type n, Alphabet a, std::size_t max_length);

  //! The letters of the alphabet at degree n.
  [[nodiscard]] std::vector<Letter> letters_of(degree_type n, Alphabet a);

}  // namespace partmon

#endif  // PARTMON_VERIFY_HPP_
