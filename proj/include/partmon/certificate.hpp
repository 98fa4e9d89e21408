//
// Certificates: replayable sequences of relation applications between two
// words, with a JSON-lines serialization.
//

#ifndef PARTMON_CERTIFICATE_HPP_
#define PARTMON_CERTIFICATE_HPP_

#include <cstddef>  // for size_t
#include <iosfwd>   // for istream, ostream
#include <string>   // for string
#include <vector>   // for vector

#include "partmon/relations.hpp"
#include "partmon/word.hpp"

namespace partmon {

  //! The two externally justified rewrites: equality of T-words with equal
  //! image (LemmaT) and of S-words with equal permutation (SymGroup).
  enum class Macro : std::uint8_t { LemmaT, SymGroup };

  [[nodiscard]] std::string to_string(Macro m);

  //! One rewrite. Elementary steps name a relation instance; macro steps
  //! replace the subword \c from at \c pos by \c to.
  struct Step {
    bool         is_macro = false;
    std::string  rel;
    Substitution subs;
    std::size_t  pos = 0;
    Direction    dir = Direction::forward;
    Macro        macro = Macro::LemmaT;
    Word         from;
    Word         to;

    friend bool operator==(Step const&, Step const&) = default;
  };

  //! Cached instance lookup used by replay and the rewrite engine.
  [[nodiscard]] RelationInstance const&
  cached_relation(std::string const& id, degree_type n, Substitution const& subs);

  //! Applies one step to \p w; throws InvalidArgument if it does not apply.
  [[nodiscard]] Word apply_step(Word const& w, Step const& s);

  class Certificate {
   public:
    Certificate() = default;
    explicit Certificate(Word start) : _start(start), _end(std::move(start)) {}
    Certificate(Word start, std::vector<Step> steps, Word end)
        : _start(std::move(start)), _steps(std::move(steps)), _end(std::move(end)) {}

    [[nodiscard]] Word const& start() const noexcept {
      return _start;
    }
    [[nodiscard]] Word const& end() const noexcept {
      return _end;
    }
    [[nodiscard]] std::vector<Step> const& steps() const noexcept {
      return _steps;
    }
    [[nodiscard]] std::size_t size() const noexcept {
      return _steps.size();
    }
    [[nodiscard]] degree_type degree() const noexcept {
      return _start.degree();
    }

    [[nodiscard]] std::size_t number_of_macro_steps() const;

    //! From end to start.
    [[nodiscard]] Certificate reversed() const;

    //! The same rewrites inside prefix * start * suffix.
    [[nodiscard]] Certificate embedded(Word const& prefix, Word const& suffix) const;

    //! this then \p next; requires end() == next.start().
    [[nodiscard]] Certificate then(Certificate const& next) const;

   private:
    Word              _start;
    std::vector<Step> _steps;
    Word              _end;
  };

  //! Outcome of a replay.
  struct ReplayResult {
    bool        ok = true;
    std::size_t failed_step = 0;  // index of the first bad step
    std::string message;
  };

  //! Applies every step from start(), checks that the result is end(), and
  //! optionally that every intermediate word has the same image as start()
  //! and that each macro step joins words of equal image.
  [[nodiscard]] ReplayResult replay(Certificate const& c, bool check_images = true);

  //! How replay checks images. \c relations checks each relation instance
  //! used (once per instance) instead of every intermediate word; since
  //! evaluation is a homomorphism this implies the same property, and it is
  //! much cheaper on long certificates.
  enum class ImageCheck : std::uint8_t { none, relations, words };

  [[nodiscard]] ReplayResult replay(Certificate const& c, ImageCheck mode);

  //! Builds a certificate step by step from a start word.
  class Derivation {
   public:
    explicit Derivation(Word start) : _start(start), _current(std::move(start)) {}

    [[nodiscard]] Word const& current() const noexcept {
      return _current;
    }
    [[nodiscard]] Word const& start() const noexcept {
      return _start;
    }
    [[nodiscard]] degree_type degree() const noexcept {
      return _current.degree();
    }
    [[nodiscard]] std::vector<Step> const& steps() const noexcept {
      return _steps;
    }

    //! Apply an instance given by id and subscripts in variable order.
    void apply(std::string const&              id,
               std::vector<degree_type> const& values,
               std::size_t                     pos,
               Direction                       dir = Direction::forward);

    void apply(RelationInstance const& r, std::size_t pos, Direction dir);

    //! Replace letters [pos, pos + len) by \p to, checked by evaluation.
    void macro(Macro m, std::size_t pos, std::size_t len, Word const& to);

    //! Replays the steps of \p c with positions shifted by \p pos; the
    //! current word must contain c.start() at pos.
    void append(Certificate const& c, std::size_t pos = 0);

    [[nodiscard]] Certificate certificate() const {
      return Certificate(_start, _steps, _current);
    }

   private:
    Word              _start;
    Word              _current;
    std::vector<Step> _steps;
  };

  //! JSON lines: a header {"degree", "alphabet", "start", "end", "steps"}
  //! followed by one record per step.
  void write_jsonl(std::ostream& os, Certificate const& c);
  [[nodiscard]] std::string to_jsonl(Certificate const& c);

  //! Throws ParseError on malformed input (the position is the line number).
  [[nodiscard]] Certificate read_jsonl(std::istream& is);
  [[nodiscard]] Certificate from_jsonl(std::string const& s);

}  // namespace partmon

#endif  // PARTMON_CERTIFICATE_HPP_
