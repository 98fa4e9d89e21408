#ifndef PARTMON_EXCEPTION_HPP_
#define PARTMON_EXCEPTION_HPP_

#include <cstddef>    // for size_t
#include <stdexcept>  // for runtime_error
#include <string>     // for string

namespace partmon {

  //! Base class for every error thrown by this library.
  class Exception : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  //! Thrown when two values of different degree are combined.
  class DegreeMismatch : public Exception {
   public:
    DegreeMismatch(std::size_t lhs, std::size_t rhs);
  };

  //! Thrown by the text parsers; carries the offset of the offending
  //! character in the input.
  class ParseError : public Exception {
   public:
    ParseError(std::string const& msg, std::size_t pos);

    [[nodiscard]] std::size_t position() const noexcept {
      return _pos;
    }

   private:
    std::size_t _pos;
  };

  //! Thrown when an argument violates a documented precondition.
  class InvalidArgument : public Exception {
   public:
    using Exception::Exception;
  };

}  // namespace partmon

#endif  // PARTMON_EXCEPTION_HPP_
