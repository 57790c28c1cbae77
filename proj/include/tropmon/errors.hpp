#ifndef TROPMON_ERRORS_HPP_
#define TROPMON_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace tropmon {

  // Base class of every error thrown by the library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // A finite tropical value left the guard interval [-guard, guard].
  class OverflowError : public Error {
   public:
    using Error::Error;
  };

  // Matrix operands of different dimensions.
  class DimensionError : public Error {
   public:
    using Error::Error;
  };

  // Malformed presentation, word, identity or JSON text.
  class ParseError : public Error {
   public:
    using Error::Error;
  };

  // The requested monoid has no model or no representation (M4, M7).
  class UnsupportedError : public Error {
   public:
    using Error::Error;
  };

  // A model element that is not the image of any word.
  class NoCanonicalWordError : public Error {
   public:
    using Error::Error;
  };

  // A rewriting step budget was exhausted.
  class BudgetExceededError : public Error {
   public:
    using Error::Error;
  };

}  // namespace tropmon

#endif  // TROPMON_ERRORS_HPP_
