#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace braidld {

  // Base of every error thrown by the library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // Letters from two different alphabets met in one word.
  class AlphabetMismatch : public Error {
   public:
    using Error::Error;
  };

  // A reduced word grew beyond the configured maximum length.
  class ResourceCapExceeded : public Error {
   public:
    ResourceCapExceeded(std::size_t length, std::size_t cap)
        : Error("reduced word length " + std::to_string(length)
                + " exceeds cap " + std::to_string(cap)),
          _length(length),
          _cap(cap) {}

    std::size_t length() const noexcept {
      return _length;
    }
    std::size_t cap() const noexcept {
      return _cap;
    }

   private:
    std::size_t _length;
    std::size_t _cap;
  };

  // Malformed textual input (words, braids, terms).
  class ParseError : public Error {
   public:
    using Error::Error;
  };

  // A value violates a domain constraint (braid index 0, empty list, ...).
  class InvalidArgument : public Error {
   public:
    using Error::Error;
  };

  // A braid letter touches a position outside a finite sequence.
  class PositionOutOfRange : public Error {
   public:
    using Error::Error;
  };

  // The partial inverse step of the braid action on term sequences failed.
  class InverseNotApplicable : public Error {
   public:
    using Error::Error;
  };

}  // namespace braidld
