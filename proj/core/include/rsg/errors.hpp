#ifndef RSG_ERRORS_HPP
#define RSG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace rsg {

  // Base of every error raised by the library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // Malformed tables, out-of-range indices, relations that are not what the
  // caller claimed (e.g. a partition that is not a congruence).
  class InputError : public Error {
   public:
    using Error::Error;
  };

  // The input is well formed but a hypothesis of the requested operation
  // does not hold (e.g. asking for kappa on a non-proper semigroup).
  class PreconditionError : public Error {
   public:
    using Error::Error;
  };

  // A hard-coded enumeration bound was exceeded.
  class ResourceError : public Error {
   public:
    using Error::Error;
  };

  // A mathematical fact that must hold failed to hold; indicates a bug.
  class InternalError : public Error {
   public:
    using Error::Error;
  };

}  // namespace rsg

#endif  // RSG_ERRORS_HPP
