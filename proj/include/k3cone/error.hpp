// Exception types shared by all k3cone modules.

#ifndef K3CONE_ERROR_HPP_
#define K3CONE_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace k3cone {

// Base for every error raised on invalid input to the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error {
  using Error::Error;
};

// An argument violates a documented precondition (wrong signature,
// vector that is not a root, degenerate Gram matrix, ...).
struct PreconditionError : Error {
  using Error::Error;
};

// Malformed lattice definitions, cone files or catalogs.
struct ParseError : Error {
  using Error::Error;
};

[[noreturn]] inline void fail(const std::string& msg) { throw PreconditionError(msg); }

inline void check_dims(std::size_t got, std::size_t expected, const char* what) {
  if (got != expected)
    throw DimensionMismatch(std::string(what) + ": expected length " +
                            std::to_string(expected) + ", got " + std::to_string(got));
}

}  // namespace k3cone

#endif
