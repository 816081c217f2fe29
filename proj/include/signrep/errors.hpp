#pragma once

#include <stdexcept>
#include <string>

namespace signrep {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Bad input or a violated documented precondition.
struct PreconditionError : Error {
  using Error::Error;
};

// A size cap or the pivot limit was hit. Never means "infeasible".
struct ResourceError : Error {
  using Error::Error;
};

// An exact re-check of a constructed object failed.
struct VerificationError : Error {
  using Error::Error;
};

// A dyadic surrogate was not fine enough to certify an inequality.
struct PrecisionError : Error {
  using Error::Error;
};

inline void require(bool ok, const std::string& what) {
  if (!ok) throw PreconditionError(what);
}

}  // namespace signrep
