#ifndef FRACLEG_ERRORS_HPP
#define FRACLEG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fracleg {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// argument outside the function's real domain
struct DomainError : Error { using Error::Error; };
// gamma function (or a normalization built on it) evaluated at a pole
struct PoleError : Error { using Error::Error; };
struct ConvergenceError : Error { using Error::Error; };
struct UnsupportedIndexError : Error { using Error::Error; };
struct UnsupportedCurveError : Error { using Error::Error; };
struct SingularLadderError : Error { using Error::Error; };
struct StabilityError : Error { using Error::Error; };
struct DegenerateParameterError : Error { using Error::Error; };
struct DegenerateReflectionError : Error { using Error::Error; };
struct NegativeRadicandError : Error { using Error::Error; };
struct InternalError : Error { using Error::Error; };

namespace detail {

inline double require_finite(double v, const char* what) {
  if (!(v - v == 0.0)) throw DomainError(std::string(what) + ": non-finite result");
  return v;
}

}  // namespace detail
}  // namespace fracleg

#endif
