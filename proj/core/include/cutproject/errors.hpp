#ifndef CUTPROJECT_ERRORS_HPP
#define CUTPROJECT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cutproject {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SingularMatrixError : Error { using Error::Error; };
struct CyclicNotDenseError : Error { using Error::Error; };
struct DimensionMismatchError : Error { using Error::Error; };
struct InjectivityViolatedError : Error { using Error::Error; };
struct SignatureMismatchError : Error { using Error::Error; };
struct UnsupportedKindError : Error { using Error::Error; };
struct RegionTooLargeError : Error { using Error::Error; };
struct TooFewPointsError : Error { using Error::Error; };
struct WeightNotInKLError : Error { using Error::Error; };
struct EpsTooSmallError : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };
struct IoError : Error { using Error::Error; };

} // namespace cutproject

#endif
