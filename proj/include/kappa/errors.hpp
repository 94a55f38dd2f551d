#pragma once

#include <stdexcept>
#include <string>

namespace kappa {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error { using Error::Error; };
struct NotFinite : Error { using Error::Error; };
struct NotHermitian : Error { using Error::Error; };
struct NotPositiveSemidefinite : Error { using Error::Error; };
struct NotPositiveDefinite : Error { using Error::Error; };
struct NonConvergence : Error { using Error::Error; };
struct SingularPower : Error { using Error::Error; };
struct InvalidExponent : Error { using Error::Error; };
struct InvalidNormSpec : Error { using Error::Error; };
struct ExponentMismatch : Error { using Error::Error; };
struct NegativeGap : Error { using Error::Error; };
struct ReproductionFailure : Error { using Error::Error; };
struct ConfigError : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };

}  // namespace kappa
