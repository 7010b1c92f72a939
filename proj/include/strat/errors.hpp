#pragma once

#include <stdexcept>
#include <string>

namespace strat {

// Base class for all toolkit errors that a caller may want to report
// rather than treat as a bug. CLI maps these to exit code 1.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct ParseError : Error {
    using Error::Error;
};
struct ValidationError : Error {
    using Error::Error;
};
struct NotPseudomanifold : Error {
    using Error::Error;
};
struct NonOrientable : Error {
    using Error::Error;
};
struct NonUniformLink : Error {
    using Error::Error;
};
struct NotFull : Error {
    using Error::Error;
};
struct WrongDimension : Error {
    using Error::Error;
};
struct NotWitt : Error {
    using Error::Error;
};
struct DescNotSupported : Error {
    using Error::Error;
};
struct NormalizationViolation : Error {
    using Error::Error;
};

// Internal exact-arithmetic fast path ran out of 64-bit headroom; callers
// retry with arbitrary precision. Never escapes the linear algebra layer.
struct SmallRationalOverflow : std::exception {
    const char* what() const noexcept override { return "int64 rational overflow"; }
};

}  // namespace strat
