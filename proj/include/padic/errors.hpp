#pragma once

#include <stdexcept>
#include <string>

namespace padic {

enum class ErrorCode {
    Usage,
    Parse,
    NotPrime,
    NotMonic,
    NotIrreducible,
    BadDegree,
    NonUnit,
    ZeroDivisorPivot,
    PreconditionFailed,
    InstanceTooLarge,
    InternalInconsistency,
};

/// Library-wide error type. `valuation()` is meaningful only for NonUnit.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, std::string message, long valuation = -1)
        : std::runtime_error(std::move(message)), code_(code), valuation_(valuation) {}

    ErrorCode code() const noexcept { return code_; }
    long valuation() const noexcept { return valuation_; }

private:
    ErrorCode code_;
    long valuation_;
};

const char* error_code_name(ErrorCode code);

[[noreturn]] inline void fail(ErrorCode code, std::string message, long valuation = -1) {
    throw Error(code, std::move(message), valuation);
}

} // namespace padic
