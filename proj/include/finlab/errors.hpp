#pragma once

#include <stdexcept>
#include <string>

namespace finlab {

enum class ErrorCode {
    InvalidArgument,
    UnknownPoint,
    SpanMembership,
    NotUnimodular,
    UndefinedSuppmax,
    EmptySet,
    Normalization,
    FamilySize,
    NotIsometry,
    NotOnto,
    DimensionMismatch,
    Ambiguity,
    NotChoquet,
    TheoremViolation,
    ScaleOutOfBounds,
    UnknownSuite,
    Parse,
};

const char* to_string(ErrorCode code);

/// Base exception for every precondition or contract failure in the library.
class LabError : public std::runtime_error {
public:
    LabError(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace finlab
