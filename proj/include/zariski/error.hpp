#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace zariski {

enum class ErrorCode {
    DivisionByZero,
    ModulusMismatch,
    InvalidModulus,
    DegenerateInput,
    SingularCurve,
    PointOffCurve,
    TorsionNotRational,
    InflectionBasePoint,
    FanNotRational,
    DegenerateFan,
    NotTangentConfiguration,
    BadIndexPair,
    DuplicateBasePoint,
    DuplicateLine,
    ConcurrentLines,
    IndexOutOfRange,
    SamePairQuery,
    BadPartition,
    InsufficientPoints,
    BadInput,
};

std::string_view to_string(ErrorCode code) noexcept;

// Every failure in the library is reported through this type; the code is
// what the command line front end prints as the machine-readable field.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace zariski
