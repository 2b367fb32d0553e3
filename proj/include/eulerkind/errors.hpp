#pragma once

#include <stdexcept>
#include <string>

namespace eulerkind {

struct ZeroDenominatorError : std::domain_error {
    ZeroDenominatorError() : std::domain_error("rational with zero denominator") {}
};

struct RationalParseError : std::invalid_argument {
    explicit RationalParseError(const std::string& text)
        : std::invalid_argument("cannot parse rational: \"" + text + "\"") {}
};

struct ZeroLambdaError : std::domain_error {
    ZeroLambdaError() : std::domain_error("lambda must be nonzero") {}
};

struct LambdaMinusOneError : std::domain_error {
    LambdaMinusOneError() : std::domain_error("lambda = -1 is a pole of this family") {}
};

struct PoleLambdaError : std::domain_error {
    PoleLambdaError() : std::domain_error("lambda = -1 makes the series base non-invertible") {}
};

struct ZeroConstantTermError : std::domain_error {
    ZeroConstantTermError() : std::domain_error("series reciprocal requires a nonzero constant term") {}
};

struct OrderMismatchError : std::invalid_argument {
    OrderMismatchError() : std::invalid_argument("series operands must have equal order") {}
};

struct IndexBeyondOrderError : std::out_of_range {
    IndexBeyondOrderError() : std::out_of_range("coefficient index exceeds series order") {}
};

struct IndexOutOfRangeError : std::out_of_range {
    explicit IndexOutOfRangeError(const std::string& what) : std::out_of_range(what) {}
};

struct KTooLargeError : std::domain_error {
    KTooLargeError() : std::domain_error("rook count k exceeds the board bound") {}
};

struct UnknownIdentityError : std::invalid_argument {
    explicit UnknownIdentityError(const std::string& id)
        : std::invalid_argument("unknown identity id: " + id) {}
};

struct SingularSystemError : std::runtime_error {
    SingularSystemError() : std::runtime_error("linear system for the conjectured shape is singular") {}
};

} // namespace eulerkind
