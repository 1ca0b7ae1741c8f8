#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace dpd {

// Every failure mode the library distinguishes.  Callers that only care
// about "did it work" can catch Error; the CLI maps codes to exit status
// and diagnostics.
enum class ErrorCode {
    PoleAtPoint,
    ZeroFunction,
    NonGaussianRoots,
    EmptyRemovedSet,
    NotConjugationStable,
    NotReal,
    ValidityViolation,
    PointNotOnCurve,
    RealPointRequired,
    InfinityUnsupported,
    RealPointRemoval,
    ExtensionObstruction,
    NotInPiece,
    RelationFails,
    NotRegular,
    RealPoint,
    ZeroScalar,
    TorsorConstraintViolation,
    CurveMismatch,
    NotAModel,
    ZeroDenominator,
    InvalidTwist,
    InvalidMobius,
    LimitExceeded,
    SyntaxError,
    SemanticError,
    UnknownCommand,
    Internal,
};

const char* error_code_name(ErrorCode c);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, std::string message)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
          code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

// Parse failures carry a source position (1-based line/column).
class ParseError : public Error {
public:
    ParseError(ErrorCode code, std::string message, int line, int column)
        : Error(code, message + " (line " + std::to_string(line) + ", column " +
                          std::to_string(column) + ")"),
          line_(line), column_(column) {}

    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
    throw Error(code, message);
}

} // namespace dpd
