#pragma once

#include <stdexcept>
#include <string>

namespace weylbkk {

enum class Errc {
    RingMismatch,
    DivisionByZero,
    NoInverse,
    NotPositiveCharacteristic,
    NotInFrobeniusImage,
    EmptyInput,
    Mismatch,
    NotCentral,
    NotDivisibleByP,
    NotCentralResult,
    RelationViolation,
    NotSymplectic,
    ParseError,
    IndexOutOfRange,
    LiteralNotInRing,
    Overflow,
    PreconditionViolated,
    InvalidArgument,
};

const char* errc_name(Errc c);

/// Single exception type for all algebraic failures; `code()` identifies the kind.
class AlgebraError : public std::runtime_error {
public:
    AlgebraError(Errc code, const std::string& msg)
        : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) {
    throw AlgebraError(code, msg);
}

} // namespace weylbkk
