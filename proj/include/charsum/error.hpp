#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace charsum {

enum class Errc {
    NonPrime,
    SizeCapExceeded,
    IrreducibleSearchFailed,
    InvalidParams,
    DivisionByZero,
    LogOfZero,
    InvalidDivisor,
    ZeroPolynomial,
    ConstantPolynomial,
    NonSplittingPolynomial,
    BothZero,
    IndexOutOfRange,
    NonDivisorOrder,
    EmptyCoordinateSet,
    EmptyProduct,
    InconsistentContext,
    PrereqUnmet,
    DomainError,
    PreconditionROutOfRange,
    FactorizationTooLarge,
    ParseError,
};

std::string_view errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

}  // namespace charsum
