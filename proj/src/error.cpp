#include "charsum/error.hpp"

namespace charsum {

std::string_view errc_name(Errc code) noexcept {
    switch (code) {
        case Errc::NonPrime: return "NonPrime";
        case Errc::SizeCapExceeded: return "SizeCapExceeded";
        case Errc::IrreducibleSearchFailed: return "IrreducibleSearchFailed";
        case Errc::InvalidParams: return "InvalidParams";
        case Errc::DivisionByZero: return "DivisionByZero";
        case Errc::LogOfZero: return "LogOfZero";
        case Errc::InvalidDivisor: return "InvalidDivisor";
        case Errc::ZeroPolynomial: return "ZeroPolynomial";
        case Errc::ConstantPolynomial: return "ConstantPolynomial";
        case Errc::NonSplittingPolynomial: return "NonSplittingPolynomial";
        case Errc::BothZero: return "BothZero";
        case Errc::IndexOutOfRange: return "IndexOutOfRange";
        case Errc::NonDivisorOrder: return "NonDivisorOrder";
        case Errc::EmptyCoordinateSet: return "EmptyCoordinateSet";
        case Errc::EmptyProduct: return "EmptyProduct";
        case Errc::InconsistentContext: return "InconsistentContext";
        case Errc::PrereqUnmet: return "PrereqUnmet";
        case Errc::DomainError: return "DomainError";
        case Errc::PreconditionROutOfRange: return "PreconditionROutOfRange";
        case Errc::FactorizationTooLarge: return "FactorizationTooLarge";
        case Errc::ParseError: return "ParseError";
    }
    return "Unknown";
}

}  // namespace charsum
