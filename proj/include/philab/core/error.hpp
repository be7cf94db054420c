#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace philab {

enum class ErrorCode {
    InvalidOrder,
    TooLarge,
    InvalidModulus,
    InvalidModule,
    PhiRingRequired,
    MixedRings,
    BudgetExceeded,
    NotPrime,
    MixedDomains,
    ZeroIdealResidualDividend,
    ZeroIdeal,
    OutOfTableRange,
    NotNonnil,
    NotContained,
    UnsupportedFamily,
    InternalInconsistency,
    ParseError,
    UnknownElement,
};

inline std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::InvalidOrder: return "InvalidOrder";
        case ErrorCode::TooLarge: return "TooLarge";
        case ErrorCode::InvalidModulus: return "InvalidModulus";
        case ErrorCode::InvalidModule: return "InvalidModule";
        case ErrorCode::PhiRingRequired: return "PhiRingRequired";
        case ErrorCode::MixedRings: return "MixedRings";
        case ErrorCode::BudgetExceeded: return "BudgetExceeded";
        case ErrorCode::NotPrime: return "NotPrime";
        case ErrorCode::MixedDomains: return "MixedDomains";
        case ErrorCode::ZeroIdealResidualDividend: return "ZeroIdealResidualDividend";
        case ErrorCode::ZeroIdeal: return "ZeroIdeal";
        case ErrorCode::OutOfTableRange: return "OutOfTableRange";
        case ErrorCode::NotNonnil: return "NotNonnil";
        case ErrorCode::NotContained: return "NotContained";
        case ErrorCode::UnsupportedFamily: return "UnsupportedFamily";
        case ErrorCode::InternalInconsistency: return "InternalInconsistency";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::UnknownElement: return "UnknownElement";
    }
    return "Unknown";
}

/// Every failure raised by the library carries one of the codes above so
/// callers (and the suite runner) can downgrade specific ones to
/// "inconclusive" without string matching.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

class ParseError : public Error {
public:
    ParseError(std::size_t position, const std::string& what)
        : Error(ErrorCode::ParseError, "at position " + std::to_string(position) + ": " + what),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

}  // namespace philab
