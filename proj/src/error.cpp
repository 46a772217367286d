#include "arecip/error.hpp"

namespace arecip {

const char* to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
        case ErrorKind::Parse: return "ParseError";
        case ErrorKind::NonIrreducibleBase: return "NonIrreducibleBase";
        case ErrorKind::UnsupportedFactorization: return "UnsupportedFactorization";
        case ErrorKind::InsufficientPrecision: return "InsufficientPrecision";
        case ErrorKind::FactorizationTimeout: return "FactorizationTimeout";
        case ErrorKind::RootFindingDivergence: return "RootFindingDivergence";
        case ErrorKind::EvaluationAtZero: return "EvaluationAtZero";
        case ErrorKind::ReductionUndefined: return "ReductionUndefined";
        case ErrorKind::NotExact: return "NotExact";
        case ErrorKind::WindowTooSmall: return "WindowTooSmall";
        case ErrorKind::NonCommuting: return "NonCommuting";
        case ErrorKind::DegeneratePosition: return "DegeneratePosition";
        case ErrorKind::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

}  // namespace arecip
