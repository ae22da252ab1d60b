#include "renyi/error.hpp"

namespace renyi {

std::string_view describe(ErrorKind kind) noexcept {
    switch (kind) {
    case ErrorKind::EmptyInput: return "empty input";
    case ErrorKind::NonFinite: return "non-finite value";
    case ErrorKind::NegativeWeight: return "negative weight";
    case ErrorKind::NotNormalizable: return "not normalizable";
    case ErrorKind::NotNormalized: return "not normalized";
    case ErrorKind::NotHermitian: return "not hermitian";
    case ErrorKind::NoConvergence: return "no convergence";
    case ErrorKind::NegativeEigenvalue: return "negative eigenvalue";
    case ErrorKind::TraceNotOne: return "trace not one";
    case ErrorKind::DomainError: return "domain error";
    case ErrorKind::InvalidOrder: return "invalid order";
    case ErrorKind::NonpositiveTemperature: return "nonpositive temperature";
    case ErrorKind::ZeroProbability: return "zero probability";
    case ErrorKind::DegenerateOrder: return "degenerate order";
    case ErrorKind::ZeroPoint: return "zero point";
    case ErrorKind::InvalidInput: return "invalid input";
    }
    return "unknown error";
}

} // namespace renyi
