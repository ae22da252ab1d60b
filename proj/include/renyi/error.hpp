#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace renyi {

enum class ErrorKind {
    EmptyInput,
    NonFinite,
    NegativeWeight,
    NotNormalizable,
    NotNormalized,
    NotHermitian,
    NoConvergence,
    NegativeEigenvalue,
    TraceNotOne,
    DomainError,
    InvalidOrder,
    NonpositiveTemperature,
    ZeroProbability,
    DegenerateOrder,
    ZeroPoint,
    InvalidInput,
};

/// Human-readable name of the violated invariant, e.g. "degenerate order".
std::string_view describe(ErrorKind kind) noexcept;

/// Every validation failure in the library is reported through this type.
class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string &detail)
        : std::runtime_error(std::string(describe(kind)) + ": " + detail), kind_(kind) {}

    [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

  private:
    ErrorKind kind_;
};

} // namespace renyi
