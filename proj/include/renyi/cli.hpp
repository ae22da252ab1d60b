#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "renyi/spectral.hpp"

namespace renyi::cli {

/// Process exit codes; a stable contract for scripts.
enum ExitCode : int {
    kSuccess = 0,
    kIoFailure = 1,
    kValidationFailure = 2,
    kIdentityViolation = 3,
};

struct Probabilities {
    std::vector<double> values;
};
struct Energies {
    std::vector<double> values;
};
struct Matrix {
    SquareMatrix values;
};

/// The JSON input/output document: exactly one payload plus optional metadata.
///
///   {"probabilities": [..]} | {"energies": [..]} | {"matrix": {"re": [[..]], "im": [[..]]}}
///   optional "temp0": number, "label": string
struct InputDocument {
    std::variant<Probabilities, Energies, Matrix> payload;
    std::optional<double> temp0;
    std::optional<std::string> label;
};

/// Throws renyi::Error(InvalidInput) on malformed JSON or schema violations.
InputDocument parse_document(std::string_view text);
std::string serialize_document(const InputDocument &doc);

/// Twelve decimals in fixed notation for 1e-4 <= |x| < 1e12 (and zero),
/// twelve significant digits in scientific notation otherwise.
std::string format_scalar(double x);

/// Runs one CLI invocation; `args` excludes the program name.
int run(std::span<const std::string> args, std::istream &in, std::ostream &out, std::ostream &err);

} // namespace renyi::cli
