#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace picalb {

enum class ErrorCode {
    InvalidArgument,
    ShapeMismatch,
    NonCofinite,
    InsufficientTruncation,
    UnstableTruncation,
    NotMonomialUnibranch,
    Disconnected,
    MissingCount,
    Schema,
};

/// Stable identifier used in CLI diagnostics, e.g. "NON_COFINITE".
std::string_view error_name(ErrorCode code);

/// All recoverable failures of the library carry one of the codes above.
/// Internal invariant breaches are reported as std::logic_error instead.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& detail)
        : std::runtime_error(detail), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace picalb
