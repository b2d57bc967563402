#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace panekit {

enum class ErrorCode {
    DoesNotFit,
    BadLimits,
    BadRect,
    BadDisplay,
    NoSuchWindow,
    ZeroArea,
    NotExposed,
    SameWindow,
    StalePlan,
    NothingToRestore,
    LockedTarget,
    NoRequiredComponent,
    BadComponent,
    DisplayTooSmall,
    NonMonotonicTime,
    AlreadyExposed,
    BadState,
    ClockRegression,
    BadMode,
    BadConfig,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Error raised by every engine operation. The code is the stable part;
/// the message is for humans.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace panekit
