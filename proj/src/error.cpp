#include "panekit/error.hpp"

namespace panekit {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
    case ErrorCode::DoesNotFit: return "DoesNotFit";
    case ErrorCode::BadLimits: return "BadLimits";
    case ErrorCode::BadRect: return "BadRect";
    case ErrorCode::BadDisplay: return "BadDisplay";
    case ErrorCode::NoSuchWindow: return "NoSuchWindow";
    case ErrorCode::ZeroArea: return "ZeroArea";
    case ErrorCode::NotExposed: return "NotExposed";
    case ErrorCode::SameWindow: return "SameWindow";
    case ErrorCode::StalePlan: return "StalePlan";
    case ErrorCode::NothingToRestore: return "NothingToRestore";
    case ErrorCode::LockedTarget: return "LockedTarget";
    case ErrorCode::NoRequiredComponent: return "NoRequiredComponent";
    case ErrorCode::BadComponent: return "BadComponent";
    case ErrorCode::DisplayTooSmall: return "DisplayTooSmall";
    case ErrorCode::NonMonotonicTime: return "NonMonotonicTime";
    case ErrorCode::AlreadyExposed: return "AlreadyExposed";
    case ErrorCode::BadState: return "BadState";
    case ErrorCode::ClockRegression: return "ClockRegression";
    case ErrorCode::BadMode: return "BadMode";
    case ErrorCode::BadConfig: return "BadConfig";
    }
    return "Unknown";
}

} // namespace panekit
