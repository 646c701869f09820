#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hgmd {

enum class ErrorCode {
    InvalidParams,
    InvalidVertex,
    InvalidPair,
    Unreachable,
    DisconnectedGraph,
    Unsupported,
    InvalidBlock,
    IsLandmark,
    NotApplicable,
    InvalidOrder,
    NotFound,
    ParseError,
    BudgetExceeded,
};

std::string_view to_string(ErrorCode code);

// All library failures are reported through this type; code() tells the
// caller which contract was violated.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace hgmd
