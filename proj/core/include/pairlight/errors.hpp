#pragma once

#include <stdexcept>
#include <string>

namespace pairlight {

/// Raised when an input violates a documented range or precondition.
/// `field()` names the offending parameter (config key, argument name).
class ValidationError : public std::invalid_argument {
public:
    ValidationError(std::string field, const std::string& message)
        : std::invalid_argument(field + ": " + message), field_(std::move(field)) {}

    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

}  // namespace pairlight
