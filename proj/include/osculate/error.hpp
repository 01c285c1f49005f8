#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace osculate {

enum class ErrorKind {
    DuplicateNode,
    NonFiniteInput,
    Overflow,
    ShapeMismatch,
    WrongOrder,
    OrderTooLarge,
    SizeLimit,
    SingularSystem,
    ParseError,
    SchemaError,
    ValidationError,
    BadGridSpec,
};

constexpr std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::DuplicateNode: return "DuplicateNode";
        case ErrorKind::NonFiniteInput: return "NonFiniteInput";
        case ErrorKind::Overflow: return "Overflow";
        case ErrorKind::ShapeMismatch: return "ShapeMismatch";
        case ErrorKind::WrongOrder: return "WrongOrder";
        case ErrorKind::OrderTooLarge: return "OrderTooLarge";
        case ErrorKind::SizeLimit: return "SizeLimit";
        case ErrorKind::SingularSystem: return "SingularSystem";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::SchemaError: return "SchemaError";
        case ErrorKind::ValidationError: return "ValidationError";
        case ErrorKind::BadGridSpec: return "BadGridSpec";
    }
    return "Unknown";
}

/// Every failure raised by the library carries one of the kinds above.
/// `index()` is set when the failure can be pinned to one input element.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what, std::optional<std::size_t> index = std::nullopt)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind), index_(index) {}

    ErrorKind kind() const noexcept { return kind_; }
    std::optional<std::size_t> index() const noexcept { return index_; }

private:
    ErrorKind kind_;
    std::optional<std::size_t> index_;
};

}  // namespace osculate
