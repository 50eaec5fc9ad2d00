#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "simflow/bigint.hpp"

namespace simflow {

enum class ErrorKind {
    EmptyInput,
    NotPure,
    InvalidSimplex,
    BadParams,
    IndexOutOfRange,
    BadModulus,
    CapExceeded,
    NotABase,
    FacetInBase,
    Infeasible,
    HasBridge,
    NotAFlow,
    LiftFailed,
    RelationMismatch,
    ParseError,
};

std::string_view to_string(ErrorKind kind);

/// Domain error raised by every simflow operation.
///
/// CapExceeded errors carry the exact size that tripped the cap when it is
/// known (kernel sizes, enumeration counts).
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message, std::optional<BigInt> count = std::nullopt)
        : std::runtime_error(std::string(to_string(kind)) + ": " + message),
          kind_(kind),
          count_(std::move(count))
    {
    }

    ErrorKind kind() const noexcept { return kind_; }
    const std::optional<BigInt>& count() const noexcept { return count_; }

private:
    ErrorKind kind_;
    std::optional<BigInt> count_;
};

} // namespace simflow
