#pragma once

#include <stdexcept>
#include <string>

namespace repalg {

/// Base of every library error. `kind()` is the stable machine-readable tag
/// used by the CLI error JSON.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& detail)
        : std::runtime_error(detail), kind_(std::move(kind)) {}

    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

struct ShapeError : Error {
    explicit ShapeError(const std::string& d) : Error("shape-mismatch", d) {}
};

struct FieldMismatch : Error {
    explicit FieldMismatch(const std::string& d) : Error("field-mismatch", d) {}
};

struct UnsupportedRing : Error {
    explicit UnsupportedRing(const std::string& d) : Error("unsupported-ring", d) {}
};

struct MixedRings : Error {
    explicit MixedRings(const std::string& d) : Error("mixed-rings", d) {}
};

struct DomainError : Error {
    explicit DomainError(const std::string& d) : Error("domain-error", d) {}
};

/// Two computations that must agree did not. Always a bug, never bad input.
struct InvariantBreach : Error {
    explicit InvariantBreach(const std::string& d) : Error("invariant-breach", d) {}
};

struct ParseError : Error {
    ParseError(std::string kind, const std::string& d) : Error(std::move(kind), d) {}
};

}  // namespace repalg
