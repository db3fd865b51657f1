#pragma once

#include <stdexcept>
#include <string>

namespace nilschur {

/// Caller-supplied input is outside the documented domain (bad ranges,
/// malformed text, mismatched algebra parameters, ...).
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An internal exact-arithmetic cross-check failed.  This never fires for
/// valid inputs unless the kernel itself is wrong, so it is a logic error.
class ConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Syntax error in expression text; carries the byte offset of the problem.
class ExprError : public InvalidInput {
public:
    ExprError(std::size_t offset, const std::string& message)
        : InvalidInput("syntax error at byte " + std::to_string(offset) + ": " + message),
          offset_(offset) {}

    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

/// A decomposition target is provably outside the spanned lattice.
/// The witness is a printable residual that certifies the failure.
class NotInSpan : public std::runtime_error {
public:
    NotInSpan(const std::string& message, std::string witness)
        : std::runtime_error(message), witness_(std::move(witness)) {}

    const std::string& witness() const { return witness_; }

private:
    std::string witness_;
};

} // namespace nilschur
