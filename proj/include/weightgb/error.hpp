#ifndef WEIGHTGB_ERROR_HPP
#define WEIGHTGB_ERROR_HPP

#include <stdexcept>
#include <string>

namespace wgb {

/// Base class for all library errors.
struct error : std::runtime_error {
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Mixing values that belong to different ring/field contexts.
struct context_error : error {
    explicit context_error(const std::string& msg) : error(msg) {}
};

/// Input violates a documented precondition (zero polynomial, inhomogeneous
/// element where a form is required, ...).
struct precondition_error : error {
    explicit precondition_error(const std::string& msg) : error(msg) {}
};

/// Polynomial text that does not match the grammar. `offset` is the byte
/// position of the offending token in the input string.
struct parse_error : error {
    std::size_t offset;
    parse_error(const std::string& msg, std::size_t off)
        : error(msg + " (at offset " + std::to_string(off) + ")"), offset(off) {}
};

/// A configured resource limit (iteration cap, window size) was exceeded.
struct resource_error : error {
    explicit resource_error(const std::string& msg) : error(msg) {}
};

/// A seeded random search exhausted its retry budget.
struct search_failure : error {
    explicit search_failure(const std::string& msg) : error(msg) {}
};

/// An internal invariant failed; indicates a bug, not bad input.
struct consistency_error : error {
    explicit consistency_error(const std::string& msg) : error(msg) {}
};

} // namespace wgb

#endif
