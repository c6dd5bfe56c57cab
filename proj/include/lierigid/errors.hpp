#pragma once

#include <stdexcept>
#include <string>

namespace lierigid {

/// Bad user-supplied data. `field()` names the offending input item so the
/// CLI can point at it.
class InputError : public std::invalid_argument {
public:
    InputError(std::string field, const std::string& what)
        : std::invalid_argument(field + ": " + what), field_(std::move(field))
    {
    }
    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

/// Shapes of vectors or matrices do not agree.
class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A vanishing factor makes a closed-form expression undefined at the
/// requested point. `factor()` names it.
class DegenerateError : public std::domain_error {
public:
    DegenerateError(std::string factor, const std::string& what)
        : std::domain_error(what), factor_(std::move(factor))
    {
    }
    const std::string& factor() const noexcept { return factor_; }

private:
    std::string factor_;
};

/// A computation violated an identity that must hold exactly (for example
/// d1 o d0 != 0). Indicates a bug, never bad input.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace lierigid
