#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace colorlab {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed graph, edge or assignment input.
class InputError : public Error {
public:
    using Error::Error;
};

/// A construction would exceed the configured vertex cap.
class SizeBudgetError : public Error {
public:
    SizeBudgetError(const std::string& what, std::string required_vertices)
        : Error(what), required_vertices_(std::move(required_vertices))
    {
    }

    /// Closed-form vertex count of the refused object, in decimal.
    const std::string& required_vertices() const { return required_vertices_; }

private:
    std::string required_vertices_;
};

/// A scripted player produced a move that is not legal in its position.
class ScriptError : public Error {
public:
    using Error::Error;
};

}  // namespace colorlab
