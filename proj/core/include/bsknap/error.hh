#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bsknap
{
    class Error : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    /// Malformed surface syntax. `position` is a 1-based token index or line
    /// number depending on the producer; 0 when not applicable.
    class ParseError : public Error
    {
    public:
        ParseError(const std::string & message, std::size_t position);

        [[nodiscard]] auto position() const noexcept -> std::size_t { return _position; }

    private:
        std::size_t _position;
    };

    class AlphabetMismatch : public Error
    {
    public:
        using Error::Error;
    };

    class InvalidArgument : public Error
    {
    public:
        using Error::Error;
    };

    /// Track cap or letter-code width exceeded.
    class ResourceLimit : public Error
    {
    public:
        using Error::Error;
    };

    /// A recovered witness failed verification, or some other condition that
    /// only an implementation bug can produce.
    class InternalError : public Error
    {
    public:
        using Error::Error;
    };
}
