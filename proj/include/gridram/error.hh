#ifndef GRIDRAM_ERROR_HH
#define GRIDRAM_ERROR_HH

#include <stdexcept>
#include <string>

namespace gridram
{
    class Error : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    /// Bad parameters or a violated precondition.
    class InvalidArgument : public Error
    {
    public:
        using Error::Error;
    };

    /// The instance is larger than a configured size cap (see Caps).
    class CapExceeded : public Error
    {
    public:
        using Error::Error;
    };

    class ParseError : public Error
    {
    public:
        using Error::Error;
    };
}

#endif
