#pragma once

#include <stdexcept>
#include <string>

namespace sacmt {

/// Root of every error raised by the library. The CLI maps it to exit code 1.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

class InvalidArgument : public Error {
public:
    using Error::Error;
};

}  // namespace sacmt
