#pragma once

#include <stdexcept>
#include <string>

namespace indexcoding {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SizeLimitExceeded : Error {
    using Error::Error;
};
struct InvalidParams : Error {
    using Error::Error;
};
struct RateTooHigh : Error {
    using Error::Error;
};
struct DimensionMismatch : Error {
    using Error::Error;
};
struct NotBidirectional : Error {
    using Error::Error;
};
struct NotASinkPartition : Error {
    using Error::Error;
};
struct InvalidCode : Error {
    using Error::Error;
};
struct NotACliquePartition : Error {
    using Error::Error;
};
struct NoSuchEdge : Error {
    using Error::Error;
};
struct DataFileMissing : Error {
    using Error::Error;
};
struct UnknownSuite : Error {
    using Error::Error;
};

/// Raised by the file parsers; carries the 1-based input line.
struct ParseError : Error {
    int line;
    ParseError(const std::string& msg, int line_) : Error(msg + " (line " + std::to_string(line_) + ")"), line(line_) {}
};

}  // namespace indexcoding
