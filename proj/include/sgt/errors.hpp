#pragma once

#include <stdexcept>
#include <string>

namespace sgt {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct GroundSetTooLarge : Error {
    explicit GroundSetTooLarge(const std::string& what) : Error(what) {}
};

struct NotAntichain : Error {
    explicit NotAntichain(const std::string& what) : Error(what) {}
};

struct NotRegular : Error {
    explicit NotRegular(const std::string& what) : Error(what) {}
};

struct DimensionMismatch : Error {
    explicit DimensionMismatch(const std::string& what) : Error(what) {}
};

struct UnknownFamily : Error {
    explicit UnknownFamily(const std::string& what) : Error(what) {}
};

struct ParseError : Error {
    int line;
    ParseError(int line_, const std::string& what)
        : Error("line " + std::to_string(line_) + ": " + what), line(line_) {}
};

} // namespace sgt
