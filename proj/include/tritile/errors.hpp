#pragma once

#include <stdexcept>
#include <string>

namespace tritile {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// malformed input file; carries the 1-based line number
struct ParseError : Error {
    ParseError(int line_no, const std::string& what)
        : Error("line " + std::to_string(line_no) + ": " + what), line(line_no) {}
    int line;
};

// a generator could not realize its construction (gadget search exhausted,
// post-check mismatch, ...)
struct ConstructionError : Error {
    using Error::Error;
};

}  // namespace tritile
