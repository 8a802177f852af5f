#pragma once

#include <stdexcept>
#include <string>

namespace gameprob {

struct SourceLoc {
    int line = 0;
    int column = 0;
};

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
    ParseError(SourceLoc loc, const std::string& what)
        : Error(std::to_string(loc.line) + ":" + std::to_string(loc.column) + ": " + what), loc_(loc) {}
    SourceLoc loc() const { return loc_; }

private:
    SourceLoc loc_;
};

class TypeError : public Error {
public:
    TypeError(SourceLoc loc, const std::string& what)
        : Error(std::to_string(loc.line) + ":" + std::to_string(loc.column) + ": " + what), loc_(loc) {}
    SourceLoc loc() const { return loc_; }

private:
    SourceLoc loc_;
};

// Product of symbols, or a symbol without a domain.
class UnsupportedConstraint : public Error {
public:
    using Error::Error;
};

// Play cap, model size cap or brute-force cap exceeded.
class ResourceLimit : public Error {
public:
    using Error::Error;
};

// Broken internal invariant (e.g. probabilities not summing to one).
class InternalError : public Error {
public:
    using Error::Error;
};

}  // namespace gameprob
