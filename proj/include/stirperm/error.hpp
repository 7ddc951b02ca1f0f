#pragma once

#include <stdexcept>
#include <string>

namespace stirperm {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed word or pattern text, or a word that violates a type invariant.
class ParseError : public Error {
public:
    using Error::Error;
};

class BadPattern : public Error {
public:
    using Error::Error;
};

class NotAvoider : public Error {
public:
    using Error::Error;
};

class InvalidPair : public Error {
public:
    using Error::Error;
};

// An exact division left a remainder.
class DivisibilityError : public Error {
public:
    using Error::Error;
};

class CompositionError : public Error {
public:
    using Error::Error;
};

class NonPolynomialResult : public Error {
public:
    using Error::Error;
};

class UnknownEquation : public Error {
public:
    using Error::Error;
};

class LimitExceeded : public Error {
public:
    using Error::Error;
};

}  // namespace stirperm
