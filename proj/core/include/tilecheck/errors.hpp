#pragma once

#include <stdexcept>
#include <string>

namespace tilecheck {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed input file; the message carries line/field context.
class ParseError : public Error {
public:
    using Error::Error;
};

class UnknownName : public Error {
public:
    using Error::Error;
};

class NotFunctional : public Error {
public:
    using Error::Error;
};

class InvalidWalk : public Error {
public:
    using Error::Error;
};

class MismatchedInstance : public Error {
public:
    using Error::Error;
};

class NonIntegerSolution : public Error {
public:
    using Error::Error;
};

class EquivalenceViolation : public Error {
public:
    using Error::Error;
};

class ResourceLimit : public Error {
public:
    ResourceLimit(const std::string& what, long long nodes)
        : Error(what), nodes_(nodes) {}
    long long nodes() const { return nodes_; }

private:
    long long nodes_;
};

class NotReduced : public Error {
public:
    using Error::Error;
};

class CannotComplete : public Error {
public:
    using Error::Error;
};

// An internal consistency check failed. Always a bug.
class VerificationFailed : public Error {
public:
    using Error::Error;
};

} // namespace tilecheck
