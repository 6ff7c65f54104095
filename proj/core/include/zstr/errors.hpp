#pragma once

#include <stdexcept>
#include <string>

namespace zstr {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Argument outside the domain of an operation (sigma < 0, non-finite input, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// s at or near the pole s = 1 of zeta.
class PoleError : public Error {
public:
    using Error::Error;
};

/// |1 - 2^(1-s)| (or a reflection-factor denominator) is too close to zero.
class DenominatorZeroError : public Error {
public:
    using Error::Error;
};

class DegenerateGeometryError : public Error {
public:
    using Error::Error;
};

class IllConditionedError : public Error {
public:
    using Error::Error;
};

class NoZeroInBracketError : public Error {
public:
    using Error::Error;
};

class ClassificationError : public Error {
public:
    using Error::Error;
};

}  // namespace zstr
