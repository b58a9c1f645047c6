#pragma once

#include <stdexcept>
#include <string>

namespace brcover {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Shapes that do not fit: ragged rows, non-square determinant, mismatched lengths.
class DimensionError : public Error {
public:
    using Error::Error;
};

// Parameters outside the documented range of an operation.
class DomainError : public Error {
public:
    using Error::Error;
};

// A model lacks data an operation needs (pushforward, branch intersections).
class IncompleteModelError : public Error {
public:
    using Error::Error;
};

// The requested cyclic branched cover does not exist.
class NoSuchCoverError : public Error {
public:
    using Error::Error;
};

}  // namespace brcover
