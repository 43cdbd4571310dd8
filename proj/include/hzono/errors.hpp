#ifndef HZONO_ERRORS_HPP_
#define HZONO_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace hzono {

// Base of every error the library throws.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

class FormMismatch : public Error {
public:
    using Error::Error;
};

class EnumerationCapExceeded : public Error {
public:
    using Error::Error;
};

class LevelOutOfRange : public Error {
public:
    using Error::Error;
};

class OverlappingIndexSets : public Error {
public:
    using Error::Error;
};

class EmptyList : public Error {
public:
    using Error::Error;
};

class EmptyInterval : public Error {
public:
    using Error::Error;
};

class EmptySet : public Error {
public:
    using Error::Error;
};

class UnboundedDirection : public Error {
public:
    using Error::Error;
};

// Simplex breakdown (singular basis, iteration limit). Not the same as an
// infeasible program.
class NumericalFailure : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace hzono

#endif  // HZONO_ERRORS_HPP_
