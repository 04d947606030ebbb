#pragma once

#include <stdexcept>
#include <string>

namespace adw {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero") {}
    explicit DivisionByZero(const std::string& what) : Error(what) {}
};

struct ParseError : Error {
    using Error::Error;
};

struct DimensionMismatch : Error {
    using Error::Error;
};

struct SingularMap : Error {
    SingularMap() : Error("linear map is singular") {}
    explicit SingularMap(const std::string& what) : Error(what) {}
};

struct NotAnIdeal : Error {
    NotAnIdeal() : Error("subspace is not an ideal") {}
    explicit NotAnIdeal(const std::string& what) : Error(what) {}
};

struct UnknownId : Error {
    explicit UnknownId(const std::string& id) : Error("unknown catalog id: " + id) {}
};

struct ConstraintViolated : Error {
    using Error::Error;
};

struct NotAutomorphism : Error {
    using Error::Error;
};

struct UnknownSuite : Error {
    explicit UnknownSuite(const std::string& id) : Error("unknown suite id: " + id) {}
};

struct UnknownCase : Error {
    explicit UnknownCase(const std::string& id) : Error("unknown probe case id: " + id) {}
};

struct PrereqFailed : Error {
    using Error::Error;
};

} // namespace adw
