#ifndef BIHOM_ERROR_HPP
#define BIHOM_ERROR_HPP

#include <stdexcept>
#include <string>

namespace bihom {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed input: bad file contents, shape mismatches, out-of-range indices.
class InputError : public Error {
public:
    explicit InputError(const std::string& what) : Error(what) {}
};

/// A construction was invoked on inputs that do not satisfy its contract
/// (e.g. an unvalidated algebra where a validated one is required).
class ContractError : public Error {
public:
    explicit ContractError(const std::string& what) : Error(what) {}
};

/// A mathematical precondition failed on otherwise well-formed input; the
/// message names the violated condition and a witness when one exists.
class PreconditionError : public Error {
public:
    explicit PreconditionError(const std::string& what) : Error(what) {}
};

} // namespace bihom

#endif
